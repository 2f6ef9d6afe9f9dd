#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qh {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation, which is exactly the BigRat invariant.
using BigInt = mpz_class;
using BigRat = mpq_class;

// n/d in lowest terms; d != 0.
inline BigRat frac(long n, long d) {
    BigRat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& z) { return z.get_str(10); }

inline std::string to_string(const BigRat& r) {
    if (is_integer(r))
        return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

// Accepts "17", "-3", "5/6". Throws ParseError otherwise.
BigRat parse_rational(std::string_view text);

BigInt ipow(const BigInt& base, unsigned long exp);

} // namespace qh
