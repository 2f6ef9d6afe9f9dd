#pragma once

#include <qh/exact/bigrat.hpp>
#include <qh/exact/laurent.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace qh {

// Exponent pair (q-degree, t-degree).
using BiExp = std::pair<int, int>;

// Polynomial in (q, t) with rational coefficients; negative exponents are
// allowed so that Laurent data embeds without loss.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::map<BiExp, BigRat> terms);
    static BiPoly constant(const BigRat& c);
    static BiPoly monomial(const BigRat& c, int qdeg, int tdeg);
    static BiPoly from_laurent(const LaurentPoly& p);

    const std::map<BiExp, BigRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    BigRat coeff(int qdeg, int tdeg) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BigRat& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const BigRat& s) { return a *= s; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly pow(unsigned n) const;

private:
    void add_term(const BiExp& e, const BigRat& c);
    std::map<BiExp, BigRat> terms_;
};

// Returns c with b * c == a; throws NotDivisible otherwise. Division runs
// under the lexicographic order (q-degree, then t-degree).
BiPoly exact_divide(const BiPoly& a, const BiPoly& b);

// Canonical machine form: "c * q^a * t^b" terms joined by " + ", ascending in
// (a, b); "0" for the zero polynomial.
std::string serialize(const BiPoly& p);

enum class TermOrder { ascending, descending };

// Human form, e.g. "1 + q^2 t^4 + q^4 t^8" or "q + 4". Terms are ordered by
// total degree, ties broken by t-degree.
std::string pretty(const BiPoly& p, TermOrder order = TermOrder::ascending);
std::string pretty(const LaurentPoly& p, TermOrder order = TermOrder::ascending);

// Parses both the canonical and the human form. Throws ParseError.
BiPoly parse_bipoly(std::string_view text);

} // namespace qh
