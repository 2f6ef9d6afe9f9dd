#include <qh/exact/bigrat.hpp>
#include <qh/errors.hpp>

#include <cctype>

namespace qh {

namespace {

bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return std::string(s);
}

} // namespace

BigRat parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    if (!valid_integer(num))
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    BigRat r;
    if (slash == std::string_view::npos) {
        r = BigRat(BigInt(strip_plus(num)));
    } else {
        auto den = text.substr(slash + 1);
        if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
            throw ParseError("not a rational number: '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        r = BigRat(BigInt(strip_plus(num)), d);
        r.canonicalize();
    }
    return r;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

} // namespace qh
