#include <qh/exact/bipoly.hpp>
#include <qh/errors.hpp>

#include <algorithm>
#include <cctype>
#include <vector>

namespace qh {

BiPoly::BiPoly(std::map<BiExp, BigRat> terms) {
    for (auto& [e, c] : terms)
        if (c != 0)
            terms_.emplace(e, std::move(c));
}

BiPoly BiPoly::constant(const BigRat& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const BigRat& c, int qdeg, int tdeg) {
    BiPoly p;
    p.add_term({qdeg, tdeg}, c);
    return p;
}

BiPoly BiPoly::from_laurent(const LaurentPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms())
        r.add_term(p.var() == Var::q ? BiExp{e, 0} : BiExp{0, e}, c);
    return r;
}

void BiPoly::add_term(const BiExp& e, const BigRat& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigRat BiPoly::coeff(int qdeg, int tdeg) const {
    auto it = terms_.find({qdeg, tdeg});
    return it == terms_.end() ? BigRat(0) : it->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BigRat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

BiPoly BiPoly::pow(unsigned n) const {
    BiPoly result = constant(1);
    BiPoly base = *this;
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        n >>= 1u;
        if (n > 0)
            base = base * base;
    }
    return result;
}

BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero())
        throw InvalidArgument("bivariate division by zero");
    // std::map orders pairs lexicographically, so rbegin() is the leading term.
    const auto& [lead_e, lead_c] = *b.terms().rbegin();
    BiPoly rem = a;
    BiPoly quot;
    while (!rem.is_zero()) {
        const auto [re, rc] = *rem.terms().rbegin();
        const int dq = re.first - lead_e.first;
        const int dt = re.second - lead_e.second;
        if (dq < 0 || dt < 0)
            throw NotDivisible("leading term does not divide the remainder");
        BiPoly step = BiPoly::monomial(rc / lead_c, dq, dt);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

std::string serialize(const BiPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first)
            out += " + ";
        first = false;
        out += to_string(c) + " * q^" + std::to_string(e.first) + " * t^" + std::to_string(e.second);
    }
    return out;
}

namespace {

std::string var_power(char v, int e) {
    if (e == 0)
        return {};
    if (e == 1)
        return std::string(1, v);
    return std::string(1, v) + "^" + std::to_string(e);
}

} // namespace

std::string pretty(const BiPoly& p, TermOrder order) {
    if (p.is_zero())
        return "0";
    std::vector<std::pair<BiExp, BigRat>> terms(p.terms().begin(), p.terms().end());
    auto key = [](const BiExp& e) { return std::pair{e.first + e.second, e.second}; };
    std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
        return order == TermOrder::ascending ? key(x.first) < key(y.first)
                                             : key(y.first) < key(x.first);
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        BigRat mag = abs(c);
        std::string mono = var_power('q', e.first);
        std::string tpart = var_power('t', e.second);
        if (!tpart.empty())
            mono += (mono.empty() ? "" : " ") + tpart;
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + " " + mono;
    }
    return out;
}

std::string pretty(const LaurentPoly& p, TermOrder order) {
    return pretty(BiPoly::from_laurent(p), order);
}

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view s) : s_(s) {}

    BiPoly parse() {
        BiPoly result;
        skip_ws();
        if (pos_ == s_.size())
            fail("empty polynomial");
        bool any = false;
        while (pos_ < s_.size()) {
            int sign = read_signs(any);
            result += parse_term() * BigRat(sign);
            any = true;
            skip_ws();
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                         std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    int read_signs(bool need_one) {
        int sign = 1;
        bool seen = false;
        skip_ws();
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            if (s_[pos_] == '-')
                sign = -sign;
            seen = true;
            ++pos_;
            skip_ws();
        }
        if (need_one && !seen)
            fail("expected '+' or '-'");
        return sign;
    }

    bool at_digit() const {
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (at_digit())
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    int read_exponent() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '^')
            return 1;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (!at_digit())
            fail("expected an exponent");
        int e = std::stoi(read_digits());
        return neg ? -e : e;
    }

    BiPoly parse_term() {
        BigRat coeff = 1;
        int qd = 0;
        int td = 0;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                if (!any)
                    fail("unexpected '*'");
                ++pos_;
                skip_ws();
            } else if (any && (pos_ == s_.size() || s_[pos_] == '+' || s_[pos_] == '-')) {
                break;
            }
            if (pos_ == s_.size())
                fail("unexpected end of input");
            char ch = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num = read_digits();
                if (pos_ < s_.size() && s_[pos_] == '/') {
                    ++pos_;
                    if (!at_digit())
                        fail("expected a denominator");
                    num += "/" + read_digits();
                }
                coeff *= parse_rational(num);
            } else if (ch == 'q' || ch == 't') {
                ++pos_;
                int e = read_exponent();
                (ch == 'q' ? qd : td) += e;
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            any = true;
        }
        return BiPoly::monomial(coeff, qd, td);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

BiPoly parse_bipoly(std::string_view text) { return TermParser(text).parse(); }

} // namespace qh
