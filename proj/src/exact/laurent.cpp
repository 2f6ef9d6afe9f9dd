#include <qh/exact/laurent.hpp>
#include <qh/errors.hpp>

namespace qh {

LaurentPoly::LaurentPoly(Var var, std::map<int, BigRat> terms) : var_(var) {
    for (auto& [e, c] : terms)
        if (c != 0)
            terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::constant(Var var, const BigRat& c) { return monomial(var, c, 0); }

LaurentPoly LaurentPoly::monomial(Var var, const BigRat& c, int exponent) {
    LaurentPoly p(var);
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_poly(Var var, const Poly& p) {
    LaurentPoly r(var);
    for (int d = 0; d <= p.degree(); ++d)
        r.add_term(d, p.coeff(d));
    return r;
}

void LaurentPoly::add_term(int e, const BigRat& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigRat LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigRat(0) : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.var_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

BigRat LaurentPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0 && x == 0)
            throw InvalidArgument("Laurent polynomial evaluated at 0 with negative powers");
        BigRat xp = 1;
        BigRat base = e < 0 ? BigRat(1 / x) : x;
        for (int i = 0; i < std::abs(e); ++i)
            xp *= base;
        acc += c * xp;
    }
    return acc;
}

Poly LaurentPoly::to_poly() const {
    if (!terms_.empty() && min_degree() < 0)
        throw InvalidArgument("negative exponent where a polynomial was expected");
    std::vector<BigRat> c(terms_.empty() ? 0 : static_cast<std::size_t>(max_degree()) + 1, BigRat(0));
    for (const auto& [e, v] : terms_)
        c[static_cast<std::size_t>(e)] = v;
    return Poly(std::move(c));
}

} // namespace qh
