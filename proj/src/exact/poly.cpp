#include <qh/exact/poly.hpp>
#include <qh/errors.hpp>

#include <algorithm>

namespace qh {

Poly::Poly(const BigRat& constant) {
    if (constant != 0)
        c_.push_back(constant);
}

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const BigRat& c, int degree) {
    Poly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, BigRat(0));
        p.c_.back() = c;
    }
    return p;
}

Poly Poly::q_power_minus_one(int k) {
    Poly p = monomial(1, k);
    p.c_[0] -= 1;
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigRat Poly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<std::size_t>(d)];
}

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRat(0));
    BigRat tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            tmp = a.c_[i] * b.c_[j];
            r.c_[i + j] += tmp;
        }
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const BigRat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0)
        return *this;
    Poly r;
    r.c_.assign(static_cast<std::size_t>(k), BigRat(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::adams(int s) const {
    if (s == 1 || c_.size() <= 1)
        return *this;
    Poly r;
    r.c_.assign(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(s) + 1, BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i * static_cast<std::size_t>(s)] = c_[i];
    return r;
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1)
        return *this;
    Poly r = *this;
    BigRat inv = 1 / leading();
    r *= inv;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw InvalidArgument("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly(), a};
    std::vector<BigRat> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const BigRat lead_inv = 1 / b.leading();
    std::vector<BigRat> quot(static_cast<std::size_t>(a.degree() - db + 1), BigRat(0));
    BigRat tmp;
    for (int d = a.degree(); d >= db; --d) {
        const BigRat& top = rem[static_cast<std::size_t>(d)];
        if (top == 0)
            continue;
        BigRat f = top * lead_inv;
        const int shift = d - db;
        for (int j = 0; j <= db; ++j) {
            tmp = f * bc[static_cast<std::size_t>(j)];
            rem[static_cast<std::size_t>(shift + j)] -= tmp;
        }
        quot[static_cast<std::size_t>(shift)] = f;
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero())
        throw NotDivisible("univariate remainder is nonzero");
    return quot;
}

} // namespace qh
