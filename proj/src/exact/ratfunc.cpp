#include <qh/exact/ratfunc.hpp>
#include <qh/errors.hpp>

namespace qh {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw InvalidArgument("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    if (den_.leading() != 1) {
        BigRat inv = 1 / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    if (den_.is_one() || o.den_.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly left = exact_quotient(o.den_, g);
    Poly right = exact_quotient(den_, g);
    num_ = num_ * left + o.num_ * right;
    den_ = den_ * left;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return *this;
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly a = g1.degree() > 0 ? exact_quotient(num_, g1) : num_;
    Poly d = g1.degree() > 0 ? exact_quotient(o.den_, g1) : o.den_;
    Poly c = g2.degree() > 0 ? exact_quotient(o.num_, g2) : o.num_;
    Poly b = g2.degree() > 0 ? exact_quotient(den_, g2) : den_;
    num_ = a * c;
    den_ = b * d;
    if (den_.leading() != 1) {
        BigRat inv = 1 / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFunc& RatFunc::operator*=(const BigRat& s) {
    num_ *= s;
    if (num_.is_zero())
        den_ = Poly(1);
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw NonUnitConstantTerm("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::adams(int s) const {
    RatFunc r;
    r.num_ = num_.adams(s);
    r.den_ = den_.adams(s);
    return r; // q -> q^s preserves coprimality and monicity
}

BigRat RatFunc::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0)
        throw InvalidArgument("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

} // namespace qh
