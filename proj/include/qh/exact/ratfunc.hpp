#pragma once

#include <qh/exact/poly.hpp>

namespace qh {

// Rational function in q kept in normal form: gcd(num, den) = 1, den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const BigRat& c) : num_(c), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    // Throws InvalidArgument on a zero denominator.
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator*=(const BigRat& s);
    RatFunc operator-() const;
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator*(RatFunc a, const BigRat& s) { return a *= s; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Throws NonUnitConstantTerm when zero.
    RatFunc inverse() const;
    RatFunc adams(int s) const;
    BigRat eval(const BigRat& x) const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

} // namespace qh
