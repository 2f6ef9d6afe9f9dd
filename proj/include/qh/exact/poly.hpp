#pragma once

#include <qh/exact/bigrat.hpp>

#include <utility>
#include <vector>

namespace qh {

// Dense univariate polynomial over Q in the variable q, low degree first.
// The coefficient vector never carries trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const BigRat& constant);
    Poly(int constant) : Poly(BigRat(constant)) {}
    explicit Poly(std::vector<BigRat> coeffs);

    static Poly monomial(const BigRat& c, int degree);
    // q^k - 1
    static Poly q_power_minus_one(int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    BigRat coeff(int d) const;
    const BigRat& leading() const { return c_.back(); }
    const std::vector<BigRat>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigRat& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Multiply by q^k, k >= 0.
    Poly shifted(int k) const;
    // q -> q^s
    Poly adams(int s) const;
    BigRat eval(const BigRat& x) const;
    Poly monic() const;

    // Lowest exponent carrying a nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

private:
    void trim();
    std::vector<BigRat> c_;
};

// Euclidean division: a = quot * b + rem with deg rem < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
// Exact quotient; throws NotDivisible when b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);

} // namespace qh
