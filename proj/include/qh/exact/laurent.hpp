#pragma once

#include <qh/exact/bigrat.hpp>
#include <qh/exact/poly.hpp>

#include <map>

namespace qh {

enum class Var { q, t };

// Sparse Laurent polynomial in a single tagged variable. Zero coefficients are
// never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(Var var = Var::t) : var_(var) {}
    LaurentPoly(Var var, std::map<int, BigRat> terms);
    static LaurentPoly constant(Var var, const BigRat& c);
    static LaurentPoly monomial(Var var, const BigRat& c, int exponent);
    static LaurentPoly from_poly(Var var, const Poly& p);

    Var var() const { return var_; }
    const std::map<int, BigRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigRat coeff(int exponent) const;
    int min_degree() const;
    int max_degree() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigRat& s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }

    BigRat eval(const BigRat& x) const;
    // Requires min_degree() >= 0 (or zero).
    Poly to_poly() const;

private:
    void add_term(int e, const BigRat& c);
    Var var_;
    std::map<int, BigRat> terms_;
};

} // namespace qh
