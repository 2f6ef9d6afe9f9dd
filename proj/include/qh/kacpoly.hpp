#pragma once

#include <qh/qvbetti.hpp>

#include <string>
#include <vector>

namespace qh {

struct KacPolynomial {
    Quiver quiver;
    DimVector v;
    std::vector<BigInt> coeffs; // coeffs[k] multiplies q^k; empty for A = 0

    BigInt eval(const BigInt& q) const;
    BigInt constant_term() const { return coeffs.empty() ? BigInt(0) : coeffs.front(); }
    BigInt coeff(int k) const;
    LaurentPoly as_laurent() const;
};

// A(v, q) = (q - 1) [T^v] Log(denominator series) with the cap set to v.
// Throws NonPolynomialResult if the coefficient is not an integer polynomial.
KacPolynomial kac_polynomial(const Quiver& quiver, const DimVector& v, Exec exec = Exec::parallel,
                             std::int64_t budget = kDefaultSeriesBudget);

// Every A(u, q) with 0 < u <= cap from a single Log computation.
std::vector<KacPolynomial> kac_polynomials(const Quiver& quiver, const GradingCap& cap,
                                           Exec exec = Exec::parallel,
                                           std::int64_t budget = kDefaultSeriesBudget);

struct WeightMultiplicity {
    BigInt value;
    // Set when the quiver has edge-loops: the constant term is still returned
    // but has no Kac-Moody weight-multiplicity reading.
    bool formal = false;
};

WeightMultiplicity weight_multiplicity(const KacPolynomial& a);
WeightMultiplicity weight_multiplicity(const Quiver& quiver, const DimVector& v,
                                       Exec exec = Exec::parallel,
                                       std::int64_t budget = kDefaultSeriesBudget);

struct PositivityReport {
    bool nonnegative = true;
    std::vector<int> negative_degrees;
    std::string summary;
};

PositivityReport kac_positivity_report(const KacPolynomial& a);

} // namespace qh
