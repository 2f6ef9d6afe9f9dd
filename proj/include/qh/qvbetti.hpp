#pragma once

#include <qh/exact/laurent.hpp>
#include <qh/quiver.hpp>
#include <qh/series.hpp>

#include <cstdint>
#include <map>
#include <optional>

namespace qh {

// Poincare polynomial of a quiver variety: integer Betti numbers in even
// degrees up to the complex dimension.
struct PoincarePoly {
    int dim = 0;
    LaurentPoly poly{Var::t};

    BigInt betti(int degree) const { return poly.coeff(degree).get_num(); }
    friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;
};

struct BettiEntry {
    DimVector v;
    int dim = 0;
    std::optional<PoincarePoly> poincare; // empty variety when absent

    bool empty() const { return !poincare.has_value(); }
};

// Default upper bound on the number of multipartitions enumerated while
// assembling a series.
inline constexpr std::int64_t kDefaultSeriesBudget = 20'000'000;

// Coefficient of T^v:
//   sum_{lambda in P(v)} q^{sum_E <l^i,l^j>} / prod_i (q^{<l^i,l^i>} prod_k prod_{j<=m_k} (1 - q^-j))
// i.e. the generating-function denominator with q = t^-2.
GradedSeries<RatFunc> denominator_series(const Quiver& quiver, const GradingCap& cap,
                                         Exec exec = Exec::parallel,
                                         std::int64_t budget = kDefaultSeriesBudget);

// Same sum with each term weighted by prod_i q^{<l^i, (1^{w_i})>}.
GradedSeries<RatFunc> numerator_series(const Quiver& quiver, const DimVector& w,
                                       const GradingCap& cap, Exec exec = Exec::parallel,
                                       std::int64_t budget = kDefaultSeriesBudget);

// Poincare polynomials of M(v, w) for every v inside the cap. Throws
// NonPolynomialCoefficient when a ratio coefficient is not a polynomial in
// t^2 with non-negative integer coefficients of degree <= dim.
std::map<DimVector, BettiEntry> betti_table(const Quiver& quiver, const DimVector& w,
                                            const GradingCap& cap, Exec exec = Exec::parallel,
                                            std::int64_t budget = kDefaultSeriesBudget);

// Betti number in degree dim(M(v, w)). Throws EmptyVariety.
BigInt middle_betti(const Quiver& quiver, const DimVector& v, const DimVector& w,
                    Exec exec = Exec::parallel, std::int64_t budget = kDefaultSeriesBudget);

// The intersection form on middle compactly supported cohomology of a quiver
// variety is definite, so the L2 Euler characteristic is the middle Betti
// number. This is the dimension predicted for middle-degree L2 harmonic forms.
BigInt chi_l2_quiver(const Quiver& quiver, const DimVector& v, const DimVector& w,
                     Exec exec = Exec::parallel, std::int64_t budget = kDefaultSeriesBudget);

} // namespace qh
