#pragma once

#include <qh/exact/bigrat.hpp>
#include <qh/parallel.hpp>
#include <qh/qvbetti.hpp>
#include <qh/quiver.hpp>

#include <optional>
#include <string>

namespace qh {

struct L2Prediction {
    std::string target;         // space whose L2 cohomology is predicted
    std::optional<int> degree;  // empty for the middle degree
    BigInt dimension;
    std::string source;         // conjecture or theorem the value comes from
};

// #{1 <= i <= k : gcd(i, k) = 1}. Throws InvalidArgument for k < 1.
long euler_phi(long k);

// Reduced centred charge-k monopole moduli space: phi(k) in degree 2k - 2,
// zero elsewhere.
L2Prediction sen_l2_dim(int k, int d);

// Topological lower bound on middle-degree L2 harmonic forms for the same
// space; equals phi(k).
long segal_selby_bound(int k);

// L2 cohomology of the parabolic character variety of genus g and type mu:
// 0 for g > 1, 1 for g = 1, and m_v = A(v, 0) of the crab quiver for g = 0.
L2Prediction conjecture_main(const ParabolicType& mu, Exec exec = Exec::parallel,
                             std::int64_t budget = kDefaultSeriesBudget);

// Middle Betti number of M(v, w), the predicted dimension of middle-degree L2
// harmonic forms on the quiver variety.
L2Prediction vafa_witten(const Quiver& quiver, const DimVector& v, const DimVector& w,
                         Exec exec = Exec::parallel, std::int64_t budget = kDefaultSeriesBudget);

} // namespace qh
