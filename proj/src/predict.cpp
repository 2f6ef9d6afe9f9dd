#include <qh/predict.hpp>

#include <qh/errors.hpp>
#include <qh/kacpoly.hpp>

#include <numeric>

namespace qh {

long euler_phi(long k) {
    if (k < 1)
        throw InvalidArgument("euler_phi needs k >= 1, got " + std::to_string(k));
    long count = 0;
    for (long i = 1; i <= k; ++i)
        count += std::gcd(i, k) == 1;
    return count;
}

L2Prediction sen_l2_dim(int k, int d) {
    if (k < 1)
        throw InvalidArgument("charge must be at least 1, got " + std::to_string(k));
    if (d < 0)
        throw InvalidArgument("degree must be non-negative, got " + std::to_string(d));
    const int mid = 2 * k - 2;
    return {"reduced charge-" + std::to_string(k) + " monopole moduli space", d,
            BigInt(d == mid ? euler_phi(k) : 0), "Sen"};
}

long segal_selby_bound(int k) {
    if (k < 1)
        throw InvalidArgument("charge must be at least 1, got " + std::to_string(k));
    return euler_phi(k);
}

L2Prediction conjecture_main(const ParabolicType& mu, Exec exec, std::int64_t budget) {
    if (mu.genus < 0)
        throw InvalidArgument("genus must be non-negative, got " + std::to_string(mu.genus));
    const int n = mu.rank();
    std::string target = "M_B(g=" + std::to_string(mu.genus) + ", n=" + std::to_string(n) + ", mu=";
    for (std::size_t j = 0; j < mu.punctures.size(); ++j)
        target += (j ? ";" : "") + mu.punctures[j].to_string();
    target += ")";
    L2Prediction out{target, std::nullopt, BigInt(0), "main conjecture"};
    if (mu.genus == 1)
        out.dimension = 1;
    else if (mu.genus == 0) {
        const CrabQuiver crab = crab_quiver(mu);
        out.dimension = weight_multiplicity(crab.quiver, crab.dims, exec, budget).value;
    }
    return out;
}

L2Prediction vafa_witten(const Quiver& quiver, const DimVector& v, const DimVector& w, Exec exec,
                         std::int64_t budget) {
    return {"M(" + v.to_string() + ", " + w.to_string() + ")", std::nullopt,
            chi_l2_quiver(quiver, v, w, exec, budget), "Vafa-Witten"};
}

} // namespace qh
