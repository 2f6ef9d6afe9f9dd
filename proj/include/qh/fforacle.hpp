#pragma once

#include <qh/exact/bigrat.hpp>
#include <qh/exact/laurent.hpp>
#include <qh/parallel.hpp>
#include <qh/quiver.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace qh {

// Residues 0..p-1 with table-driven inverses; p prime, p <= 13.
class PrimeField {
public:
    static constexpr int kMaxPrime = 13;
    // Throws InvalidArgument unless p is a prime <= kMaxPrime.
    explicit PrimeField(int p);

    int p() const { return p_; }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }

private:
    int p_;
    std::vector<int> inv_;
};

// |GL_n(F_p)| = prod_{k<n} (p^n - p^k)
BigInt gl_order(int n, int p);
// prod over vertices of |GL_{v_i}(F_p)|
BigInt gl_order(const DimVector& v, int p);

struct CountRecord {
    int p = 0;
    BigInt raw;          // points of the moment-map fiber over F_p
    BigInt group_order;  // |GL_v(F_p)|
    BigRat quotient;     // raw / group_order = #M(v, w)(F_p)
    bool generic_level = true; // |v| < p, so the level 1_v is generic over F_p
};

inline constexpr std::int64_t kDefaultOracleBudget = 4'000'000'000;

// Counts (x_a, y_a, i_l, j_l) over F_p with
//   sum_{h(a)=l} x_a y_a - sum_{t(a)=l} y_a x_a + j_l i_l = 1
// at every vertex l. The framing pairs (i_l, j_l) are never enumerated per
// configuration: a per-vertex table counts the factorizations j i = M, and
// that count depends only on rank(M). Throws BudgetExceeded and, if the
// quotient is not an integer, NonIntegralCount.
CountRecord count_moment_fiber(const Quiver& quiver, const DimVector& v, const DimVector& w, int p,
                               Exec exec = Exec::parallel,
                               std::int64_t budget = kDefaultOracleBudget);

// Serial reference: enumerates every framing map as well. Test-scale only.
CountRecord count_moment_fiber_reference(const Quiver& quiver, const DimVector& v,
                                         const DimVector& w, int p,
                                         std::int64_t budget = kDefaultOracleBudget);

// Number of pairs (i, j), i: F^v -> F^w, j: F^w -> F^v, with j i equal to each
// v x v matrix (index = base-p digits, row-major). Exposed for testing.
std::vector<std::int64_t> factorization_table(int v, int w, int p);

// For these pure Tate-type varieties the count is E(q) = sum_i b_{2i} q^{dim - i}.
// Interpolates from the first dim/2 + 1 records, checks the others, and returns
// P(t) = sum_i b_{2i} t^{2i}. Throws InsufficientPoints, InconsistentCounts,
// NonIntegralInterpolant.
LaurentPoly counts_to_poincare(std::span<const CountRecord> records, int dim);

// Number of isomorphism classes of absolutely indecomposable representations
// of the quiver with dimension vector v over F_p, as
//   (1/|G|) sum over absolutely indecomposable tuples of |Aut(R)|.
BigInt brute_kac(const Quiver& quiver, const DimVector& v, int p, Exec exec = Exec::parallel,
                 std::int64_t budget = kDefaultOracleBudget);

// Explicit orbit enumeration under GL_v(F_p); serial, test-scale only.
struct OrbitAudit {
    std::int64_t orbits = 0;            // absolutely indecomposable isoclasses
    std::int64_t indecomposable_tuples = 0;
    std::int64_t orbit_size_sum = 0;    // sum of |G|/|Aut(R)| over one R per orbit
    std::int64_t stabilizer_mismatches = 0;
};
OrbitAudit brute_kac_orbits(const Quiver& quiver, const DimVector& v, int p,
                            std::int64_t budget = 50'000'000);

} // namespace qh
