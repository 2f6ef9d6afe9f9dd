#include "modp.hpp"

#include <qh/errors.hpp>
#include <qh/exact/poly.hpp>
#include <qh/fforacle.hpp>

#include <algorithm>

namespace qh {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

using u128 = unsigned __int128;

BigInt to_bigint(u128 x) {
    const auto hi = static_cast<unsigned long>(x >> 64);
    const auto lo = static_cast<unsigned long>(x);
    BigInt r = hi;
    r <<= 64;
    r += lo;
    return r;
}

struct EdgeSlot {
    int tail, head, vt, vh;
    int x_off; // x_a: V_tail -> V_head, vh x vt
    int y_off; // y_a: V_head -> V_tail, vt x vh
};

struct FiberLayout {
    std::vector<EdgeSlot> edges;
    std::vector<int> m_off; // per-vertex offset of the v_l x v_l residual block
    int entries = 0;
    int m_size = 0;
};

FiberLayout fiber_layout(const Quiver& quiver, const DimVector& v) {
    FiberLayout L;
    for (const auto& [t, h] : quiver.edges()) {
        EdgeSlot e{t, h, v[t], v[h], 0, 0};
        e.x_off = L.entries;
        L.entries += e.vh * e.vt;
        e.y_off = L.entries;
        L.entries += e.vt * e.vh;
        L.edges.push_back(e);
    }
    for (int l = 0; l < quiver.vertex_count(); ++l) {
        L.m_off.push_back(L.m_size);
        L.m_size += v[l] * v[l];
    }
    return L;
}

// residual_l = 1 - sum_{h(a)=l} x_a y_a + sum_{t(a)=l} y_a x_a, entries in 0..p-1
void residual(const FiberLayout& L, const DimVector& v, std::span<const int> cfg, int p,
              std::span<int> m) {
    std::fill(m.begin(), m.end(), 0);
    for (int l = 0; l < v.size(); ++l)
        for (int d = 0; d < v[l]; ++d)
            m[static_cast<std::size_t>(L.m_off[static_cast<std::size_t>(l)] + d * v[l] + d)] = 1;
    for (const auto& e : L.edges) {
        const int* x = cfg.data() + e.x_off;
        const int* y = cfg.data() + e.y_off;
        int* mh = m.data() + L.m_off[static_cast<std::size_t>(e.head)];
        int* mt = m.data() + L.m_off[static_cast<std::size_t>(e.tail)];
        for (int r = 0; r < e.vh; ++r)
            for (int c = 0; c < e.vh; ++c) {
                int s = 0;
                for (int k = 0; k < e.vt; ++k)
                    s += x[r * e.vt + k] * y[k * e.vh + c];
                mh[r * e.vh + c] -= s;
            }
        for (int r = 0; r < e.vt; ++r)
            for (int c = 0; c < e.vt; ++c) {
                int s = 0;
                for (int k = 0; k < e.vh; ++k)
                    s += y[r * e.vh + k] * x[k * e.vt + c];
                mt[r * e.vt + c] += s;
            }
    }
    for (auto& x : m)
        x = ((x % p) + p) % p;
}

void check_shapes(const Quiver& quiver, const DimVector& v, const DimVector& w) {
    if (v.size() != quiver.vertex_count() || w.size() != quiver.vertex_count())
        throw ShapeMismatch("dimension vectors must have " +
                            std::to_string(quiver.vertex_count()) + " entries");
}

CountRecord make_record(const DimVector& v, int p, BigInt raw) {
    CountRecord rec;
    rec.p = p;
    rec.raw = std::move(raw);
    rec.group_order = gl_order(v, p);
    rec.quotient = BigRat(rec.raw, rec.group_order);
    rec.quotient.canonicalize();
    rec.generic_level = v.total() < p;
    if (!is_integer(rec.quotient))
        throw NonIntegralCount("fiber count " + to_string(rec.raw) + " is not divisible by |GL_v(F_" +
                               std::to_string(p) + ")| = " + to_string(rec.group_order));
    return rec;
}

} // namespace

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p) || p > kMaxPrime)
        throw InvalidArgument("prime field needs a prime p <= " + std::to_string(kMaxPrime) +
                              ", got " + std::to_string(p));
    inv_.assign(static_cast<std::size_t>(p), 0);
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1)
                inv_[static_cast<std::size_t>(a)] = b;
}

BigInt gl_order(int n, int p) {
    BigInt order = 1;
    const BigInt pn = ipow(BigInt(p), static_cast<unsigned long>(n));
    for (int k = 0; k < n; ++k)
        order *= pn - ipow(BigInt(p), static_cast<unsigned long>(k));
    return order;
}

BigInt gl_order(const DimVector& v, int p) {
    BigInt order = 1;
    for (int x : v)
        order *= gl_order(x, p);
    return order;
}

std::vector<std::int64_t> factorization_table(int v, int w, int p) {
    const std::int64_t size = modp::ipow(p, v * v);
    std::vector<std::int64_t> table(static_cast<std::size_t>(size), 0);
    std::vector<int> ij(static_cast<std::size_t>(2 * v * w), 0);
    std::vector<int> prod(static_cast<std::size_t>(v * v), 0);
    const std::span<const int> i_map(ij.data(), static_cast<std::size_t>(w * v)); // w x v
    const std::span<const int> j_map(ij.data() + w * v, static_cast<std::size_t>(v * w)); // v x w
    do {
        modp::matmul(j_map, i_map, v, w, v, p, prod);
        ++table[static_cast<std::size_t>(modp::encode(prod, p))];
    } while (modp::increment(ij, p));
    return table;
}

CountRecord count_moment_fiber(const Quiver& quiver, const DimVector& v, const DimVector& w, int p,
                               Exec exec, std::int64_t budget) {
    check_shapes(quiver, v, w);
    const PrimeField field(p);
    const FiberLayout L = fiber_layout(quiver, v);
    const std::int64_t total = modp::pow_capped(p, L.entries, budget);
    std::int64_t work = total;
    for (int l = 0; l < v.size(); ++l) {
        work += modp::pow_capped(p, 2L * v[l] * w[l], budget) +
                modp::pow_capped(p, static_cast<std::int64_t>(v[l]) * v[l], budget);
        if (work > budget)
            break;
    }
    if (work > budget)
        throw BudgetExceeded("moment-fiber enumeration over F_" + std::to_string(p) +
                             " needs more than " + std::to_string(budget) + " steps");

    std::vector<std::vector<std::int64_t>> tables;
    for (int l = 0; l < v.size(); ++l)
        tables.push_back(factorization_table(v[l], w[l], p));

    const std::int64_t chunks = std::min<std::int64_t>(total, 4096);
    std::vector<u128> partial(static_cast<std::size_t>(chunks), 0);
    for_each_index(chunks, exec, [&](std::int64_t c) {
        const std::int64_t begin = total * c / chunks;
        const std::int64_t end = total * (c + 1) / chunks;
        std::vector<int> cfg(static_cast<std::size_t>(L.entries));
        std::vector<int> m(static_cast<std::size_t>(L.m_size));
        modp::decode(begin, p, cfg);
        u128 acc = 0;
        for (std::int64_t idx = begin; idx < end; ++idx) {
            residual(L, v, cfg, p, m);
            u128 term = 1;
            for (int l = 0; l < v.size() && term != 0; ++l) {
                const int off = L.m_off[static_cast<std::size_t>(l)];
                const std::span<const int> block(m.data() + off, static_cast<std::size_t>(v[l] * v[l]));
                term *= static_cast<u128>(
                    tables[static_cast<std::size_t>(l)][static_cast<std::size_t>(modp::encode(block, p))]);
            }
            acc += term;
            modp::increment(cfg, p);
        }
        partial[static_cast<std::size_t>(c)] = acc;
    });
    u128 raw = 0;
    for (auto x : partial)
        raw += x;
    return make_record(v, p, to_bigint(raw));
}

CountRecord count_moment_fiber_reference(const Quiver& quiver, const DimVector& v,
                                         const DimVector& w, int p, std::int64_t budget) {
    check_shapes(quiver, v, w);
    const PrimeField field(p);
    const FiberLayout L = fiber_layout(quiver, v);
    // Framing maps follow the edge matrices: i_l (w x v) then j_l (v x w).
    std::vector<int> frame_off;
    int entries = L.entries;
    for (int l = 0; l < v.size(); ++l) {
        frame_off.push_back(entries);
        entries += 2 * v[l] * w[l];
    }
    if (modp::pow_capped(p, entries, budget) > budget)
        throw BudgetExceeded("reference enumeration over F_" + std::to_string(p) + " too large");

    std::vector<int> cfg(static_cast<std::size_t>(entries), 0);
    std::vector<int> m(static_cast<std::size_t>(L.m_size));
    std::vector<int> ji;
    std::uint64_t raw = 0;
    do {
        residual(L, v, std::span<const int>(cfg.data(), static_cast<std::size_t>(L.entries)), p, m);
        bool ok = true;
        for (int l = 0; l < v.size() && ok; ++l) {
            const int n = v[l];
            const int k = w[l];
            ji.assign(static_cast<std::size_t>(n * n), 0);
            const int* i_map = cfg.data() + frame_off[static_cast<std::size_t>(l)];
            const int* j_map = i_map + k * n;
            modp::matmul(std::span<const int>(j_map, static_cast<std::size_t>(n * k)),
                         std::span<const int>(i_map, static_cast<std::size_t>(k * n)), n, k, n, p, ji);
            const int off = L.m_off[static_cast<std::size_t>(l)];
            for (int e = 0; e < n * n && ok; ++e)
                ok = ji[static_cast<std::size_t>(e)] == m[static_cast<std::size_t>(off + e)];
        }
        raw += ok;
    } while (modp::increment(cfg, p));
    return make_record(v, p, BigInt(static_cast<unsigned long>(raw)));
}

LaurentPoly counts_to_poincare(std::span<const CountRecord> records, int dim) {
    if (dim < 0 || dim % 2 != 0)
        throw InvalidArgument("dimension must be even and non-negative, got " + std::to_string(dim));
    const int half = dim / 2;
    const std::size_t needed = static_cast<std::size_t>(half) + 1;
    std::vector<const CountRecord*> distinct;
    for (const auto& r : records) {
        bool seen = false;
        for (const auto* d : distinct)
            seen = seen || d->p == r.p;
        if (!seen)
            distinct.push_back(&r);
    }
    if (distinct.size() < needed)
        throw InsufficientPoints(std::to_string(distinct.size()) + " distinct primes, need " +
                                 std::to_string(needed));

    // E(q) = q^half * Q(q), deg Q <= half. Lagrange through the first points.
    auto reduced = [&](const CountRecord& r) -> BigRat {
        return r.quotient / BigRat(ipow(BigInt(r.p), static_cast<unsigned long>(half)));
    };
    Poly Q;
    for (std::size_t i = 0; i < needed; ++i) {
        Poly basis(1);
        BigRat denom = 1;
        for (std::size_t j = 0; j < needed; ++j) {
            if (j == i)
                continue;
            basis *= Poly(std::vector<BigRat>{BigRat(-distinct[j]->p), BigRat(1)});
            denom *= BigRat(distinct[i]->p - distinct[j]->p);
        }
        Q += basis * BigRat(reduced(*distinct[i]) / denom);
    }
    for (std::size_t i = needed; i < distinct.size(); ++i) {
        if (Q.eval(distinct[i]->p) != reduced(*distinct[i]))
            throw InconsistentCounts("count " + to_string(distinct[i]->quotient) + " at p = " +
                                     std::to_string(distinct[i]->p) +
                                     " is off the polynomial through the other primes");
    }
    std::map<int, BigRat> betti;
    for (int k = 0; k <= Q.degree(); ++k) {
        const BigRat b = Q.coeff(k);
        if (b == 0)
            continue;
        if (!is_integer(b) || b < 0)
            throw NonIntegralInterpolant("Betti number " + to_string(b) + " in degree " +
                                         std::to_string(2 * (half - k)));
        betti.emplace(2 * (half - k), b);
    }
    return LaurentPoly(Var::t, std::move(betti));
}

} // namespace qh
