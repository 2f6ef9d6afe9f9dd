#include "modp.hpp"

#include <qh/errors.hpp>
#include <qh/fforacle.hpp>

#include <numeric>
#include <set>

namespace qh {

namespace {

struct RepLayout {
    struct Arrow {
        int tail, head, vt, vh, off; // matrix V_tail -> V_head, vh x vt
    };
    std::vector<Arrow> arrows;
    std::vector<int> block_off; // per-vertex offset inside an endomorphism tuple
    int entries = 0;
    int unknowns = 0;
};

RepLayout rep_layout(const Quiver& quiver, const DimVector& v) {
    RepLayout L;
    for (const auto& [t, h] : quiver.edges()) {
        L.arrows.push_back({t, h, v[t], v[h], L.entries});
        L.entries += v[t] * v[h];
    }
    for (int l = 0; l < v.size(); ++l) {
        L.block_off.push_back(L.unknowns);
        L.unknowns += v[l] * v[l];
    }
    return L;
}

struct EndInfo {
    int dim = 0;
    std::int64_t nilpotent = 0;
    std::int64_t invertible = 0;

    bool absolutely_indecomposable(int p) const {
        return dim >= 1 && nilpotent == modp::ipow(p, dim - 1);
    }
};

// Solves phi_head x_a = x_a phi_tail for the endomorphism algebra, then walks
// all of its elements counting nilpotent and invertible ones. End(R) is local
// with residue field F_p exactly when the nilpotents number p^(dim - 1).
EndInfo analyse_endomorphisms(const RepLayout& L, const DimVector& v, std::span<const int> rep,
                              const PrimeField& F, const std::vector<int>& inv) {
    const int p = F.p();
    const int U = L.unknowns;
    std::vector<int> sys;
    int rows = 0;
    for (const auto& a : L.arrows) {
        const int* x = rep.data() + a.off;
        const int ho = L.block_off[static_cast<std::size_t>(a.head)];
        const int to = L.block_off[static_cast<std::size_t>(a.tail)];
        for (int r = 0; r < a.vh; ++r)
            for (int c = 0; c < a.vt; ++c) {
                std::vector<int> row(static_cast<std::size_t>(U), 0);
                // (phi_h x)[r][c] = sum_k phi_h[r][k] x[k][c]
                for (int k = 0; k < a.vh; ++k) {
                    auto& cell = row[static_cast<std::size_t>(ho + r * a.vh + k)];
                    cell = (cell + x[k * a.vt + c]) % p;
                }
                // (x phi_t)[r][c] = sum_k x[r][k] phi_t[k][c]
                for (int k = 0; k < a.vt; ++k) {
                    auto& cell = row[static_cast<std::size_t>(to + k * a.vt + c)];
                    cell = (cell - x[r * a.vt + k] + p) % p;
                }
                sys.insert(sys.end(), row.begin(), row.end());
                ++rows;
            }
    }
    const auto basis = modp::null_space(sys, rows, U, p, inv);
    EndInfo info;
    info.dim = static_cast<int>(basis.size());

    std::vector<int> coeffs(basis.size(), 0);
    std::vector<int> phi(static_cast<std::size_t>(U));
    std::vector<int> power;
    std::vector<int> next;
    std::vector<int> scratch;
    do {
        std::fill(phi.begin(), phi.end(), 0);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (coeffs[b] != 0)
                for (int u = 0; u < U; ++u)
                    phi[static_cast<std::size_t>(u)] =
                        (phi[static_cast<std::size_t>(u)] + coeffs[b] * basis[b][static_cast<std::size_t>(u)]) % p;
        bool nilpotent = true;
        bool invertible = true;
        for (int l = 0; l < v.size(); ++l) {
            const int n = v[l];
            if (n == 0)
                continue;
            const std::span<const int> block(phi.data() + L.block_off[static_cast<std::size_t>(l)],
                                             static_cast<std::size_t>(n * n));
            if (nilpotent) {
                power.assign(block.begin(), block.end());
                next.assign(power.size(), 0);
                for (int e = 1; e < n; ++e) {
                    modp::matmul(power, block, n, n, n, p, next);
                    std::swap(power, next);
                }
                nilpotent = std::all_of(power.begin(), power.end(), [](int x) { return x == 0; });
            }
            if (invertible) {
                scratch.assign(block.begin(), block.end());
                invertible = modp::rank(scratch, n, n, p, inv) == n;
            }
        }
        info.nilpotent += nilpotent;
        info.invertible += invertible;
    } while (modp::increment(coeffs, p));
    return info;
}

std::vector<int> inverse_table(const PrimeField& F) {
    std::vector<int> inv(static_cast<std::size_t>(F.p()), 0);
    for (int a = 1; a < F.p(); ++a)
        inv[static_cast<std::size_t>(a)] = F.inv(a);
    return inv;
}

void check_kac_input(const Quiver& quiver, const DimVector& v) {
    if (v.size() != quiver.vertex_count())
        throw ShapeMismatch("dimension vector has " + std::to_string(v.size()) + " entries, quiver has " +
                            std::to_string(quiver.vertex_count()));
    if (v.is_zero())
        throw InvalidArgument("dimension vector must be nonzero");
}

std::int64_t kac_work(const RepLayout& L, int p, std::int64_t budget) {
    const std::int64_t reps = modp::pow_capped(p, L.entries, budget);
    const std::int64_t per_rep = modp::pow_capped(p, L.unknowns, budget);
    if (reps > budget || per_rep > budget || reps > budget / per_rep)
        return budget + 1;
    return reps * per_rep;
}

} // namespace

BigInt brute_kac(const Quiver& quiver, const DimVector& v, int p, Exec exec, std::int64_t budget) {
    check_kac_input(quiver, v);
    const PrimeField F(p);
    const auto inv = inverse_table(F);
    const RepLayout L = rep_layout(quiver, v);
    if (kac_work(L, p, budget) > budget)
        throw BudgetExceeded("representation enumeration over F_" + std::to_string(p) +
                             " exceeds budget " + std::to_string(budget));

    const std::int64_t total = modp::ipow(p, L.entries);
    const std::int64_t chunks = std::min<std::int64_t>(total, 1024);
    std::vector<std::int64_t> partial(static_cast<std::size_t>(chunks), 0);
    std::vector<std::int64_t> alarms(static_cast<std::size_t>(chunks), 0);
    for_each_index(chunks, exec, [&](std::int64_t c) {
        const std::int64_t begin = total * c / chunks;
        const std::int64_t end = total * (c + 1) / chunks;
        std::vector<int> rep(static_cast<std::size_t>(L.entries));
        modp::decode(begin, p, rep);
        std::int64_t acc = 0;
        for (std::int64_t idx = begin; idx < end; ++idx) {
            const EndInfo info = analyse_endomorphisms(L, v, rep, F, inv);
            if (info.absolutely_indecomposable(p)) {
                // Non-invertibles must then be exactly the codimension-1 radical.
                if (modp::ipow(p, info.dim) - info.invertible != info.nilpotent)
                    ++alarms[static_cast<std::size_t>(c)];
                acc += info.invertible;
            }
            modp::increment(rep, p);
        }
        partial[static_cast<std::size_t>(c)] = acc;
    });
    if (std::accumulate(alarms.begin(), alarms.end(), std::int64_t{0}) != 0)
        throw NonIntegralCount("non-invertible endomorphisms of a local endomorphism ring are not its radical");
    BigInt weighted = 0;
    for (auto x : partial)
        weighted += BigInt(static_cast<long>(x));
    const BigInt order = gl_order(v, p);
    if (weighted % order != 0)
        throw NonIntegralCount("sum of automorphism group orders " + to_string(weighted) +
                               " is not divisible by |GL_v| = " + to_string(order));
    return weighted / order;
}

OrbitAudit brute_kac_orbits(const Quiver& quiver, const DimVector& v, int p, std::int64_t budget) {
    check_kac_input(quiver, v);
    const PrimeField F(p);
    const auto inv = inverse_table(F);
    const RepLayout L = rep_layout(quiver, v);

    // Invertible matrices (with inverses) per vertex.
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> groups;
    std::int64_t group_order = 1;
    for (int l = 0; l < v.size(); ++l) {
        const int n = v[l];
        std::vector<std::pair<std::vector<int>, std::vector<int>>> elems;
        if (modp::pow_capped(p, n * n, budget) > budget)
            throw BudgetExceeded("group enumeration too large");
        std::vector<int> g(static_cast<std::size_t>(n * n), 0);
        std::vector<int> h(static_cast<std::size_t>(n * n), 0);
        std::vector<int> prod(static_cast<std::size_t>(n * n), 0);
        std::vector<std::vector<int>> all;
        do {
            std::vector<int> scratch = g;
            if (modp::rank(scratch, n, n, p, inv) == n)
                all.push_back(g);
        } while (modp::increment(g, p));
        for (const auto& a : all) {
            for (const auto& b : all) {
                modp::matmul(a, b, n, n, n, p, prod);
                bool identity = true;
                for (int r = 0; r < n && identity; ++r)
                    for (int c = 0; c < n && identity; ++c)
                        identity = prod[static_cast<std::size_t>(r * n + c)] == (r == c ? 1 : 0);
                if (identity) {
                    elems.emplace_back(a, b);
                    break;
                }
            }
        }
        group_order *= static_cast<std::int64_t>(elems.size());
        groups.push_back(std::move(elems));
    }
    const std::int64_t total = modp::pow_capped(p, L.entries, budget);
    if (total > budget || total > budget / group_order)
        throw BudgetExceeded("orbit enumeration too large");

    OrbitAudit audit;
    std::vector<bool> visited(static_cast<std::size_t>(total), false);
    std::vector<int> rep(static_cast<std::size_t>(L.entries), 0);
    std::vector<int> image(static_cast<std::size_t>(L.entries), 0);
    std::vector<int> tmp;
    std::vector<std::size_t> pick(groups.size(), 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        if (visited[static_cast<std::size_t>(idx)])
            continue;
        modp::decode(idx, p, rep);
        std::set<std::int64_t> orbit;
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            for (const auto& a : L.arrows) {
                const auto& gh = groups[static_cast<std::size_t>(a.head)][pick[static_cast<std::size_t>(a.head)]].first;
                const auto& gt_inv = groups[static_cast<std::size_t>(a.tail)][pick[static_cast<std::size_t>(a.tail)]].second;
                tmp.assign(static_cast<std::size_t>(a.vh * a.vt), 0);
                const std::span<const int> x(rep.data() + a.off, static_cast<std::size_t>(a.vh * a.vt));
                modp::matmul(gh, x, a.vh, a.vh, a.vt, p, tmp);
                modp::matmul(tmp, gt_inv, a.vh, a.vt, a.vt, p,
                             std::span<int>(image.data() + a.off, static_cast<std::size_t>(a.vh * a.vt)));
            }
            const std::int64_t j = modp::encode(image, p);
            orbit.insert(j);
            visited[static_cast<std::size_t>(j)] = true;
            std::size_t l = 0;
            for (; l < groups.size(); ++l) {
                if (++pick[l] < groups[l].size())
                    break;
                pick[l] = 0;
            }
            if (l == groups.size())
                break;
        }
        const EndInfo info = analyse_endomorphisms(L, v, rep, F, inv);
        if (!info.absolutely_indecomposable(p))
            continue;
        ++audit.orbits;
        audit.indecomposable_tuples += static_cast<std::int64_t>(orbit.size());
        audit.orbit_size_sum += group_order / info.invertible;
        if (group_order % info.invertible != 0 ||
            static_cast<std::int64_t>(orbit.size()) != group_order / info.invertible)
            ++audit.stabilizer_mismatches;
    }
    return audit;
}

} // namespace qh
