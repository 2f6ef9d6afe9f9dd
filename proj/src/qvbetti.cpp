#include <qh/errors.hpp>
#include <qh/qvbetti.hpp>

#include <algorithm>

namespace qh {

namespace {

// Per-partition data shared by every vertex of dimension n.
struct PartitionInfo {
    std::vector<int> conj;
    int length = 0;
    int self_pairing = 0;
    // sum_k sum_{j=1}^{m_k} j, the q-power released by 1/(1 - q^-j) = q^j/(q^j - 1)
    int hook_shift = 0;
    // prod_{j=1}^{n}(q^j - 1) / prod_k prod_{j=1}^{m_k}(q^j - 1), a polynomial
    Poly cofactor;
};

int dot(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    int s = 0;
    for (std::size_t k = 0; k < n; ++k)
        s += a[k] * b[k];
    return s;
}

Poly q_factorial(int n) {
    Poly f(1);
    for (int j = 1; j <= n; ++j)
        f *= Poly::q_power_minus_one(j);
    return f;
}

std::vector<PartitionInfo> partition_infos(int n) {
    std::vector<PartitionInfo> out;
    const Poly full = q_factorial(n);
    for (const auto& lambda : partitions_of(n)) {
        PartitionInfo info;
        info.conj = conjugate(lambda).parts();
        info.length = lambda.length();
        info.self_pairing = dot(info.conj, info.conj);
        Poly hook(1);
        for (int k = 1; k <= n; ++k) {
            const int m = multiplicity(lambda, k);
            for (int j = 1; j <= m; ++j) {
                info.hook_shift += j;
                hook *= Poly::q_power_minus_one(j);
            }
        }
        info.cofactor = exact_quotient(full, hook);
        out.push_back(std::move(info));
    }
    return out;
}

std::int64_t multipartition_count(const GradingCap& cap) {
    // sum over the box of prod_i p(v_i) = prod_i sum_{k<=cap_i} p(k)
    std::int64_t total = 1;
    for (int c : cap.max()) {
        std::int64_t s = 0;
        for (int k = 0; k <= c; ++k)
            s += static_cast<std::int64_t>(partitions_of(k).size());
        total *= s;
        if (total > (std::int64_t{1} << 50))
            break;
    }
    return total;
}

GradedSeries<RatFunc> build_series(const Quiver& quiver, const DimVector* w, const GradingCap& cap,
                                   Exec exec, std::int64_t budget) {
    const int n = quiver.vertex_count();
    if (cap.rank() != n)
        throw ShapeMismatch("cap has " + std::to_string(cap.rank()) + " entries, quiver has " +
                            std::to_string(n) + " vertices");
    if (w && w->size() != n)
        throw ShapeMismatch("framing vector has wrong length");
    if (const auto count = multipartition_count(cap); count > budget)
        throw BudgetExceeded(std::to_string(count) + " multipartitions exceed budget " +
                             std::to_string(budget));

    int max_cap = 0;
    for (int c : cap.max())
        max_cap = std::max(max_cap, c);
    std::vector<std::vector<PartitionInfo>> infos;
    for (int k = 0; k <= max_cap; ++k)
        infos.push_back(partition_infos(k));

    GradedSeries<RatFunc> out(cap);
    for_each_index(cap.size(), exec, [&](std::int64_t index) {
        const DimVector v = cap.key(index);
        std::vector<const std::vector<PartitionInfo>*> choices;
        for (int i = 0; i < n; ++i)
            choices.push_back(&infos[static_cast<std::size_t>(v[i])]);

        // Lexicographic by vertex, then by partition.
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<int, Poly>> terms;
        int min_exp = 0;
        while (true) {
            int e = 0;
            Poly cof(1);
            for (int i = 0; i < n; ++i) {
                const auto& info = (*choices[static_cast<std::size_t>(i)])[pick[static_cast<std::size_t>(i)]];
                e += info.hook_shift - info.self_pairing;
                if (w)
                    e += (*w)[i] * info.length;
                cof *= info.cofactor;
            }
            for (const auto& [a, b] : quiver.edges()) {
                const auto& ia = (*choices[static_cast<std::size_t>(a)])[pick[static_cast<std::size_t>(a)]];
                const auto& ib = (*choices[static_cast<std::size_t>(b)])[pick[static_cast<std::size_t>(b)]];
                e += dot(ia.conj, ib.conj);
            }
            min_exp = std::min(min_exp, e);
            terms.emplace_back(e, std::move(cof));

            int i = n - 1;
            for (; i >= 0; --i) {
                auto& p = pick[static_cast<std::size_t>(i)];
                if (++p < choices[static_cast<std::size_t>(i)]->size())
                    break;
                p = 0;
            }
            if (i < 0)
                break;
        }
        const int shift = -min_exp;
        Poly num;
        for (const auto& [e, cof] : terms)
            num += cof.shifted(e + shift);
        Poly den = Poly::monomial(1, shift);
        for (int i = 0; i < n; ++i)
            den *= q_factorial(v[i]);
        out.at(index) = RatFunc(std::move(num), std::move(den));
    });
    return out;
}

} // namespace

GradedSeries<RatFunc> denominator_series(const Quiver& quiver, const GradingCap& cap, Exec exec,
                                         std::int64_t budget) {
    return build_series(quiver, nullptr, cap, exec, budget);
}

GradedSeries<RatFunc> numerator_series(const Quiver& quiver, const DimVector& w,
                                       const GradingCap& cap, Exec exec, std::int64_t budget) {
    return build_series(quiver, &w, cap, exec, budget);
}

std::map<DimVector, BettiEntry> betti_table(const Quiver& quiver, const DimVector& w,
                                            const GradingCap& cap, Exec exec,
                                            std::int64_t budget) {
    const auto num = numerator_series(quiver, w, cap, exec, budget);
    const auto den = denominator_series(quiver, cap, exec, budget);
    const auto ratio = mul(num, invert(den, exec), exec);

    std::map<DimVector, BettiEntry> table;
    for (std::int64_t idx = 0; idx < cap.size(); ++idx) {
        BettiEntry entry;
        entry.v = cap.key(idx);
        entry.dim = dim_quiver_variety(quiver, entry.v, w);
        const RatFunc& c = ratio.at(idx);
        if (!c.is_zero()) {
            const std::string where = "coefficient of T^(" + entry.v.to_string() + ")";
            if (!c.is_polynomial())
                throw NonPolynomialCoefficient(where + " has a nontrivial denominator");
            PoincarePoly p;
            p.dim = entry.dim;
            std::map<int, BigRat> betti;
            const Poly& poly = c.num();
            for (int k = 0; k <= poly.degree(); ++k) {
                const BigRat& b = poly.coeffs()[static_cast<std::size_t>(k)];
                if (b == 0)
                    continue;
                const int degree = entry.dim - 2 * k;
                if (degree < 0 || !is_integer(b) || b < 0)
                    throw NonPolynomialCoefficient(where + " gives coefficient " + to_string(b) +
                                                   " in cohomological degree " +
                                                   std::to_string(degree));
                betti.emplace(degree, b);
            }
            p.poly = LaurentPoly(Var::t, std::move(betti));
            entry.poincare = std::move(p);
        }
        table.emplace(entry.v, std::move(entry));
    }
    return table;
}

BigInt middle_betti(const Quiver& quiver, const DimVector& v, const DimVector& w, Exec exec,
                    std::int64_t budget) {
    const auto table = betti_table(quiver, w, GradingCap(v), exec, budget);
    const auto& entry = table.at(v);
    if (entry.empty())
        throw EmptyVariety("M(" + v.to_string() + "; " + w.to_string() + ") is empty");
    return entry.poincare->betti(entry.dim);
}

BigInt chi_l2_quiver(const Quiver& quiver, const DimVector& v, const DimVector& w, Exec exec,
                     std::int64_t budget) {
    return middle_betti(quiver, v, w, exec, budget);
}

} // namespace qh
