#pragma once

#include <qh/dimvector.hpp>
#include <qh/errors.hpp>
#include <qh/exact/bigrat.hpp>
#include <qh/exact/ratfunc.hpp>
#include <qh/parallel.hpp>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace qh {

// Box truncation: a series over GradingCap c keeps exactly the monomials T^v
// with v <= c componentwise. Keys are laid out in mixed radix, first vertex
// fastest, so index(v - u) == index(v) - index(u) whenever u <= v.
class GradingCap {
public:
    GradingCap() : GradingCap(DimVector{}) {}
    explicit GradingCap(DimVector max);

    const DimVector& max() const { return max_; }
    int rank() const { return max_.size(); }
    std::int64_t size() const { return size_; }
    std::int64_t index(const DimVector& v) const;
    DimVector key(std::int64_t index) const;
    int total_degree(std::int64_t index) const { return totals_[static_cast<std::size_t>(index)]; }
    int max_total() const { return max_.total(); }
    bool contains(const DimVector& v) const { return v.fits_in(max_); }
    // Indices grouped by total degree; group d lists all keys with |v| = d.
    const std::vector<std::vector<std::int64_t>>& levels() const { return levels_; }

    friend bool operator==(const GradingCap& a, const GradingCap& b) { return a.max_ == b.max_; }

    // Calls f(index(u), |u|) for every u with 0 <= u <= key(index).
    template <class F>
    void for_each_below(std::int64_t index, F&& f) const;

private:
    DimVector max_;
    std::vector<std::int64_t> strides_;
    std::vector<int> totals_;
    std::vector<std::vector<std::int64_t>> levels_;
    std::int64_t size_ = 1;
};

template <class F>
void GradingCap::for_each_below(std::int64_t index, F&& f) const {
    const DimVector top = key(index);
    const int n = rank();
    std::vector<int> u(static_cast<std::size_t>(n), 0);
    std::int64_t idx = 0;
    int total = 0;
    while (true) {
        f(idx, total);
        int i = 0;
        for (; i < n; ++i) {
            auto& ui = u[static_cast<std::size_t>(i)];
            if (ui < top[i]) {
                ++ui;
                idx += strides_[static_cast<std::size_t>(i)];
                ++total;
                break;
            }
            idx -= static_cast<std::int64_t>(ui) * strides_[static_cast<std::size_t>(i)];
            total -= ui;
            ui = 0;
        }
        if (i == n)
            return;
    }
}

// Coefficient rings must provide an Adams operation. RatFunc acts by q -> q^s,
// plain rationals by the identity.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<RatFunc> {
    static RatFunc adams(const RatFunc& c, int s) { return c.adams(s); }
    static bool is_zero(const RatFunc& c) { return c.is_zero(); }
    static RatFunc inverse(const RatFunc& c) { return c.inverse(); }
};

template <>
struct CoeffTraits<BigRat> {
    static BigRat adams(const BigRat& c, int) { return c; }
    static bool is_zero(const BigRat& c) { return c == 0; }
    static BigRat inverse(const BigRat& c) {
        if (c == 0)
            throw NonUnitConstantTerm("inverse of zero");
        return 1 / c;
    }
};

template <class C>
class GradedSeries {
public:
    using Traits = CoeffTraits<C>;

    explicit GradedSeries(GradingCap cap)
        : cap_(std::move(cap)), c_(static_cast<std::size_t>(cap_.size()), C(0)) {}

    static GradedSeries one(GradingCap cap) {
        GradedSeries s(std::move(cap));
        s.c_[0] = C(1);
        return s;
    }

    static GradedSeries monomial(GradingCap cap, const DimVector& v, C c) {
        GradedSeries s(std::move(cap));
        s.set(v, std::move(c));
        return s;
    }

    const GradingCap& cap() const { return cap_; }
    const C& coeff(const DimVector& v) const { return c_[static_cast<std::size_t>(cap_.index(v))]; }
    const C& at(std::int64_t index) const { return c_[static_cast<std::size_t>(index)]; }
    C& at(std::int64_t index) { return c_[static_cast<std::size_t>(index)]; }
    const C& constant_term() const { return c_[0]; }

    // Monomials outside the cap are dropped.
    void set(const DimVector& v, C c) {
        if (!cap_.contains(v))
            return;
        c_[static_cast<std::size_t>(cap_.index(v))] = std::move(c);
    }

    std::vector<std::pair<DimVector, C>> terms() const {
        std::vector<std::pair<DimVector, C>> out;
        for (std::int64_t i = 0; i < cap_.size(); ++i)
            if (!Traits::is_zero(c_[static_cast<std::size_t>(i)]))
                out.emplace_back(cap_.key(i), c_[static_cast<std::size_t>(i)]);
        return out;
    }

    GradedSeries& operator+=(const GradedSeries& o) {
        check_cap(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    GradedSeries& operator-=(const GradedSeries& o) {
        check_cap(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    GradedSeries& operator*=(const BigRat& s) {
        for (auto& c : c_)
            c *= s;
        return *this;
    }
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.cap_ == b.cap_ && a.c_ == b.c_;
    }

    void check_cap(const GradedSeries& o) const {
        if (!(cap_ == o.cap_))
            throw CapMismatch("series truncated at " + cap_.max().to_string() + " vs " +
                              o.cap_.max().to_string());
    }

private:
    GradingCap cap_;
    std::vector<C> c_;
};

// Cauchy product truncated at the common cap.
template <class C>
GradedSeries<C> mul(const GradedSeries<C>& a, const GradedSeries<C>& b, Exec exec = Exec::parallel) {
    a.check_cap(b);
    const GradingCap& cap = a.cap();
    GradedSeries<C> out(cap);
    for_each_index(cap.size(), exec, [&](std::int64_t v) {
        C acc(0);
        cap.for_each_below(v, [&](std::int64_t u, int) {
            const C& x = a.at(u);
            if (CoeffTraits<C>::is_zero(x))
                return;
            const C& y = b.at(v - u);
            if (CoeffTraits<C>::is_zero(y))
                return;
            acc += x * y;
        });
        out.at(v) = std::move(acc);
    });
    return out;
}

template <class C>
GradedSeries<C> invert(const GradedSeries<C>& a, Exec exec = Exec::parallel) {
    using Traits = CoeffTraits<C>;
    if (Traits::is_zero(a.constant_term()))
        throw NonUnitConstantTerm("series constant term is zero");
    const C inv0 = Traits::inverse(a.constant_term());
    const GradingCap& cap = a.cap();
    GradedSeries<C> out(cap);
    out.at(0) = inv0;
    const auto& levels = cap.levels();
    for (std::size_t d = 1; d < levels.size(); ++d) {
        const auto& level = levels[d];
        for_each_index(static_cast<std::int64_t>(level.size()), exec, [&](std::int64_t k) {
            const std::int64_t v = level[static_cast<std::size_t>(k)];
            C acc(0);
            cap.for_each_below(v, [&](std::int64_t u, int) {
                if (u == 0)
                    return;
                const C& x = a.at(u);
                if (Traits::is_zero(x))
                    return;
                const C& y = out.at(v - u);
                if (Traits::is_zero(y))
                    return;
                acc += x * y;
            });
            out.at(v) = -(acc * inv0);
        });
    }
    return out;
}

// psi_s: coefficients transformed by the ring's Adams operation, T^v -> T^{s v};
// monomials pushed outside the cap are dropped.
template <class C>
GradedSeries<C> adams(const GradedSeries<C>& a, int s) {
    const GradingCap& cap = a.cap();
    GradedSeries<C> out(cap);
    for (std::int64_t i = 0; i < cap.size(); ++i) {
        const C& c = a.at(i);
        if (CoeffTraits<C>::is_zero(c))
            continue;
        DimVector v = cap.key(i);
        for (int j = 0; j < v.size(); ++j)
            v[j] *= s;
        if (cap.contains(v))
            out.set(v, CoeffTraits<C>::adams(c, s));
    }
    return out;
}

// Ordinary logarithm of a series with constant term 1, via the Euler-operator
// recursion |v| f_v = sum_{0 < u <= v} |u| L_u f_{v-u}.
template <class C>
GradedSeries<C> log_series(const GradedSeries<C>& f, Exec exec = Exec::parallel) {
    using Traits = CoeffTraits<C>;
    if (!(f.constant_term() == C(1)))
        throw ConstantTermNotOne("log needs constant term 1");
    const GradingCap& cap = f.cap();
    GradedSeries<C> out(cap);
    const auto& levels = cap.levels();
    for (std::size_t d = 1; d < levels.size(); ++d) {
        const auto& level = levels[d];
        for_each_index(static_cast<std::int64_t>(level.size()), exec, [&](std::int64_t k) {
            const std::int64_t v = level[static_cast<std::size_t>(k)];
            C acc(0);
            cap.for_each_below(v, [&](std::int64_t u, int tu) {
                if (u == 0 || u == v)
                    return;
                const C& x = out.at(u);
                if (Traits::is_zero(x))
                    return;
                const C& y = f.at(v - u);
                if (Traits::is_zero(y))
                    return;
                acc += (x * y) * BigRat(tu);
            });
            out.at(v) = f.at(v) - acc * frac(1, static_cast<long>(d));
        });
    }
    return out;
}

// Ordinary exponential of a series with zero constant term.
template <class C>
GradedSeries<C> exp_series(const GradedSeries<C>& g, Exec exec = Exec::parallel) {
    using Traits = CoeffTraits<C>;
    if (!Traits::is_zero(g.constant_term()))
        throw NonzeroConstantTerm("exp needs zero constant term");
    const GradingCap& cap = g.cap();
    GradedSeries<C> out = GradedSeries<C>::one(cap);
    const auto& levels = cap.levels();
    for (std::size_t d = 1; d < levels.size(); ++d) {
        const auto& level = levels[d];
        for_each_index(static_cast<std::int64_t>(level.size()), exec, [&](std::int64_t k) {
            const std::int64_t v = level[static_cast<std::size_t>(k)];
            C acc(0);
            cap.for_each_below(v, [&](std::int64_t u, int tu) {
                if (u == 0)
                    return;
                const C& x = g.at(u);
                if (Traits::is_zero(x))
                    return;
                const C& y = out.at(v - u);
                if (Traits::is_zero(y))
                    return;
                acc += (x * y) * BigRat(tu);
            });
            out.at(v) = acc * frac(1, static_cast<long>(d));
        });
    }
    return out;
}

// Moebius function, tabulated on first use.
int moebius(int n);

// Exp(g) = exp(sum_{s>=1} psi_s(g) / s)
template <class C>
GradedSeries<C> pleth_exp(const GradedSeries<C>& g, Exec exec = Exec::parallel) {
    if (!CoeffTraits<C>::is_zero(g.constant_term()))
        throw NonzeroConstantTerm("plethystic Exp needs zero constant term");
    GradedSeries<C> sum(g.cap());
    for (int s = 1; s <= g.cap().max_total(); ++s) {
        GradedSeries<C> term = adams(g, s);
        term *= frac(1, s);
        sum += term;
    }
    return exp_series(sum, exec);
}

// Log(f) = sum_{s>=1} mu(s)/s psi_s(log f)
template <class C>
GradedSeries<C> pleth_log(const GradedSeries<C>& f, Exec exec = Exec::parallel) {
    if (!(f.constant_term() == C(1)))
        throw ConstantTermNotOne("plethystic Log needs constant term 1");
    const GradedSeries<C> lf = log_series(f, exec);
    GradedSeries<C> out(f.cap());
    for (int s = 1; s <= f.cap().max_total(); ++s) {
        const int mu = moebius(s);
        if (mu == 0)
            continue;
        GradedSeries<C> term = adams(lf, s);
        term *= frac(mu, s);
        out += term;
    }
    return out;
}

// Truncation of a to a smaller cap.
template <class C>
GradedSeries<C> restrict_to(const GradedSeries<C>& a, const GradingCap& smaller) {
    if (smaller.rank() != a.cap().rank() || !a.cap().contains(smaller.max()))
        throw CapMismatch("restriction target " + smaller.max().to_string() + " not inside " +
                          a.cap().max().to_string());
    GradedSeries<C> out(smaller);
    for (std::int64_t i = 0; i < smaller.size(); ++i)
        out.at(i) = a.coeff(smaller.key(i));
    return out;
}

} // namespace qh
