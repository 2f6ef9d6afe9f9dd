#include <doctest.h>

#include <qh/errors.hpp>
#include <qh/series.hpp>

#include <random>

using namespace qh;

namespace {

using Series = GradedSeries<RatFunc>;

const Poly q = Poly::monomial(1, 1);

RatFunc rf(const Poly& num, const Poly& den = Poly(1)) { return RatFunc(num, den); }

Series from_terms(const GradingCap& cap, std::vector<std::pair<DimVector, RatFunc>> terms) {
    Series s(cap);
    for (auto& [v, c] : terms)
        s.set(v, c);
    return s;
}

RatFunc random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3), pick(0, 3);
    Poly num(std::vector<BigRat>{c(rng), c(rng), c(rng)});
    switch (pick(rng)) {
    case 0:
        return rf(num, q - Poly(1));
    case 1:
        return rf(num, q + Poly(2));
    default:
        return rf(num);
    }
}

GradingCap random_cap(std::mt19937& rng) {
    std::uniform_int_distribution<int> rank(1, 3);
    for (;;) {
        std::vector<int> max(static_cast<std::size_t>(rank(rng)));
        for (auto& m : max)
            m = std::uniform_int_distribution<int>(0, 3)(rng);
        DimVector v(max);
        if (v.total() >= 1 && v.total() <= 6)
            return GradingCap(v);
    }
}

Series random_series(std::mt19937& rng, const GradingCap& cap, RatFunc constant) {
    Series s(cap);
    s.at(0) = std::move(constant);
    for (std::int64_t i = 1; i < cap.size(); ++i)
        s.at(i) = random_coeff(rng);
    return s;
}

} // namespace

TEST_CASE("series multiplication examples") {
    const GradingCap c1(DimVector{2});
    const auto one_plus = from_terms(c1, {{{0}, 1}, {{1}, 1}});
    const auto one_minus = from_terms(c1, {{{0}, 1}, {{1}, -1}});
    CHECK(mul(one_plus, one_minus) == from_terms(c1, {{{0}, 1}, {{2}, -1}}));
    CHECK(mul(one_plus, Series::one(c1)) == one_plus);

    const GradingCap c2(DimVector{1, 1});
    const auto a = from_terms(c2, {{{0, 0}, 1}, {{1, 0}, 1}});
    const auto b = from_terms(c2, {{{0, 0}, 1}, {{0, 1}, 1}});
    CHECK(mul(a, b) == from_terms(c2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
    CHECK_THROWS_AS(mul(a, one_plus), CapMismatch);
}

TEST_CASE("series inversion examples") {
    const GradingCap cap(DimVector{4});
    const auto geometric = invert(from_terms(cap, {{{0}, 1}, {{1}, -1}}));
    for (int k = 0; k <= 4; ++k)
        CHECK(geometric.coeff(DimVector{k}) == RatFunc(1));
    CHECK(invert(Series::one(cap)) == Series::one(cap));
    CHECK(invert(from_terms(cap, {{{0}, 2}})) == from_terms(cap, {{{0}, RatFunc(frac(1, 2))}}));
    CHECK_THROWS_AS(invert(from_terms(cap, {{{1}, 1}})), NonUnitConstantTerm);
}

TEST_CASE("plethystic exponential and logarithm examples") {
    const GradingCap cap(DimVector{5});
    Series geometric(cap), q_geometric(cap);
    for (int k = 0; k <= 5; ++k) {
        geometric.set({k}, 1);
        q_geometric.set({k}, rf(Poly::monomial(1, k)));
    }
    const auto T = from_terms(cap, {{{1}, 1}});
    const auto qT = from_terms(cap, {{{1}, rf(q)}});
    CHECK(pleth_exp(T) == geometric);
    CHECK(pleth_exp(qT) == q_geometric);
    CHECK(pleth_log(geometric) == T);
    CHECK(pleth_log(q_geometric) == qT);

    const GradingCap c2(DimVector{2, 2});
    Series both(c2);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            both.set({i, j}, 1);
    const auto sum = from_terms(c2, {{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(pleth_exp(sum) == both);
    CHECK(pleth_log(both) == sum);

    CHECK_THROWS_AS(pleth_exp(geometric), NonzeroConstantTerm);
    CHECK_THROWS_AS(pleth_log(T), ConstantTermNotOne);
    CHECK_THROWS_AS(log_series(T), ConstantTermNotOne);
    CHECK_THROWS_AS(exp_series(geometric), NonzeroConstantTerm);
}

TEST_CASE("adams operation scales the grading and drops overflow") {
    const GradingCap cap(DimVector{3, 2});
    const auto s = from_terms(cap, {{{0, 0}, 1}, {{1, 0}, rf(q)}, {{1, 1}, rf(q + Poly(1))}, {{2, 0}, 5}});
    const auto psi2 = adams(s, 2);
    CHECK(psi2 == from_terms(cap, {{{0, 0}, 1}, {{2, 0}, rf(q * q)}, {{2, 2}, rf(q * q + Poly(1))}}));
}

TEST_CASE("Moebius function") {
    const std::vector<int> expected = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n)
        CHECK(moebius(n) == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("property: pleth_log inverts pleth_exp on 50 random series") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const GradingCap cap = random_cap(rng);
        const auto g = random_series(rng, cap, 0);
        CHECK(pleth_log(pleth_exp(g)) == g);
    }
}

TEST_CASE("property: log and exp are inverse") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const GradingCap cap = random_cap(rng);
        const auto g = random_series(rng, cap, 0);
        CHECK(log_series(exp_series(g)) == g);
    }
}

TEST_CASE("property: multiplication is associative and commutative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const GradingCap cap = random_cap(rng);
        const auto a = random_series(rng, cap, random_coeff(rng));
        const auto b = random_series(rng, cap, random_coeff(rng));
        const auto c = random_series(rng, cap, random_coeff(rng));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("property: a times its inverse is one for 50 random units") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const GradingCap cap = random_cap(rng);
        RatFunc unit;
        while (unit.is_zero())
            unit = random_coeff(rng);
        const auto a = random_series(rng, cap, unit);
        CHECK(mul(a, invert(a)) == Series::one(cap));
    }
}

TEST_CASE("property: truncation commutes with the series operations") {
    std::mt19937 rng(5);
    const GradingCap big(DimVector{3, 2});
    const GradingCap small(DimVector{2, 1});
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_series(rng, big, 0);
        const auto f = pleth_exp(g);
        CHECK(restrict_to(f, small) == pleth_exp(restrict_to(g, small)));
        CHECK(restrict_to(pleth_log(f), small) == pleth_log(restrict_to(f, small)));
        CHECK(restrict_to(invert(f), small) == invert(restrict_to(f, small)));
    }
    CHECK_THROWS_AS(restrict_to(Series(small), big), CapMismatch);
}

TEST_CASE("property: serial and parallel kernels agree") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const GradingCap cap = random_cap(rng);
        const auto a = random_series(rng, cap, 1);
        const auto b = random_series(rng, cap, random_coeff(rng));
        CHECK(mul(a, b, Exec::serial) == mul(a, b, Exec::parallel));
        CHECK(invert(a, Exec::serial) == invert(a, Exec::parallel));
        CHECK(pleth_log(a, Exec::serial) == pleth_log(a, Exec::parallel));
        auto g = a;
        g.at(0) = 0;
        CHECK(pleth_exp(g, Exec::serial) == pleth_exp(g, Exec::parallel));
    }
}

TEST_CASE("grading cap indexing") {
    const GradingCap cap(DimVector{2, 1, 3});
    CHECK(cap.size() == 24);
    for (std::int64_t i = 0; i < cap.size(); ++i)
        CHECK(cap.index(cap.key(i)) == i);
    CHECK(cap.key(1) == DimVector{1, 0, 0});
    std::int64_t below = 0;
    cap.for_each_below(cap.index(DimVector{1, 1, 1}), [&](std::int64_t, int) { ++below; });
    CHECK(below == 8);
    std::int64_t levels = 0;
    for (const auto& level : cap.levels())
        levels += static_cast<std::int64_t>(level.size());
    CHECK(levels == cap.size());
}
