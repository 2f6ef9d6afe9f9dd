#include <doctest.h>

#include <qh/charvar.hpp>
#include <qh/errors.hpp>

#include <array>
#include <map>

using namespace qh;

namespace {

const std::vector<int> supported_q = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49};

const char* const kGenusThree =
    "t^12 q^12 + t^12 q^10 + 6 t^11 q^10 + t^12 q^8 + t^10 q^10 + 6 t^11 q^8 + 16 t^10 q^8 + 6 t^9 q^8"
    " + t^10 q^6 + t^8 q^8 + 26 t^9 q^6 + 16 t^8 q^6 + 6 t^7 q^6 + t^8 q^4 + t^6 q^6 + 6 t^7 q^4"
    " + 16 t^6 q^4 + 6 t^5 q^4 + t^4 q^4 + t^4 q^2 + 6 t^3 q^2 + t^2 q^2 + 1";

BiPoly bi(std::initializer_list<std::tuple<long, int, int>> terms) {
    BiPoly p;
    for (const auto& [c, a, b] : terms)
        p += BiPoly::monomial(BigRat(c), a, b);
    return p;
}

// GL_2(F_p) by brute force: elements as (a, b, c, d), commutator statistics,
// and the number of 2g-tuples whose product of commutators is -Id.
class BruteGL2 {
public:
    using M = std::array<int, 4>;

    explicit BruteGL2(int p) : p_(p) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d)
                        if (((a * d - b * c) % p + p) % p != 0) {
                            index_[{a, b, c, d}] = static_cast<int>(elems_.size());
                            elems_.push_back({a, b, c, d});
                        }
        const std::size_t n = elems_.size();
        commutators_.assign(n, 0);
        for (const auto& x : elems_)
            for (const auto& y : elems_)
                ++commutators_[id(mul(mul(x, y), mul(inv(x), inv(y))))];
    }

    long order() const { return static_cast<long>(elems_.size()); }

    BigInt tuples(int g) const {
        std::vector<BigInt> dist(elems_.size(), 0);
        dist[id({1, 0, 0, 1})] = 1;
        for (int k = 0; k < g; ++k) {
            std::vector<BigInt> next(elems_.size(), 0);
            for (std::size_t x = 0; x < elems_.size(); ++x) {
                if (dist[x] == 0)
                    continue;
                for (std::size_t y = 0; y < elems_.size(); ++y)
                    if (commutators_[y] != 0)
                        next[id(mul(elems_[x], elems_[y]))] += dist[x] * commutators_[y];
            }
            dist = std::move(next);
        }
        return dist[id({p_ - 1, 0, 0, p_ - 1})];
    }

private:
    M mul(const M& x, const M& y) const {
        return {(x[0] * y[0] + x[1] * y[2]) % p_, (x[0] * y[1] + x[1] * y[3]) % p_,
                (x[2] * y[0] + x[3] * y[2]) % p_, (x[2] * y[1] + x[3] * y[3]) % p_};
    }
    M inv(const M& x) const {
        const int det = ((x[0] * x[3] - x[1] * x[2]) % p_ + p_) % p_;
        int di = 1;
        while (di * det % p_ != 1)
            ++di;
        return {x[3] * di % p_, (p_ - x[1]) * di % p_, (p_ - x[2]) * di % p_, x[0] * di % p_};
    }
    std::size_t id(const M& x) const { return static_cast<std::size_t>(index_.at(x)); }

    int p_;
    std::vector<M> elems_;
    std::map<M, int> index_;
    std::vector<long> commutators_;
};

} // namespace

TEST_CASE("GL2(F_3) character families") {
    const auto f = gl2_character_families(3);
    REQUIRE(f.size() == 4);
    CHECK(f[0].kind == CharKind::linear);
    CHECK(f[0].plus == 2);
    CHECK(f[0].minus == 0);
    CHECK(f[1].kind == CharKind::steinberg);
    CHECK(f[1].plus == 2);
    CHECK(f[1].minus == 0);
    CHECK(f[2].kind == CharKind::principal);
    CHECK(f[2].plus == 0);
    CHECK(f[2].minus == 1);
    CHECK(f[3].kind == CharKind::cuspidal);
    CHECK(f[3].plus == 1);
    CHECK(f[3].minus == 2);
    long total = 0;
    BigInt squares = 0;
    for (const auto& fam : f) {
        total += fam.size();
        squares += fam.degree * fam.degree * fam.size();
    }
    CHECK(total == 8);
    CHECK(squares == 48);
}

TEST_CASE("property: Burnside and class-count identities for every supported q") {
    for (int q : supported_q) {
        CAPTURE(q);
        const auto f = gl2_character_families(q);
        long total = 0;
        BigInt squares = 0;
        for (const auto& fam : f) {
            total += fam.size();
            squares += fam.degree * fam.degree * fam.size();
        }
        CHECK(total == static_cast<long>(q) * q - 1);
        CHECK(squares == gl2_order(q));
        CHECK(f[0].size() == q - 1);
        CHECK(f[1].size() == q - 1);
        CHECK(f[2].size() == (q - 1) * (q - 2) / 2);
        CHECK(f[3].size() == (static_cast<long>(q) * q - q) / 2);
        CHECK(f[0].degree == 1);
        CHECK(f[1].degree == q);
        CHECK(f[2].degree == q + 1);
        CHECK(f[3].degree == q - 1);
    }
}

TEST_CASE("character family domain errors") {
    CHECK_THROWS_AS(gl2_character_families(4), EvenQ);
    CHECK_THROWS_AS(gl2_character_families(15), NotPrimePower);
    CHECK_THROWS_AS(gl2_character_families(1), InvalidArgument);
    CHECK_THROWS_AS(gl2_character_families(51), InvalidArgument);
    CHECK_THROWS_AS(count_char_variety_pgl2(0, 3), InvalidArgument);
    CHECK_THROWS_AS(mixed_hodge_pgl2(1), InvalidArgument);
}

TEST_CASE("genus one counts a single point") {
    CHECK(count_char_variety_pgl2(1, 3) == 1);
    CHECK(count_char_variety_pgl2(1, 5) == 1);
    for (int q : supported_q)
        CHECK(count_char_variety_pgl2(1, q) == 1);
}

TEST_CASE("character-sum count against brute-force commutator counting") {
    for (int p : {3, 5}) {
        const BruteGL2 G(p);
        REQUIRE(BigInt(G.order()) == gl2_order(p));
        for (int g = 1; g <= 3; ++g) {
            CAPTURE(p);
            CAPTURE(g);
            // PGL_2 acts freely on the tuples, so #M(GL_2) = N / |PGL_2|.
            const BigInt gl_count = G.tuples(g) * (p - 1) / G.order();
            const BigInt torus = ipow(BigInt(p - 1), static_cast<unsigned long>(2 * g));
            CHECK(count_char_variety_pgl2(g, p) == gl_count / torus);
        }
    }
}

TEST_CASE("mixed Hodge polynomial for genus three") {
    const auto h = mixed_hodge_pgl2(3);
    CHECK(h.H == parse_bipoly(kGenusThree));
    CHECK(h.H.size() == 23);
    CHECK(h.H.coeff(2, 3) == 6);
    CHECK(h.dim() == 12);
    CHECK(mixed_hodge_pgl2(2).H.coeff(0, 0) == 1);
}

TEST_CASE("Poincare polynomial for genus three") {
    const auto P = poincare_from_H(mixed_hodge_pgl2(3));
    CHECK(P.coeff(0) == 1);
    CHECK(P.coeff(2) == 1);
    CHECK(P.coeff(3) == 6);
    CHECK(P.coeff(12) == 3);
}

TEST_CASE("E-polynomials") {
    const auto E2 = e_polynomial(mixed_hodge_pgl2(2));
    CHECK(E2.max_degree() == 6);
    CHECK(E2.coeff(6) == 1);
    const auto E3 = e_polynomial(mixed_hodge_pgl2(3));
    CHECK(E3.eval(3) == BigRat(count_char_variety_pgl2(3, 3)));
    CHECK(E3.eval(5) == BigRat(count_char_variety_pgl2(3, 5)));
}

TEST_CASE("pure parts") {
    CHECK(pure_part(mixed_hodge_pgl2(3)) == bi({{1, 0, 0}, {1, 2, 4}, {1, 4, 8}}));
    CHECK(pure_part(mixed_hodge_pgl2(2)) == bi({{1, 0, 0}, {1, 2, 4}}));
    CHECK(chi_l2_pgl2(3) == 0);
    CHECK(chi_l2_pgl2(2) == 0);
    CHECK(chi_l2_pgl2(5) == 0);
}

TEST_CASE("property: Newstead truncation and vanishing chi_L2 for genus 2 to 6") {
    for (int g = 2; g <= 6; ++g) {
        CAPTURE(g);
        const auto h = mixed_hodge_pgl2(g);
        BiPoly expected;
        for (int j = 0; j < g; ++j)
            expected += BiPoly::monomial(1, 2 * j, 4 * j);
        CHECK(pure_part(h) == expected);
        CHECK(chi_l2_pgl2(g) == 0);
        const LaurentPoly P = poincare_from_H(h);
        for (const auto& [deg, b] : P.terms()) {
            CHECK(is_integer(b));
            CHECK(b > 0);
        }
        for (const auto& [e, c] : h.H.terms()) {
            CHECK(is_integer(c));
            CHECK(c > 0);
        }
    }
}

TEST_CASE("property: character sums match the E-polynomial") {
    for (int g : {2, 3})
        for (const auto& row : cross_check(g, {3, 5, 7, 9})) {
            CAPTURE(g);
            CAPTURE(row.q);
            CHECK(row.agree);
        }
    const auto serial = cross_check(2, {3, 5, 7}, Exec::serial);
    const auto parallel = cross_check(2, {3, 5, 7}, Exec::parallel);
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial[i].count == parallel[i].count);
}

TEST_CASE("purity comparison") {
    const auto r3 = purity_check(3);
    CHECK(r3.pure_side == LaurentPoly(Var::q, {{0, 1}, {2, 1}, {4, 1}}));
    const auto r2 = purity_check(2);
    CHECK(r2.pure_side == LaurentPoly(Var::q, {{0, 1}, {2, 1}}));
    for (int g = 2; g <= 5; ++g) {
        const auto r = purity_check(g);
        CHECK(r.d_mu == 8 * g - 6);
        CHECK(r.agree);
        CHECK(r.summary.find(pretty(r.pure_side)) != std::string::npos);
        CHECK(r.summary.find(pretty(r.kac_side)) != std::string::npos);
    }
}
