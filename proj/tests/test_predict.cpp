#include <doctest.h>

#include <qh/charvar.hpp>
#include <qh/errors.hpp>
#include <qh/fforacle.hpp>
#include <qh/kacpoly.hpp>
#include <qh/predict.hpp>

#include <numeric>

using namespace qh;

namespace {

ParabolicType type(int g, const std::string& spec) { return {g, parse_punctures(spec)}; }

const char* const kD4Tilde = "vertices 5\nedge 1 0\nedge 2 0\nedge 3 0\nedge 4 0\n";

std::string spec_of(const Partition& lambda) {
    std::string s;
    for (int part : lambda.parts())
        s += (s.empty() ? "" : ",") + std::to_string(part);
    return s;
}

// Every multiset of k partitions of n, as ';'-joined specs.
void multisets(const std::vector<Partition>& parts, std::size_t from, int k, std::string prefix,
               std::vector<std::string>& out) {
    if (k == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t i = from; i < parts.size(); ++i)
        multisets(parts, i, k - 1, prefix + (prefix.empty() ? "" : ";") + spec_of(parts[i]), out);
}

} // namespace

TEST_CASE("Euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
    CHECK_THROWS_AS(euler_phi(0), InvalidArgument);
}

TEST_CASE("property: Euler phi is multiplicative and counts coprime residues") {
    for (long a = 1; a <= 50; ++a) {
        long direct = 0;
        for (long i = 1; i <= a; ++i)
            direct += std::gcd(i, a) == 1;
        CHECK(euler_phi(a) == direct);
        for (long b = 1; b <= 50; ++b)
            if (std::gcd(a, b) == 1)
                CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
    }
}

TEST_CASE("Sen predictions") {
    CHECK(sen_l2_dim(5, 8).dimension == 4);
    CHECK(sen_l2_dim(5, 7).dimension == 0);
    CHECK(sen_l2_dim(2, 2).dimension == 1);
    CHECK(sen_l2_dim(5, 8).source == "Sen");
    CHECK(sen_l2_dim(5, 8).degree == 8);
    CHECK_THROWS_AS(sen_l2_dim(0, 0), InvalidArgument);
    CHECK_THROWS_AS(sen_l2_dim(3, -1), InvalidArgument);
}

TEST_CASE("property: Sen forms live only in the middle degree") {
    for (int k = 2; k <= 20; ++k) {
        int nonzero = 0;
        for (int d = 0; d <= 4 * k - 4; ++d) {
            const auto p = sen_l2_dim(k, d);
            if (p.dimension != 0) {
                ++nonzero;
                CHECK(d == 2 * k - 2);
                CHECK(p.dimension == euler_phi(k));
            }
        }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("Segal-Selby bound") {
    CHECK(segal_selby_bound(5) == 4);
    CHECK(segal_selby_bound(6) == 2);
    for (int k = 2; k <= 20; ++k)
        CHECK(segal_selby_bound(k) == sen_l2_dim(k, 2 * k - 2).dimension);
    CHECK_THROWS_AS(segal_selby_bound(0), InvalidArgument);
}

TEST_CASE("main conjecture examples") {
    CHECK(conjecture_main(type(2, "2")).dimension == 0);
    CHECK(conjecture_main(type(1, "1,1")).dimension == 1);
    const auto d4 = conjecture_main(type(0, "1,1;1,1;1,1;1,1"));
    CHECK(d4.dimension == 4);
    CHECK(d4.source == "main conjecture");
    CHECK_FALSE(d4.degree.has_value());
    CHECK(conjecture_main(type(0, "1,1,1;1,1,1;1,1,1")).dimension == 6);
    CHECK(conjecture_main(type(0, "2,1;2,1;2,1;1,1,1")).dimension == 4);
    CHECK_THROWS_AS(conjecture_main(type(-1, "1,1")), InvalidArgument);
    CHECK_THROWS_AS(conjecture_main(ParabolicType{0, {}}), InvalidPartition);
}

TEST_CASE("genus zero prediction from point counts of indecomposables") {
    // A(q) = q + 4 is linear, so two primes determine A(0).
    const Quiver d4 = parse_quiver(kD4Tilde);
    const DimVector delta = parse_dim_vector("2,1,1,1,1");
    const BigInt a2 = brute_kac(d4, delta, 2);
    const BigInt a3 = brute_kac(d4, delta, 3);
    CHECK(3 * a2 - 2 * a3 == conjecture_main(type(0, "1,1;1,1;1,1;1,1")).dimension);
}

TEST_CASE("property: genus zero equals the crab weight multiplicity") {
    for (int n = 1; n <= 3; ++n) {
        const auto parts = partitions_of(n);
        const int max_k = n == 3 ? 3 : 4;
        for (int k = 1; k <= max_k; ++k) {
            std::vector<std::string> specs;
            multisets(parts, 0, k, "", specs);
            for (const auto& spec : specs) {
                CAPTURE(spec);
                const ParabolicType mu = type(0, spec);
                const CrabQuiver crab = crab_quiver(mu);
                CHECK(conjecture_main(mu).dimension == weight_multiplicity(crab.quiver, crab.dims).value);
            }
        }
    }
}

TEST_CASE("property: higher genus with one full puncture matches the character variety") {
    for (int g = 2; g <= 6; ++g)
        CHECK(conjecture_main(type(g, "2")).dimension == chi_l2_pgl2(g));
    for (int g = 1; g <= 3; ++g)
        CHECK(conjecture_main(type(g, "1,1;2")).dimension == (g == 1 ? 1 : 0));
}

TEST_CASE("Vafa-Witten predictions") {
    const Quiver a1 = parse_quiver("vertices 1\n");
    const Quiver jordan = parse_quiver("vertices 1\nedge 0 0\n");
    const auto p = vafa_witten(a1, parse_dim_vector("1"), parse_dim_vector("2"));
    CHECK(p.dimension == 1);
    CHECK(p.source == "Vafa-Witten");
    CHECK(vafa_witten(jordan, parse_dim_vector("2"), parse_dim_vector("1")).dimension == 0);
    CHECK(vafa_witten(jordan, parse_dim_vector("3"), parse_dim_vector("1")).dimension ==
          chi_l2_quiver(jordan, parse_dim_vector("3"), parse_dim_vector("1")));
    CHECK_THROWS_AS(vafa_witten(a1, parse_dim_vector("3"), parse_dim_vector("1")), EmptyVariety);
    CHECK_THROWS_AS(vafa_witten(a1, parse_dim_vector("1,1"), parse_dim_vector("1")), ShapeMismatch);
}

TEST_CASE("property: Vafa-Witten equals the middle Betti number") {
    const Quiver a2 = parse_quiver("vertices 2\nedge 0 1\n");
    for (int v0 = 0; v0 <= 2; ++v0)
        for (int v1 = 0; v1 <= 2; ++v1) {
            const DimVector v({v0, v1});
            const DimVector w({2, 1});
            const auto table = betti_table(a2, w, GradingCap(v));
            const auto& e = table.at(v);
            if (e.empty())
                continue;
            CHECK(vafa_witten(a2, v, w).dimension == e.poincare->betti(e.dim));
        }
}
