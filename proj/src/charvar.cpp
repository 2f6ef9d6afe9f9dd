#include <qh/charvar.hpp>

#include <qh/errors.hpp>
#include <qh/kacpoly.hpp>

namespace qh {

namespace {

bool is_prime_power(int q) {
    if (q < 2)
        return false;
    int p = 2;
    while (q % p != 0)
        ++p;
    while (q % p == 0)
        q /= p;
    return q == 1;
}

void check_q(int q) {
    if (q < 2 || q > kMaxCharQ)
        throw InvalidArgument("q = " + std::to_string(q) + " outside 2.." + std::to_string(kMaxCharQ));
    if (q % 2 == 0)
        throw EvenQ("q = " + std::to_string(q) + " is even, so -Id = Id and the twist is trivial");
    if (!is_prime_power(q))
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
}

void check_genus(int g, int min_genus) {
    if (g < min_genus)
        throw InvalidArgument("genus must be at least " + std::to_string(min_genus) + ", got " +
                              std::to_string(g));
}

BiPoly mono(long c, int qdeg, int tdeg) { return BiPoly::monomial(BigRat(c), qdeg, tdeg); }

} // namespace

std::string to_string(CharKind kind) {
    switch (kind) {
    case CharKind::linear:
        return "linear";
    case CharKind::steinberg:
        return "steinberg";
    case CharKind::principal:
        return "principal";
    case CharKind::cuspidal:
        return "cuspidal";
    }
    return "?";
}

std::vector<CharFamily> gl2_character_families(int q) {
    check_q(q);
    std::vector<CharFamily> out;
    // alpha_a(-1) = (-1)^a for a generator of F_q^*, and det(-Id) = 1.
    out.push_back({CharKind::linear, BigInt(1), q - 1, 0});
    out.push_back({CharKind::steinberg, BigInt(q), q - 1, 0});

    CharFamily principal{CharKind::principal, BigInt(q + 1), 0, 0};
    for (int a = 0; a < q - 1; ++a)
        for (int b = a + 1; b < q - 1; ++b)
            ((a + b) % 2 == 0 ? principal.plus : principal.minus) += 1;
    out.push_back(principal);

    // theta_c restricted to F_q^* sends -1 to (-1)^c; Frobenius acts by c -> cq.
    CharFamily cuspidal{CharKind::cuspidal, BigInt(q - 1), 0, 0};
    const long order = static_cast<long>(q) * q - 1;
    for (long c = 0; c < order; ++c) {
        const long image = c * q % order;
        if (image == c || image < c)
            continue;
        (c % 2 == 0 ? cuspidal.plus : cuspidal.minus) += 1;
    }
    out.push_back(cuspidal);
    return out;
}

BigInt gl2_order(int q) {
    const BigInt Q(q);
    return Q * (Q - 1) * (Q - 1) * (Q + 1);
}

BigInt count_char_variety_pgl2(int g, int q) {
    check_genus(g, 1);
    const auto families = gl2_character_families(q);
    const BigInt G = gl2_order(q);
    const auto e = static_cast<unsigned long>(2 * g - 2);
    BigRat S = 0;
    for (const auto& f : families)
        S += BigRat(BigInt(f.plus - f.minus)) / BigRat(ipow(f.degree, e));
    const BigRat gl_count = BigRat(BigInt(q - 1) * ipow(G, e)) * S;
    if (!is_integer(gl_count))
        throw NonIntegralCount("GL_2 count " + to_string(gl_count) + " at g = " + std::to_string(g) +
                               ", q = " + std::to_string(q));
    const BigInt torus = ipow(BigInt(q - 1), static_cast<unsigned long>(2 * g));
    const BigInt n = gl_count.get_num();
    if (n % torus != 0)
        throw NonIntegralCount("GL_2 count " + to_string(n) + " not divisible by (q-1)^" +
                               std::to_string(2 * g));
    return n / torus;
}

MixedHodgePoly mixed_hodge_pgl2(int g) {
    check_genus(g, 2);
    const auto n = static_cast<unsigned>(2 * g);
    const BiPoly one = mono(1, 0, 0);
    const BiPoly shift = mono(1, 2 * g - 2, 4 * g - 4);

    const BiPoly q2t2m1 = mono(1, 2, 2) - one;
    const BiPoly q2t4m1 = mono(1, 2, 4) - one;
    const BiPoly q2m1 = mono(1, 2, 0) - one;
    const BiPoly qt2m1 = mono(1, 1, 2) - one;
    const BiPoly qt2p1 = mono(1, 1, 2) + one;
    const BiPoly qm1 = mono(1, 1, 0) - one;
    const BiPoly qp1 = mono(1, 1, 0) + one;

    // Common denominator (q^2 t^2 - 1)(q^2 t^4 - 1)(q^2 - 1).
    const BiPoly denominator = q2t2m1 * q2t4m1 * q2m1;
    BiPoly numerator = (mono(1, 2, 3) + one).pow(n) * q2m1;
    numerator += shift * (mono(1, 2, 1) + one).pow(n) * q2t4m1;
    numerator -= shift * (mono(1, 1, 1) + one).pow(n) * q2t2m1 * qt2p1 * qp1 * frac(1, 2);
    numerator -= shift * (mono(1, 1, 1) - one).pow(n) * q2t2m1 * qt2m1 * qm1 * frac(1, 2);

    MixedHodgePoly h{g, exact_divide(numerator, denominator)};
    for (const auto& [e, c] : h.H.terms())
        if (!is_integer(c) || c < 0 || e.first < 0 || e.second < 0)
            throw NonIntegral("H has coefficient " + to_string(c) + " at q^" + std::to_string(e.first) +
                              " t^" + std::to_string(e.second));
    if (h.H.coeff(0, 0) != 1)
        throw NonIntegral("H has constant term " + to_string(h.H.coeff(0, 0)));
    return h;
}

LaurentPoly poincare_from_H(const MixedHodgePoly& h) {
    std::map<int, BigRat> terms;
    for (const auto& [e, c] : h.H.terms())
        terms[e.second] += c;
    return LaurentPoly(Var::t, std::move(terms));
}

LaurentPoly e_polynomial(const MixedHodgePoly& h) {
    std::map<int, BigRat> terms;
    for (const auto& [e, c] : h.H.terms())
        terms[h.dim() - e.first] += e.second % 2 == 0 ? c : BigRat(-c);
    LaurentPoly E(Var::q, std::move(terms));
    for (const auto& [k, c] : E.terms())
        if (!is_integer(c))
            throw NonIntegral("E has coefficient " + to_string(c) + " at q^" + std::to_string(k));
    return E;
}

BiPoly pure_part(const MixedHodgePoly& h) {
    std::map<BiExp, BigRat> terms;
    for (const auto& [e, c] : h.H.terms())
        if (e.second == 2 * e.first)
            terms.emplace(e, c);
    return BiPoly(std::move(terms));
}

BigInt chi_l2_pgl2(int g) {
    const BiPoly pure = pure_part(mixed_hodge_pgl2(g));
    return pure.coeff(3 * g - 3, 6 * g - 6).get_num();
}

PurityReport purity_check(int g, Exec exec) {
    check_genus(g, 2);
    PurityReport report;
    report.genus = g;
    report.d_mu = 8 * g - 6;

    const BiPoly pure = pure_part(mixed_hodge_pgl2(g));
    std::map<int, BigRat> left;
    for (const auto& [e, c] : pure.terms())
        left[e.first] += c;
    report.pure_side = LaurentPoly(Var::q, std::move(left));

    const Quiver loops(1, std::vector<Quiver::Edge>(static_cast<std::size_t>(g), Quiver::Edge{0, 0}));
    const KacPolynomial A = kac_polynomial(loops, DimVector({2}), exec);
    std::map<int, BigRat> right;
    for (std::size_t k = 0; k < A.coeffs.size(); ++k)
        if (A.coeffs[k] != 0)
            right[report.d_mu / 2 - static_cast<int>(k)] += BigRat(A.coeffs[k]);
    report.kac_side = LaurentPoly(Var::q, std::move(right));

    report.agree = report.pure_side == report.kac_side;
    report.summary = "pure part " + pretty(report.pure_side) + (report.agree ? " == " : " != ") +
                     "q^" + std::to_string(report.d_mu / 2) + " A(2, 1/q) = " + pretty(report.kac_side);
    return report;
}

std::vector<CrossCheckRow> cross_check(int g, const std::vector<int>& qs, Exec exec) {
    std::vector<CrossCheckRow> rows(qs.size());
    const LaurentPoly E = g >= 2 ? e_polynomial(mixed_hodge_pgl2(g)) : LaurentPoly::constant(Var::q, 1);
    for_each_index(static_cast<std::int64_t>(qs.size()), exec, [&](std::int64_t i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.q = qs[static_cast<std::size_t>(i)];
        row.count = count_char_variety_pgl2(g, row.q);
        row.e_value = E.eval(BigRat(row.q)).get_num();
        row.agree = row.count == row.e_value;
    });
    return rows;
}

} // namespace qh
