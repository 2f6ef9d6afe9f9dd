#pragma once

#include <qh/exact/bigrat.hpp>
#include <qh/exact/bipoly.hpp>
#include <qh/exact/laurent.hpp>
#include <qh/parallel.hpp>

#include <string>
#include <vector>

namespace qh {

enum class CharKind { linear, steinberg, principal, cuspidal };

std::string to_string(CharKind kind);

// One family of irreducible characters of GL_2(F_q), split by the value of the
// central character at -Id.
struct CharFamily {
    CharKind kind{};
    BigInt degree;
    long plus = 0;
    long minus = 0;

    long size() const { return plus + minus; }
};

inline constexpr int kMaxCharQ = 49;

// Linear, Steinberg, principal series and cuspidal families for odd q <= 49.
// Central signs come from index parities on the cyclic groups of orders q - 1
// and q^2 - 1. Throws EvenQ, NotPrimePower, InvalidArgument.
std::vector<CharFamily> gl2_character_families(int q);

// |GL_2(F_q)| = q (q - 1)^2 (q + 1)
BigInt gl2_order(int q);

// Number of F_q-points of the twisted PGL_2 character variety of genus g:
//   #M(GL_2) = (q - 1) |G|^{2g-2} sum_chi chi(-Id) / chi(1)^{2g-2}
//   #M(PGL_2) = #M(GL_2) / (q - 1)^{2g}
// Throws NonIntegralCount when either division is inexact.
BigInt count_char_variety_pgl2(int g, int q);

struct MixedHodgePoly {
    int genus = 0;
    BiPoly H; // q stands for xy

    int dim() const { return 6 * genus - 6; }
};

// Closed form for genus g >= 2, the sum of four rational terms reduced over
// their common denominator. Throws NotDivisible, NonIntegral, InvalidArgument.
MixedHodgePoly mixed_hodge_pgl2(int g);

// H at q = 1.
LaurentPoly poincare_from_H(const MixedHodgePoly& h);

// E(q) = q^dim H(1/q, -1). Throws NonIntegral.
LaurentPoly e_polynomial(const MixedHodgePoly& h);

// Monomials q^j t^{2j}.
BiPoly pure_part(const MixedHodgePoly& h);

// Coefficient of q^{3g-3} t^{6g-6} in the pure part.
BigInt chi_l2_pgl2(int g);

struct PurityReport {
    int genus = 0;
    int d_mu = 0;
    LaurentPoly pure_side{Var::q};  // pure part with t^{2j} dropped
    LaurentPoly kac_side{Var::q};   // q^{d_mu/2} A(2, 1/q) on g loops
    bool agree = false;
    std::string summary;
};

// Compares the collapsed pure part with the Kac polynomial of the one-vertex
// g-loop quiver at v = 2, where d_mu = 8g - 6 is the dimension of the
// GL_2 character variety with one puncture of type (2). Never throws on a
// mismatch; the outcome is reported.
PurityReport purity_check(int g, Exec exec = Exec::parallel);

struct CrossCheckRow {
    int q = 0;
    BigInt count;
    BigInt e_value;
    bool agree = false;
};

// Character-sum counts against E(q) for each q.
std::vector<CrossCheckRow> cross_check(int g, const std::vector<int>& qs, Exec exec = Exec::parallel);

} // namespace qh
