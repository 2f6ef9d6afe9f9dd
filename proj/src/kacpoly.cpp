#include <qh/errors.hpp>
#include <qh/kacpoly.hpp>

namespace qh {

BigInt KacPolynomial::eval(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * q + *it;
    return acc;
}

BigInt KacPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size()))
        return 0;
    return coeffs[static_cast<std::size_t>(k)];
}

LaurentPoly KacPolynomial::as_laurent() const {
    std::map<int, BigRat> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        terms.emplace(static_cast<int>(k), BigRat(coeffs[k]));
    return LaurentPoly(Var::q, std::move(terms));
}

namespace {

KacPolynomial clear_coefficient(const Quiver& quiver, const DimVector& v, const RatFunc& log_coeff) {
    const RatFunc scaled = log_coeff * RatFunc(Poly(std::vector<BigRat>{-1, 1}));
    const std::string where = "A(" + v.to_string() + ")";
    if (!scaled.is_polynomial())
        throw NonPolynomialResult(where + " has a nontrivial denominator");
    KacPolynomial a{quiver, v, {}};
    for (const auto& c : scaled.num().coeffs()) {
        if (!is_integer(c))
            throw NonPolynomialResult(where + " has non-integral coefficient " + to_string(c));
        a.coeffs.push_back(c.get_num());
    }
    return a;
}

} // namespace

std::vector<KacPolynomial> kac_polynomials(const Quiver& quiver, const GradingCap& cap, Exec exec,
                                           std::int64_t budget) {
    const auto log = pleth_log(denominator_series(quiver, cap, exec, budget), exec);
    std::vector<KacPolynomial> out;
    for (std::int64_t idx = 1; idx < cap.size(); ++idx)
        out.push_back(clear_coefficient(quiver, cap.key(idx), log.at(idx)));
    return out;
}

KacPolynomial kac_polynomial(const Quiver& quiver, const DimVector& v, Exec exec,
                             std::int64_t budget) {
    if (v.size() != quiver.vertex_count())
        throw ShapeMismatch("dimension vector has " + std::to_string(v.size()) +
                            " entries, quiver has " + std::to_string(quiver.vertex_count()));
    if (v.is_zero())
        throw InvalidArgument("the Kac polynomial needs a nonzero dimension vector");
    const GradingCap cap(v);
    const auto log = pleth_log(denominator_series(quiver, cap, exec, budget), exec);
    return clear_coefficient(quiver, v, log.coeff(v));
}

WeightMultiplicity weight_multiplicity(const KacPolynomial& a) {
    return {a.constant_term(), a.quiver.has_loops()};
}

WeightMultiplicity weight_multiplicity(const Quiver& quiver, const DimVector& v, Exec exec,
                                       std::int64_t budget) {
    return weight_multiplicity(kac_polynomial(quiver, v, exec, budget));
}

PositivityReport kac_positivity_report(const KacPolynomial& a) {
    PositivityReport r;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        if (a.coeffs[k] < 0) {
            r.nonnegative = false;
            r.negative_degrees.push_back(static_cast<int>(k));
        }
    }
    r.summary = r.nonnegative ? "all coefficients non-negative"
                              : std::to_string(r.negative_degrees.size()) +
                                    " negative coefficient(s)";
    return r;
}

} // namespace qh
