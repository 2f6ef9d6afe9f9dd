#include "commands.hpp"

#include <qh/charvar.hpp>
#include <qh/errors.hpp>
#include <qh/exact/bipoly.hpp>
#include <qh/fforacle.hpp>
#include <qh/kacpoly.hpp>
#include <qh/predict.hpp>
#include <qh/qvbetti.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace qh::cli {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition)
        throw InvalidArgument(message);
}

Quiver load_quiver(const RunConfig& c) {
    require(!c.quiver_path.empty(), "--quiver is required");
    return read_quiver_file(resolve_data_path(c.quiver_path));
}

std::int64_t budget_or(const RunConfig& c, std::int64_t fallback) {
    return c.budget > 0 ? c.budget : fallback;
}

std::string canonical(const LaurentPoly& p) { return serialize(BiPoly::from_laurent(p)); }

json dims(const DimVector& v) { return json(v.entries()); }

std::string paren(const DimVector& v) { return "(" + v.to_string() + ")"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string quiver_summary(const Quiver& q) {
    return std::to_string(q.vertex_count()) + (q.vertex_count() == 1 ? " vertex, " : " vertices, ") +
           std::to_string(q.edges().size()) + (q.edges().size() == 1 ? " edge" : " edges");
}

std::vector<int> primes_or(const RunConfig& c, std::vector<int> fallback) {
    return c.qs.empty() ? fallback : c.qs;
}

// Shared by `oracle fiber` and manifest runs.
void fiber_instance(const Quiver& quiver, const DimVector& v, const DimVector& w,
                    const std::vector<int>& primes, std::int64_t budget, const std::string& label,
                    Output& out) {
    std::vector<CountRecord> records;
    json counts = json::array();
    for (int p : primes) {
        records.push_back(count_moment_fiber(quiver, v, w, p, Exec::parallel, budget));
        const auto& r = records.back();
        counts.push_back({{"p", p},
                          {"raw", to_string(r.raw)},
                          {"group_order", to_string(r.group_order)},
                          {"quotient", to_string(r.quotient)},
                          {"generic_level", r.generic_level}});
        out.rows.push_back({label, std::to_string(p), to_string(r.raw), to_string(r.group_order),
                            to_string(r.quotient), yes_no(r.generic_level)});
    }
    const int dim = dim_quiver_variety(quiver, v, w);
    json entry = {{"label", label}, {"v", dims(v)}, {"w", dims(w)}, {"dim", dim}, {"counts", counts}};

    const auto table = betti_table(quiver, w, GradingCap(v), Exec::parallel);
    const auto& formula = table.at(v);
    entry["formula"] = formula.empty() ? json(nullptr) : json(canonical(formula.poincare->poly));
    std::string verdict;
    try {
        const LaurentPoly P = counts_to_poincare(records, dim);
        entry["interpolated"] = canonical(P);
        const bool agree = !formula.empty() && formula.poincare->poly == P;
        entry["agree"] = agree;
        verdict = "P = " + pretty(P) + (agree ? "  (matches the generating function)" : "");
        if (!agree)
            out.alarm("InconsistentCounts", label + ": interpolated " + pretty(P) + " but generating function gives " +
                                                (formula.empty() ? "empty" : pretty(formula.poincare->poly)));
    } catch (const CorrectnessAlarm& a) {
        entry["interpolated"] = nullptr;
        entry["agree"] = false;
        verdict = a.what();
        out.alarm(a.kind(), label + ": " + a.what());
    }
    out.text.push_back(label + "  dim " + std::to_string(dim) + "  " + verdict);
    out.results["instances"].push_back(entry);
}

void kac_instance(const Quiver& quiver, const DimVector& v, const std::vector<int>& primes,
                  std::int64_t budget, const std::string& label, Output& out) {
    const KacPolynomial A = kac_polynomial(quiver, v, Exec::parallel);
    json values = json::array();
    bool all = true;
    for (int p : primes) {
        const BigInt brute = brute_kac(quiver, v, p, Exec::parallel, budget);
        const BigInt formula = A.eval(BigInt(p));
        const bool agree = brute == formula;
        all = all && agree;
        values.push_back({{"p", p}, {"brute", to_string(brute)}, {"formula", to_string(formula)}, {"agree", agree}});
        out.rows.push_back({label, std::to_string(p), to_string(brute), to_string(formula), yes_no(agree)});
        if (!agree)
            out.alarm("InconsistentCounts", label + " at p = " + std::to_string(p) + ": brute force " +
                                                to_string(brute) + ", A(p) = " + to_string(formula));
    }
    out.text.push_back(label + "  A = " + pretty(A.as_laurent(), TermOrder::descending) +
                       (all ? "  (all primes agree)" : "  (MISMATCH)"));
    out.results["instances"].push_back(
        {{"label", label}, {"v", dims(v)}, {"A", canonical(A.as_laurent())}, {"values", values}, {"agree", all}});
}

json prediction_json(const L2Prediction& p) {
    return {{"target", p.target},
            {"degree", p.degree ? json(*p.degree) : json("middle")},
            {"dimension", to_string(p.dimension)},
            {"source", p.source}};
}

void prediction_output(const L2Prediction& p, const std::string& label, Output& out) {
    out.results = prediction_json(p);
    out.text.push_back(p.source + " prediction for " + p.target + ", degree " +
                       (p.degree ? std::to_string(*p.degree) : std::string("middle")) + ":");
    out.text.push_back(label + " = " + to_string(p.dimension));
    out.header = {"target", "degree", "dimension", "source"};
    out.rows.push_back({p.target, p.degree ? std::to_string(*p.degree) : "middle", to_string(p.dimension), p.source});
    out.table_in_text = false;
}

} // namespace

Output betti(const RunConfig& c) {
    const Quiver quiver = load_quiver(c);
    require(c.w.has_value(), "--w is required");
    require(c.cap.has_value() || c.v.has_value(), "--v or --cap is required");
    const DimVector cap = c.cap ? *c.cap : *c.v;
    const auto table = betti_table(quiver, *c.w, GradingCap(cap), Exec::parallel,
                                   budget_or(c, kDefaultSeriesBudget));
    Output out;
    out.text.push_back("quiver varieties M(v, w), w = " + paren(*c.w) + ", " + quiver_summary(quiver));
    out.header = {"v", "dim", "poincare", "middle_betti", "chi_l2"};
    out.results["w"] = dims(*c.w);
    out.results["entries"] = json::array();
    for (const auto& [v, e] : table) {
        if (v.is_zero() || (!c.cap && v != *c.v))
            continue;
        json entry = {{"v", dims(v)}, {"dim", e.dim}, {"empty", e.empty()}};
        if (e.empty()) {
            out.rows.push_back({paren(v), std::to_string(e.dim), "empty", "-", "-"});
        } else {
            const std::string middle = to_string(e.poincare->betti(e.dim));
            json betti = json::object();
            for (const auto& [deg, b] : e.poincare->poly.terms())
                betti[std::to_string(deg)] = to_string(b);
            entry["poincare"] = canonical(e.poincare->poly);
            entry["betti"] = betti;
            entry["middle_betti"] = middle;
            entry["chi_l2"] = middle;
            out.rows.push_back({paren(v), std::to_string(e.dim), pretty(e.poincare->poly), middle, middle});
        }
        out.results["entries"].push_back(entry);
    }
    return out;
}

Output kac(const RunConfig& c) {
    const Quiver quiver = load_quiver(c);
    require(c.cap.has_value() || c.v.has_value(), "--v or --cap is required");
    const std::int64_t budget = budget_or(c, kDefaultSeriesBudget);
    Output out;
    out.header = {"v", "A", "m_v", "formal", "nonnegative"};
    out.results["polynomials"] = json::array();
    const auto add = [&](const KacPolynomial& A) {
        const auto m = weight_multiplicity(A);
        const auto pos = kac_positivity_report(A);
        out.results["polynomials"].push_back({{"v", dims(A.v)},
                                              {"A", canonical(A.as_laurent())},
                                              {"m_v", to_string(m.value)},
                                              {"formal", m.formal},
                                              {"nonnegative", pos.nonnegative}});
        out.rows.push_back({paren(A.v), pretty(A.as_laurent(), TermOrder::descending), to_string(m.value),
                            yes_no(m.formal), yes_no(pos.nonnegative)});
        return std::pair{m, pos};
    };
    if (c.cap) {
        out.text.push_back("Kac polynomials A(v, q) for 0 < v <= " + paren(*c.cap) + ", " + quiver_summary(quiver));
        for (const auto& A : kac_polynomials(quiver, GradingCap(*c.cap), Exec::parallel, budget))
            add(A);
        return out;
    }
    const KacPolynomial A = kac_polynomial(quiver, *c.v, Exec::parallel, budget);
    const auto [m, pos] = add(A);
    out.table_in_text = false;
    out.text.push_back("A = " + pretty(A.as_laurent(), TermOrder::descending));
    out.text.push_back("m_v = " + to_string(m.value) +
                       (m.formal ? "  (formal: the quiver has edge-loops, no Kac-Moody reading)" : ""));
    out.text.push_back(pos.summary);
    return out;
}

Output charvar(const RunConfig& c) {
    require(c.genus.has_value(), "--g is required");
    const int g = *c.genus;
    std::vector<std::string> show = c.show;
    if (show.empty()) {
        if (g >= 2)
            show = {"H", "P", "E", "pure", "chi"};
        else
            show = {"count"};
        if (!c.qs.empty() && g >= 2)
            show.push_back("check");
    }
    static const std::set<std::string> known = {"H", "P", "E", "pure", "chi", "check", "purity", "families", "count"};
    for (const auto& s : show)
        require(known.contains(s), "unknown --show item '" + s + "' (H,P,E,pure,chi,check,purity,families,count)");
    const std::vector<int> qs = c.qs.empty() ? std::vector<int>{3, 5, 7, 9} : c.qs;

    Output out;
    out.table_in_text = false;
    out.header = {"section", "key", "value"};
    out.results["genus"] = g;
    std::optional<MixedHodgePoly> h;
    const auto hodge = [&]() -> const MixedHodgePoly& {
        if (!h)
            h = mixed_hodge_pgl2(g);
        return *h;
    };
    for (const auto& s : show) {
        if (s == "H") {
            const auto& H = hodge().H;
            out.results["H"] = serialize(H);
            out.results["H_terms"] = H.size();
            out.text.push_back("H = " + pretty(H, TermOrder::descending));
            out.rows.push_back({"H", "poly", serialize(H)});
        } else if (s == "P") {
            const auto P = poincare_from_H(hodge());
            out.results["P"] = canonical(P);
            out.text.push_back("P = " + pretty(P));
            out.rows.push_back({"P", "poly", canonical(P)});
        } else if (s == "E") {
            const auto E = e_polynomial(hodge());
            out.results["E"] = canonical(E);
            out.text.push_back("E = " + pretty(E, TermOrder::descending));
            out.rows.push_back({"E", "poly", canonical(E)});
        } else if (s == "pure") {
            const auto pure = pure_part(hodge());
            out.results["pure"] = serialize(pure);
            out.text.push_back("pure part = " + pretty(pure));
            out.rows.push_back({"pure", "poly", serialize(pure)});
        } else if (s == "chi") {
            const BigInt chi = chi_l2_pgl2(g);
            out.results["chi_l2"] = to_string(chi);
            out.text.push_back("chi_L2 = " + to_string(chi));
            out.rows.push_back({"chi", "chi_l2", to_string(chi)});
        } else if (s == "check") {
            json rows = json::array();
            out.text.push_back("q  character-sum count  E(q)  agree");
            for (const auto& r : cross_check(g, qs, Exec::parallel)) {
                rows.push_back({{"q", r.q}, {"count", to_string(r.count)}, {"E", to_string(r.e_value)}, {"agree", r.agree}});
                out.text.push_back(std::to_string(r.q) + "  " + to_string(r.count) + "  " + to_string(r.e_value) + "  " +
                                   yes_no(r.agree));
                out.rows.push_back({"check", "q=" + std::to_string(r.q),
                                    to_string(r.count) + "/" + to_string(r.e_value) + "/" + yes_no(r.agree)});
                if (!r.agree)
                    out.alarm("InconsistentCounts", "g = " + std::to_string(g) + ", q = " + std::to_string(r.q) +
                                                        ": count " + to_string(r.count) + " but E(q) = " +
                                                        to_string(r.e_value));
            }
            out.results["check"] = rows;
        } else if (s == "count") {
            json rows = json::object();
            for (int q : qs) {
                const BigInt n = count_char_variety_pgl2(g, q);
                rows[std::to_string(q)] = to_string(n);
                out.text.push_back("#M_B(F_" + std::to_string(q) + ") = " + to_string(n));
                out.rows.push_back({"count", "q=" + std::to_string(q), to_string(n)});
            }
            out.results["count"] = rows;
        } else if (s == "families") {
            json all = json::object();
            for (int q : qs) {
                json fams = json::array();
                out.text.push_back("GL_2(F_" + std::to_string(q) + ") characters: family degree +1 -1");
                for (const auto& f : gl2_character_families(q)) {
                    fams.push_back({{"kind", to_string(f.kind)}, {"degree", to_string(f.degree)},
                                    {"plus", f.plus}, {"minus", f.minus}});
                    out.text.push_back("  " + to_string(f.kind) + " " + to_string(f.degree) + " " +
                                       std::to_string(f.plus) + " " + std::to_string(f.minus));
                    out.rows.push_back({"families", "q=" + std::to_string(q) + " " + to_string(f.kind),
                                        to_string(f.degree) + "/" + std::to_string(f.plus) + "/" + std::to_string(f.minus)});
                }
                all[std::to_string(q)] = fams;
            }
            out.results["families"] = all;
        } else if (s == "purity") {
            const auto r = purity_check(g, Exec::parallel);
            out.results["purity"] = {{"d_mu", r.d_mu},
                                     {"pure_side", canonical(r.pure_side)},
                                     {"kac_side", canonical(r.kac_side)},
                                     {"agree", r.agree}};
            out.text.push_back("purity: " + r.summary);
            out.rows.push_back({"purity", "pure_side", canonical(r.pure_side)});
            out.rows.push_back({"purity", "kac_side", canonical(r.kac_side)});
            out.rows.push_back({"purity", "agree", yes_no(r.agree)});
        }
    }
    return out;
}

Output predict(const RunConfig& c) {
    Output out;
    if (c.verb == "sen") {
        require(c.k && c.d, "predict sen needs --k and --d");
        prediction_output(sen_l2_dim(*c.k, *c.d), "dim L2 H^" + std::to_string(*c.d), out);
    } else if (c.verb == "segal-selby") {
        require(c.k.has_value(), "predict segal-selby needs --k");
        const long bound = segal_selby_bound(*c.k);
        out.results = {{"k", *c.k}, {"bound", std::to_string(bound)}, {"source", "Segal-Selby"}};
        out.text.push_back("lower bound on middle-degree L2 harmonic forms, charge " + std::to_string(*c.k) + ":");
        out.text.push_back("phi(k) = " + std::to_string(bound));
        out.header = {"k", "bound"};
        out.rows.push_back({std::to_string(*c.k), std::to_string(bound)});
        out.table_in_text = false;
    } else if (c.verb == "main") {
        require(c.genus.has_value() && !c.mu.empty(), "predict main needs --g and --mu");
        const ParabolicType mu{*c.genus, parse_punctures(c.mu)};
        prediction_output(conjecture_main(mu, Exec::parallel, budget_or(c, kDefaultSeriesBudget)), "chi_L2", out);
    } else if (c.verb == "vafa-witten") {
        const Quiver quiver = load_quiver(c);
        require(c.v && c.w, "predict vafa-witten needs --v and --w");
        prediction_output(vafa_witten(quiver, *c.v, *c.w, Exec::parallel, budget_or(c, kDefaultSeriesBudget)),
                          "chi_L2", out);
    } else {
        throw InvalidArgument("predict needs one of sen, segal-selby, main, vafa-witten");
    }
    return out;
}

Output oracle(const RunConfig& c) {
    Output out;
    out.results["instances"] = json::array();
    const std::int64_t budget = budget_or(c, kDefaultOracleBudget);
    const std::vector<std::string> fiber_header = {"instance", "p", "raw", "group_order", "quotient", "generic"};
    const std::vector<std::string> kac_header = {"instance", "p", "brute", "formula", "agree"};
    if (c.verb == "fiber") {
        const Quiver quiver = load_quiver(c);
        require(c.v && c.w, "oracle fiber needs --v and --w");
        out.header = fiber_header;
        fiber_instance(quiver, *c.v, *c.w, primes_or(c, {2, 3, 5, 7}), budget,
                       "v=" + paren(*c.v) + " w=" + paren(*c.w), out);
    } else if (c.verb == "kac") {
        const Quiver quiver = load_quiver(c);
        require(c.v.has_value(), "oracle kac needs --v");
        out.header = kac_header;
        kac_instance(quiver, *c.v, primes_or(c, {2, 3, 5}), budget, "v=" + paren(*c.v), out);
    } else if (c.verb == "manifest") {
        require(!c.manifest_path.empty(), "oracle manifest needs --manifest");
        const std::string path = resolve_data_path(c.manifest_path);
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open manifest '" + path + "'");
        const auto base = std::filesystem::path(path).parent_path();
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ss(line);
            std::string kind, file;
            if (!(ss >> kind))
                continue;
            if (!(ss >> file))
                throw ParseError("manifest line " + std::to_string(lineno) + ": missing quiver file");
            std::optional<DimVector> v, w;
            std::vector<int> primes;
            std::string field;
            while (ss >> field) {
                const auto eq = field.find('=');
                if (eq == std::string::npos)
                    throw ParseError("manifest line " + std::to_string(lineno) + ": expected key=value, got '" + field + "'");
                const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
                if (key == "v")
                    v = parse_dim_vector(value);
                else if (key == "w")
                    w = parse_dim_vector(value);
                else if (key == "p")
                    primes = parse_dim_vector(value).entries();
                else
                    throw ParseError("manifest line " + std::to_string(lineno) + ": unknown key '" + key + "'");
            }
            const Quiver quiver = read_quiver_file((base / file).string());
            if (!v)
                throw ParseError("manifest line " + std::to_string(lineno) + ": missing v=");
            const std::string label = file + " v=" + paren(*v) + (w ? " w=" + paren(*w) : "");
            if (kind == "fiber") {
                if (!w)
                    throw ParseError("manifest line " + std::to_string(lineno) + ": fiber needs w=");
                fiber_instance(quiver, *v, *w, primes.empty() ? std::vector<int>{2, 3, 5, 7} : primes, budget, label, out);
            } else if (kind == "kac") {
                kac_instance(quiver, *v, primes.empty() ? std::vector<int>{2, 3, 5} : primes, budget, label, out);
            } else {
                throw ParseError("manifest line " + std::to_string(lineno) + ": unknown kind '" + kind + "'");
            }
        }
        out.header = {"instance", "agree"};
        out.rows.clear();
        for (const auto& inst : out.results["instances"])
            out.rows.push_back({inst["label"].get<std::string>(), yes_no(inst["agree"].get<bool>())});
        out.table_in_text = false;
    } else {
        throw InvalidArgument("oracle needs one of fiber, kac, manifest");
    }
    return out;
}

Output crab(const RunConfig& c) {
    require(c.genus.has_value() && !c.mu.empty(), "crab needs --g and --mu");
    const CrabQuiver cq = crab_quiver(ParabolicType{*c.genus, parse_punctures(c.mu)});
    Output out;
    json edges = json::array();
    for (const auto& [t, h] : cq.quiver.edges())
        edges.push_back({t, h});
    out.results = {{"vertices", cq.quiver.vertex_count()}, {"edges", edges}, {"v", dims(cq.dims)}};
    std::istringstream lines(format_quiver(cq.quiver));
    for (std::string line; std::getline(lines, line);)
        out.text.push_back(line);
    out.text.push_back("v = " + paren(cq.dims));
    out.header = {"vertex", "dimension"};
    for (int i = 0; i < cq.dims.size(); ++i)
        out.rows.push_back({std::to_string(i), std::to_string(cq.dims[i])});
    out.table_in_text = false;
    return out;
}

} // namespace qh::cli
