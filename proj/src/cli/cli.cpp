#include "commands.hpp"

#include <qh/errors.hpp>
#include <qh/parallel.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

namespace qh {

namespace {

using cli::json;
using cli::Output;

std::string command_name(const RunConfig& c) {
    return c.verb.empty() ? c.command : c.command + " " + c.verb;
}

json inputs_json(const RunConfig& c) {
    json in = json::object();
    if (!c.quiver_path.empty())
        in["quiver"] = c.quiver_path;
    if (!c.manifest_path.empty())
        in["manifest"] = c.manifest_path;
    if (c.v)
        in["v"] = c.v->entries();
    if (c.w)
        in["w"] = c.w->entries();
    if (c.cap)
        in["cap"] = c.cap->entries();
    if (c.genus)
        in["g"] = *c.genus;
    if (c.k)
        in["k"] = *c.k;
    if (c.d)
        in["d"] = *c.d;
    if (!c.mu.empty())
        in["mu"] = c.mu;
    if (!c.qs.empty())
        in["q"] = c.qs;
    if (!c.show.empty())
        in["show"] = c.show;
    if (c.budget > 0)
        in["budget"] = c.budget;
    return in;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char ch : s)
        quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    const auto measure = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    measure(header);
    for (const auto& row : rows)
        measure(row);
    const auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
    };
    emit(header);
    for (const auto& row : rows)
        emit(row);
}

void emit(const RunConfig& c, const Output& o, std::ostream& out) {
    switch (c.format) {
    case OutputFormat::json:
        out << json{{"command", command_name(c)}, {"inputs", inputs_json(c)}, {"results", o.results}, {"alarms", o.alarms}}
                   .dump(2)
            << '\n';
        break;
    case OutputFormat::csv:
        if (!o.header.empty())
            write_csv_row(out, o.header);
        for (const auto& row : o.rows)
            write_csv_row(out, row);
        break;
    case OutputFormat::text:
        for (const auto& line : o.text)
            out << line << '\n';
        if (o.table_in_text && !o.rows.empty())
            write_table(out, o.header, o.rows);
        break;
    }
}

Output dispatch(const RunConfig& c) {
    if (c.command == "betti")
        return cli::betti(c);
    if (c.command == "kac")
        return cli::kac(c);
    if (c.command == "charvar")
        return cli::charvar(c);
    if (c.command == "predict")
        return cli::predict(c);
    if (c.command == "oracle")
        return cli::oracle(c);
    if (c.command == "crab")
        return cli::crab(c);
    throw InvalidArgument("unknown command '" + c.command + "'");
}

std::vector<int> parse_int_list(const std::string& csv) {
    return csv.empty() ? std::vector<int>{} : parse_dim_vector(csv).entries();
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!item.empty())
                out.push_back(item);
            item.clear();
        } else if (ch != ' ') {
            item += ch;
        }
    }
    return out;
}

} // namespace

std::string resolve_data_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (path.empty() || fs::exists(path))
        return path;
#ifdef QH_DATA_DIR
    const fs::path bundled = fs::path(QH_DATA_DIR) / path;
    if (fs::exists(bundled))
        return bundled.string();
#endif
    return path;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.threads > 0)
        set_threads(config.threads);
    try {
        const Output o = dispatch(config);
        emit(config, o, out);
        for (const auto& a : o.alarms)
            err << "alarm " << a["kind"].get<std::string>() << ": " << a["message"].get<std::string>() << '\n';
        return o.alarms.empty() ? 0 : 2;
    } catch (const CorrectnessAlarm& a) {
        if (config.format == OutputFormat::json)
            out << json{{"command", command_name(config)},
                        {"inputs", inputs_json(config)},
                        {"results", nullptr},
                        {"alarms", json::array({{{"kind", a.kind()}, {"message", a.what()}}})}}
                       .dump(2)
                << '\n';
        err << "alarm " << a.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string v, w, cap, qs, show, format = "text";

    CLI::App app{"Exact Betti numbers of Nakajima quiver varieties, Kac polynomials, rank-2 twisted "
                 "character varieties and their L2 cohomology predictions, with finite-field oracles.",
                 "qh"};
    app.require_subcommand(1);

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget", config.budget, "Enumeration budget")->check(CLI::PositiveNumber);
    };
    const auto quiver = [&](CLI::App* sub) {
        sub->add_option("--quiver", config.quiver_path, "Quiver file ('vertices N' then 'edge I J' lines)");
    };
    const auto dimv = [&](CLI::App* sub, const char* name, std::string& target, const char* help) {
        sub->add_option(name, target, help);
    };

    auto* betti = app.add_subcommand(
        "betti", "Poincare polynomials of M(v, w): coefficients of the ratio of the framed and unframed "
                 "Kac denominator series, one row per v up to the cap, with middle Betti number and chi_L2");
    quiver(betti);
    dimv(betti, "--v", v, "Dimension vector, e.g. 2,1");
    dimv(betti, "--w", w, "Framing vector");
    dimv(betti, "--cap", cap, "Tabulate every v up to this vector");
    common(betti);

    auto* kac = app.add_subcommand(
        "kac", "Kac polynomial A(v, q) = (q - 1) [T^v] Log of the denominator series, and the weight "
               "multiplicity m_v = A(v, 0)");
    quiver(kac);
    dimv(kac, "--v", v, "Dimension vector");
    dimv(kac, "--cap", cap, "Tabulate every v up to this vector");
    common(kac);

    auto* charvar = app.add_subcommand(
        "charvar", "Twisted PGL_2 character variety of genus g: mixed Hodge polynomial H, Poincare polynomial, "
                   "E-polynomial, pure part, chi_L2, GL_2(F_q) character-sum counts and the purity comparison");
    charvar->add_option("--g", config.genus, "Genus")->required();
    charvar->add_option("--q", qs, "Odd prime powers for counts, e.g. 3,5,7,9");
    charvar->add_option("--show", show, "Comma list from H,P,E,pure,chi,check,purity,families,count");
    common(charvar);

    auto* predict = app.add_subcommand("predict", "Dimensions of L2 harmonic forms predicted by the conjectures");
    predict->require_subcommand(1);
    auto* sen = predict->add_subcommand(
        "sen", "Sen: phi(k) harmonic forms in the middle degree 2k - 2 of the reduced charge-k monopole space, "
               "none elsewhere");
    sen->add_option("--k", config.k, "Monopole charge")->required();
    sen->add_option("--d", config.d, "Form degree")->required();
    common(sen);
    auto* selby = predict->add_subcommand(
        "segal-selby", "Topological lower bound phi(k) for middle-degree L2 harmonic forms on the charge-k space");
    selby->add_option("--k", config.k, "Monopole charge")->required();
    common(selby);
    auto* main_verb = predict->add_subcommand(
        "main", "chi_L2 of the parabolic character variety: 0 for g > 1, 1 for g = 1, and m_v = A(v, 0) "
                "of the crab quiver for g = 0");
    main_verb->add_option("--g", config.genus, "Genus")->required();
    main_verb->add_option("--mu", config.mu, "Parabolic type, e.g. \"1,1;1,1;1,1;1,1\"")->required();
    common(main_verb);
    auto* vw = predict->add_subcommand(
        "vafa-witten", "Middle Betti number of M(v, w), the predicted number of middle-degree L2 harmonic forms");
    quiver(vw);
    dimv(vw, "--v", v, "Dimension vector");
    dimv(vw, "--w", w, "Framing vector");
    common(vw);

    auto* oracle = app.add_subcommand("oracle", "Brute-force point counts over prime fields");
    oracle->require_subcommand(1);
    auto* fiber = oracle->add_subcommand(
        "fiber", "Counts the moment-map fiber at level 1_v over F_p, divides by |GL_v(F_p)| and interpolates "
                 "the Betti numbers, compared with the generating function");
    quiver(fiber);
    dimv(fiber, "--v", v, "Dimension vector");
    dimv(fiber, "--w", w, "Framing vector");
    fiber->add_option("--q,--p", qs, "Primes, default 2,3,5,7");
    common(fiber);
    auto* okac = oracle->add_subcommand(
        "kac", "Counts absolutely indecomposable representations over F_p by their endomorphism algebras, "
               "compared with A(v, p)");
    quiver(okac);
    dimv(okac, "--v", v, "Dimension vector");
    okac->add_option("--q,--p", qs, "Primes, default 2,3,5");
    common(okac);
    auto* manifest = oracle->add_subcommand("manifest", "Runs every fiber and kac instance listed in a manifest file");
    manifest->add_option("--manifest", config.manifest_path, "Manifest file")->required();
    common(manifest);

    auto* crab = app.add_subcommand(
        "crab", "Crab-shaped quiver of a parabolic type: g loops on the centre, one leg per puncture");
    crab->add_option("--g", config.genus, "Genus")->required();
    crab->add_option("--mu", config.mu, "Parabolic type, e.g. \"2,1;1,1,1\"")->required();
    common(crab);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    const CLI::App* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    if (!sub->get_subcommands().empty())
        config.verb = sub->get_subcommands().front()->get_name();
    config.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::text;
    try {
        if (!v.empty())
            config.v = parse_dim_vector(v);
        if (!w.empty())
            config.w = parse_dim_vector(w);
        if (!cap.empty())
            config.cap = parse_dim_vector(cap);
        config.qs = parse_int_list(qs);
        config.show = split_list(show);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return run(config, out, err);
}

} // namespace qh
