#include <doctest.h>

#include <qh/charvar.hpp>
#include <qh/cli.hpp>
#include <qh/errors.hpp>
#include <qh/kacpoly.hpp>
#include <qh/quiver.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qh;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("quiver files") {
    const Quiver jordan = read_quiver_file(temp_file("qh_jordan.quiver", "vertices 1\nedge 0 0\n"));
    CHECK(jordan.vertex_count() == 1);
    CHECK(jordan.loop_count() == 1);
    const Quiver a2 = read_quiver_file(temp_file("qh_a2.quiver", "vertices 2\nedge 0 1\n"));
    CHECK(a2.vertex_count() == 2);
    CHECK(a2.edges().size() == 1);
    CHECK_FALSE(a2.has_loops());
    CHECK_THROWS_AS(read_quiver_file(temp_file("qh_bad.quiver", "vertices 1\nedge 0 1\n")), IndexOutOfRange);
    try {
        read_quiver_file(temp_file("qh_garbage.quiver", "vertices 1\n# fine\nbogus 3\n"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "line 3"));
    }
}

TEST_CASE("kac on the affine D4 star") {
    const auto r = call({"kac", "--quiver", "d4tilde.quiver", "--v", "2,1,1,1,1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "A = q + 4"));
    CHECK(contains(r.out, "m_v = 4"));
}

TEST_CASE("main prediction for four punctures of type (1,1)") {
    const auto r = call({"predict", "main", "--g", "0", "--mu", "1,1;1,1;1,1;1,1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "chi_L2 = 4"));
    CHECK(contains(r.out, "main conjecture"));
}

TEST_CASE("pure part for genus three") {
    const auto r = call({"charvar", "--g", "3", "--show", "pure"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1 + q^2 t^4 + q^4 t^8"));
}

TEST_CASE("domain errors exit 1") {
    auto r = call({"predict", "vafa-witten", "--quiver", "a1.quiver", "--v", "3", "--w", "1"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "error"));
    r = call({"kac", "--quiver", "a2.quiver", "--v", "3,3", "--budget", "2"});
    CHECK(r.code == 1);
    r = call({"charvar", "--g", "2", "--q", "4", "--show", "check"});
    CHECK(r.code == 1);
    r = call({"kac", "--quiver", "missing.quiver", "--v", "1"});
    CHECK(r.code == 1);
    r = call({"nonsense"});
    CHECK(r.code == 1);
    r = call({"kac", "--v", "1", "--threads", "0"});
    CHECK(r.code == 1);
}

TEST_CASE("correctness alarms exit 2") {
    // The level 1_v is not generic for v = 2 over F_2, so the fiber count
    // disagrees with the generating function and must be reported loudly.
    const auto r = call({"oracle", "fiber", "--quiver", "jordan.quiver", "--v", "2", "--w", "1", "--p", "2,3,5,7",
                         "--format", "json"});
    CHECK(r.code == 2);
    const json j = json::parse(r.out);
    CHECK_FALSE(j["alarms"].empty());
    CHECK(contains(r.err, "alarm"));
    const auto clean = call({"oracle", "fiber", "--quiver", "jordan.quiver", "--v", "2", "--w", "1", "--p", "3,5,7"});
    CHECK(clean.code == 0);
}

TEST_CASE("json schema") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"kac", "--quiver", "d4tilde.quiver", "--v", "2,1,1,1,1"},
             {"betti", "--quiver", "jordan.quiver", "--cap", "3", "--w", "1"},
             {"charvar", "--g", "2"},
             {"predict", "sen", "--k", "5", "--d", "8"},
             {"predict", "segal-selby", "--k", "7"},
             {"predict", "main", "--g", "1", "--mu", "1,1"},
             {"predict", "vafa-witten", "--quiver", "a1.quiver", "--v", "1", "--w", "2"},
             {"oracle", "kac", "--quiver", "a2.quiver", "--v", "1,1", "--p", "2,3"},
             {"crab", "--g", "1", "--mu", "2,1;1,1,1"}}) {
        auto with_json = args;
        with_json.insert(with_json.end(), {"--format", "json"});
        const auto r = call(with_json);
        CAPTURE(args[0]);
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.contains("command"));
        CHECK(j.contains("inputs"));
        CHECK(j.contains("results"));
        CHECK(j["alarms"].is_array());
        CHECK(j["alarms"].empty());
    }
}

TEST_CASE("property: json polynomials round-trip exactly") {
    const json kac = json::parse(call({"kac", "--quiver", "d4tilde.quiver", "--v", "2,1,1,1,1", "--format", "json"}).out);
    const auto a = kac_polynomial(parse_quiver("vertices 5\nedge 1 0\nedge 2 0\nedge 3 0\nedge 4 0\n"),
                                  parse_dim_vector("2,1,1,1,1"));
    CHECK(parse_bipoly(kac["results"]["polynomials"][0]["A"].get<std::string>()) == BiPoly::from_laurent(a.as_laurent()));

    for (int g : {2, 3, 4}) {
        const json cv = json::parse(call({"charvar", "--g", std::to_string(g), "--format", "json"}).out);
        const auto h = mixed_hodge_pgl2(g);
        const auto& res = cv["results"];
        CHECK(parse_bipoly(res["H"].get<std::string>()) == h.H);
        CHECK(parse_bipoly(res["P"].get<std::string>()) == BiPoly::from_laurent(poincare_from_H(h)));
        CHECK(parse_bipoly(res["E"].get<std::string>()) == BiPoly::from_laurent(e_polynomial(h)));
        CHECK(parse_bipoly(res["pure"].get<std::string>()) == pure_part(h));
    }

    const json betti = json::parse(call({"betti", "--quiver", "jordan.quiver", "--cap", "3", "--w", "1", "--format", "json"}).out);
    for (const auto& e : betti["results"]["entries"]) {
        if (e["empty"].get<bool>())
            continue;
        const BiPoly p = parse_bipoly(e["poincare"].get<std::string>());
        for (const auto& [deg, b] : e["betti"].items())
            CHECK(p.coeff(0, std::stoi(deg)) == BigRat(b.get<std::string>()));
    }
}

TEST_CASE("property: output is identical across thread counts") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"kac", "--quiver", "a2.quiver", "--cap", "3,3"},
             {"betti", "--quiver", "jordan.quiver", "--cap", "4", "--w", "2"},
             {"charvar", "--g", "3", "--q", "3,5,7,9"},
             {"predict", "main", "--g", "0", "--mu", "1,1;1,1;1,1;1,1"},
             {"oracle", "fiber", "--quiver", "a1.quiver", "--v", "1", "--w", "2", "--p", "3,5"},
             {"oracle", "kac", "--quiver", "jordan.quiver", "--v", "2", "--p", "2,3"}}) {
        for (const char* format : {"text", "json", "csv"}) {
            auto one = args;
            one.insert(one.end(), {"--format", format, "--threads", "1"});
            auto two = args;
            two.insert(two.end(), {"--format", format, "--threads", "2"});
            const auto a = call(one);
            const auto b = call(two);
            CAPTURE(args[0]);
            CAPTURE(format);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
            CHECK(a.out == call(one).out);
        }
    }
}

TEST_CASE("help names each computation") {
    const auto top = call({"--help"});
    CHECK(top.code == 0);
    for (const char* cmd : {"betti", "kac", "charvar", "predict", "oracle", "crab"})
        CHECK(contains(top.out, cmd));
    CHECK(contains(call({"betti", "--help"}).out, "Kac denominator"));
    CHECK(contains(call({"kac", "--help"}).out, "Log"));
    CHECK(contains(call({"charvar", "--help"}).out, "character-sum"));
    CHECK(contains(call({"predict", "sen", "--help"}).out, "phi(k)"));
    CHECK(contains(call({"predict", "vafa-witten", "--help"}).out, "Middle Betti"));
    CHECK(contains(call({"oracle", "fiber", "--help"}).out, "moment-map fiber"));
    CHECK(contains(call({"oracle", "kac", "--help"}).out, "indecomposable"));
}

TEST_CASE("crab command") {
    const auto r = call({"crab", "--g", "0", "--mu", "1,1;1,1;1,1;1,1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "v = (2,1,1,1,1)"));
    CHECK(call({"crab", "--g", "0", "--mu", "2,1;1,1"}).code == 1);
}
