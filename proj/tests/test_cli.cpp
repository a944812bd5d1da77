#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gontd/io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gontd");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& content = {}) {
    const auto dir = std::filesystem::temp_directory_path() / "gontd_cli_tests";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p;
}

const std::string kSeven = fixture_path("gon3_seven.json");
const std::string kCycle = fixture_path("cycle4.gr");

}  // namespace

TEST_CASE("treedec on the worked example") {
    const auto r = run({"treedec", "-i", kSeven, "-d", "a:3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("s td 14 4 7\n", 0) == 0);
    std::istringstream in(r.out);
    const auto file = io::read_td(in);
    const auto rep = validate_treedec(seven_vertex_example(), file.td);
    CHECK(rep);
    CHECK(rep.width == 3);

    const auto traced = run({"treedec", "-i", kSeven, "--trace"});
    CHECK(traced.code == kExitOk);
    CHECK(traced.out == r.out);
    CHECK(traced.err.find("fire abcefg: a+b+c -> a+c+d") != std::string::npos);
    CHECK(traced.err.find("position 0 - root") != std::string::npos);
}

TEST_CASE("divisor commands") {
    CHECK(run({"rank", "-i", kCycle, "-d", "1:1"}).out == "positive-rank: false\n");
    CHECK(run({"rank", "-i", kCycle, "-d", "1:1 3:1"}).out == "positive-rank: true\n");
    const auto g = seven_vertex_example();
    const auto reduced = q_reduce(g, divisor_of(g, "a+b+c"), *g.find("d"));
    CHECK(run({"reduce", "-i", kSeven, "-d", "b:1 c:1 a:1", "--q", "d"}).out ==
          io::format_divisor(g, reduced.divisor) + "\n");
    CHECK(run({"dhar", "-i", kSeven, "-d", "a:3", "--q", "b"}).out == "fireable: a\n");
    CHECK(run({"dhar", "-i", kSeven, "-d", "a:3", "--q", "a"}).out == "fireable:\n");
    const auto gon = run({"gonality", "-i", kSeven, "--max-degree", "3"});
    CHECK(gon.out == "dgon: 3\nwitness: a:3\n");
    CHECK(run({"gonality", "-i", kSeven, "--max-degree", "2"}).out == "dgon: >2\n");
    CHECK(run({"info", "-i", kSeven}).out.find("max-multiplicity: 2") != std::string::npos);
}

TEST_CASE("strategy output formats") {
    const auto json = run({"mss", "-i", kSeven});
    CHECK(json.code == kExitOk);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["nodes"].size() == 14);
    CHECK(run({"mss", "-i", kSeven, "-f", "dot"}).out.find("digraph") != std::string::npos);
    CHECK(run({"mss", "-i", kSeven, "-f", "pace"}).code == kExitMalformed);
    CHECK(run({"treedec", "-i", kSeven, "-f", "dot"}).out.find("--") != std::string::npos);
    CHECK(nlohmann::json::parse(run({"treedec", "-i", kSeven, "-f", "structured-text"}).out)["width"] == 3);
}

TEST_CASE("morphism-td from files and through a refinement") {
    const auto direct = run({"morphism-td", "-i", kCycle, "--tree", fixture_path("path3.gr"), "--morphism",
                             fixture_path("cycle4_fold.morph")});
    CHECK(direct.code == kExitOk);
    CHECK(direct.out.rfind("s td 7 3 4\n", 0) == 0);

    const auto refined = run({"morphism-td", "-i", kCycle, "--tree", fixture_path("path3.gr"), "--morphism",
                              fixture_path("cycle4_fold.morph"), "--original", fixture_path("banana2.gr"),
                              "--refinement", fixture_path("cycle4_over_banana2.ref")});
    CHECK(refined.code == kExitOk);
    std::istringstream in(refined.out);
    const auto file = io::read_td(in);
    CHECK(file.vertex_count == 2);
    CHECK(validate_treedec(banana_graph(2), file.td));

    CHECK(run({"morphism-td", "-i", kCycle, "--tree", fixture_path("path3.gr")}).code == kExitMalformed);
}

TEST_CASE("verify-td names the violated condition") {
    const auto good = scratch("c4.td", "s td 2 3 4\nb 1 1 2 4\nb 2 2 3 4\n1 2\n");
    CHECK(run({"verify-td", "-i", kCycle, "--td", good.string()}).out == "valid: width 2\n");

    const auto missing_edge = scratch("c4_bad.td", "s td 2 3 4\nb 1 1 2 4\nb 2 2 3 1\n1 2\n");
    const auto r = run({"verify-td", "-i", kCycle, "--td", missing_edge.string()});
    CHECK(r.code == kExitFailure);
    CHECK(r.err.find("condition 2") != std::string::npos);

    const auto split = scratch("c4_split.td", "s td 3 3 4\nb 1 1 2 4\nb 2 3 4\nb 3 2 3\n1 2\n2 3\n");
    const auto s = run({"verify-td", "-i", kCycle, "--td", split.string()});
    CHECK(s.code == kExitFailure);
    CHECK(s.err.find("condition 3 at vertex 2") != std::string::npos);

    const auto corrupt = scratch("c4_corrupt.td", "s td 2 3 4\nb 1 1 two 4\n");
    CHECK(run({"verify-td", "-i", kCycle, "--td", corrupt.string()}).code == kExitMalformed);
}

TEST_CASE("malformed input and usage errors exit with 2") {
    const auto bad_gr = scratch("bad.gr", "p tw 2 1\n1 1\n");
    const auto r = run({"info", "-i", bad_gr.string()});
    CHECK(r.code == kExitMalformed);
    CHECK(r.err.rfind("parse:", 0) == 0);
    CHECK(run({"rank", "-i", kSeven, "-d", "zz:1"}).code == kExitMalformed);
    CHECK(run({"reduce", "-i", kSeven, "-d", "a:1"}).code == kExitMalformed);  // no --q
    CHECK(run({"frobnicate"}).code == kExitMalformed);
    CHECK(run({}).code == kExitMalformed);
    CHECK(run({"treedec", "-i", kSeven, "-f", "yaml"}).code == kExitMalformed);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("domain errors exit with 1") {
    const auto r = run({"treedec", "-i", kCycle, "-d", "1:1"});
    CHECK(r.code == kExitFailure);
    CHECK(r.err.rfind("domain:", 0) == 0);
    CHECK(run({"rank", "-i", kCycle, "-d", "1:-1"}).code == kExitFailure);
}

TEST_CASE("output is deterministic and --out writes the same bytes") {
    const auto a = run({"random-graph", "--seed", "7", "-n", "9", "--extra-edges", "5", "--max-multiplicity", "3"});
    const auto b = run({"random-graph", "--seed", "7", "-n", "9", "--extra-edges", "5", "--max-multiplicity", "3"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    const auto gr = scratch("random.gr");
    CHECK(run({"random-graph", "--seed", "7", "-n", "9", "--extra-edges", "5", "--max-multiplicity", "3", "-o",
               gr.string()})
              .out.empty());
    std::ifstream in(gr);
    std::stringstream written;
    written << in.rdbuf();
    CHECK(written.str() == a.out);
    CHECK(run({"info", "-i", gr.string()}).out.find("vertices: 9") != std::string::npos);

    CHECK(run({"treedec", "-i", kSeven}).out == run({"treedec", "-i", kSeven}).out);
}
