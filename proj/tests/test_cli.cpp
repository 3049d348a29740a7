#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mmcycle/cli.hpp"

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = mmc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (l == line) return true;
    return false;
}

const std::string kTriangle = "bigraph 3 3\ne 0 1 2 o i 1\ne 1 2 3 o i 2\ne 2 3 1 o i 3\n";
const std::string kAcyclic = "bigraph 3 2\ne 0 1 2 o i 1\ne 1 1 3 o i 1\n";
const std::string kSkew =
    "skewgraph 4 4\nmates 3 4 1 2\n"
    "a 0 1 1 2 1\na 1 0 4 3 1\na 2 3 2 1 2\na 3 2 3 4 2\n";

} // namespace

TEST_CASE("solve reports the optimum with exit code 0") {
    auto file = write_temp("cli_triangle.txt", kTriangle);
    auto r = run({"solve", file});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "status optimal"));
    CHECK(has_line(r.out, "mean 2/1"));
    CHECK(has_line(r.out, "mean-decimal 2.000000"));
    CHECK(has_line(r.out, "length 3"));
    CHECK(has_line(r.out, "cycle 1 e0 2 e1 3 e2 1"));
    CHECK(r.err.empty());
}

TEST_CASE("solve --trace adds iteration lines") {
    auto file = write_temp("cli_triangle.txt", kTriangle);
    auto r = run({"solve", "--trace", file});
    CHECK(r.code == 0);
    CHECK(r.out.find("iter 1 a ") != std::string::npos);
}

TEST_CASE("acyclic inputs exit with code 1") {
    auto file = write_temp("cli_acyclic.txt", kAcyclic);
    auto r = run({"solve", file});
    CHECK(r.code == 1);
    CHECK(has_line(r.out, "status no-cycle"));
}

TEST_CASE("malformed inputs exit with code 2") {
    auto file = write_temp("cli_bad.txt", "bigraph 2 1\ne 0 1 1 o i 5\n");
    CHECK(run({"solve", file}).code == 2);
    CHECK(run({"validate", file}).code == 2);
    CHECK(run({"solve", "/nonexistent/input.txt"}).code == 2);
    CHECK(run({"frobnicate", file}).code == 2);
    CHECK(run({"solve", "--node-simple", "--skew", file}).code == 2);
}

TEST_CASE("validate accepts palatable files") {
    auto file = write_temp("cli_ok.txt", kTriangle);
    auto r = run({"validate", file});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "ok"));
}

TEST_CASE("solve --skew prints an arc cycle") {
    auto file = write_temp("cli_skew.txt", kSkew);
    auto r = run({"solve", "--skew", file});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "mean 3/2"));
    CHECK(r.out.find(" a") != std::string::npos);
}

TEST_CASE("solve --skew rejects asymmetric weights, convert only warns") {
    std::string asym =
        "skewgraph 4 2\nmates 3 4 1 2\n"
        "a 0 1 1 2 1\na 1 0 4 3 7\n";
    auto file = write_temp("cli_skew_asym.txt", asym);
    auto r = run({"solve", "--skew", file});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    auto c = run({"convert", file, "--from", "skew"});
    CHECK(c.code == 0);
    CHECK(c.err.find("warning") != std::string::npos);
    CHECK(c.out.find("bigraph 2 1") != std::string::npos);
}

TEST_CASE("convert produces parseable bigraph output") {
    auto file = write_temp("cli_und.txt", "bigraph 3 3\ne 0 1 2 o o 1\ne 1 2 3 o o 1\ne 2 3 1 o o 4\n");
    auto r = run({"convert", file, "--from", "undirected"});
    REQUIRE(r.code == 0);
    mmc::BidirectedGraph g = mmc::parse_bigraph(r.out);
    CHECK(g.node_count == 3);
    CHECK(g.m() == 6); // three edges plus one loop per node
    auto d = run({"convert", file, "--from", "directed"});
    CHECK(d.code == 2); // doubly-leaving edges are not arcs
}

TEST_CASE("decompose splits a balanced set") {
    auto file = write_temp("cli_tri2.txt", kTriangle);
    auto r = run({"decompose", file, "0", "1", "2"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "cycle 1 e0 2 e1 3 e2 1"));
    auto bad = run({"decompose", file, "0"});
    CHECK(bad.code == 2);
    auto oob = run({"decompose", file, "7"});
    CHECK(oob.code == 2);
}

TEST_CASE("oracle subcommand matches solve") {
    auto file = write_temp("cli_tri3.txt", kTriangle);
    for (const char* which : {"brute", "karp"}) {
        auto r = run({"oracle", which, file});
        CHECK(r.code == 0);
        CHECK(has_line(r.out, "mean 2/1"));
        CHECK(has_line(r.out, "cycle 1 e0 2 e1 3 e2 1"));
    }
}

TEST_CASE("oracle brute honors its budget with exit code 4") {
    std::ostringstream big;
    big << "bigraph 6 30\n";
    int id = 0;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 6; ++v) {
            big << "e " << id++ << " " << u << " " << v << " o o 1\n";
            big << "e " << id++ << " " << u << " " << v << " i i 1\n";
        }
    auto file = write_temp("cli_big.txt", big.str());
    auto r = run({"oracle", "brute", file, "--max-edges", "3"});
    CHECK(r.code == 4);
}

TEST_CASE("node-simple solve reports the doubled mean on the original graph") {
    auto file = write_temp("cli_tri4.txt", kTriangle);
    auto r = run({"solve", "--node-simple", file});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "mean 2/1"));
    CHECK(has_line(r.out, "length 3"));
}
