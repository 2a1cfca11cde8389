#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "meshforge/ade.hpp"
#include "meshforge/cli.hpp"
#include "meshforge/quotient.hpp"
#include "meshforge/quiver.hpp"
#include "meshforge/verify.hpp"

using namespace meshforge;

TEST_SUITE_BEGIN("cli");

namespace {

int run(const std::vector<std::string>& argv, std::string& out) {
    std::string err;
    return run_command(argv, out, err);
}

}  // namespace

TEST_CASE("gen emits a parseable quiver in each format") {
    std::string out;
    CHECK(run({"gen", "--family", "A", "--index", "5", "--dim", "3", "--format", "json"}, out) == 0);
    TranslationQuiver tq = parse_quiver(out);
    CHECK(tq.quiver.vertices.size() == 4);  // odd A_5

    std::string tikz;
    CHECK(run({"gen", "--family", "A", "--index", "5", "--dim", "3", "--format", "tikz"}, tikz) == 0);
    CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
    // 4 nodes for the odd A_5 quiver
    size_t nodes = 0, pos = 0;
    while ((pos = tikz.find("\\node", pos)) != std::string::npos) ++nodes, ++pos;
    CHECK(nodes == 4);

    std::string dot;
    CHECK(run({"gen", "--family", "A", "--index", "2", "--dim", "2", "--format", "dot"}, dot) == 0);
    CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    std::string out;
    CHECK(run({"gen", "--family", "Z", "--index", "1", "--dim", "0"}, out) == 2);
    CHECK(run({"gen", "--family", "A", "--index", "0", "--dim", "0"}, out) == 2);
    CHECK(run({"frobnicate"}, out) == 2);
    CHECK(run({"gen", "--format", "bogus"}, out) == 2);
}

TEST_CASE("dg reports h0 dims") {
    std::string out;
    CHECK(run({"dg", "--family", "A", "--index", "2", "--dim", "2", "--h0"}, out) == 0);
    CHECK(out.find("\"dim\": 4") != std::string::npos);
    CHECK(out.find("\"d_squared\": true") != std::string::npos);
}

TEST_CASE("ext and cy run on a fixture file") {
    std::string fixture = std::string(MESHFORGE_SOURCE_DIR) + "/fixtures/conifold.json";
    std::string out;
    CHECK(run({"ext", "--in", fixture}, out) == 0);
    CHECK(out.find("\"pi\"") != std::string::npos);
    std::string cy;
    CHECK(run({"cy", "--in", fixture}, cy) == 0);
    CHECK(cy.find("\"duality\": true") != std::string::npos);
    CHECK(cy.find("4/2") != std::string::npos);
}

TEST_CASE("determinism: identical reports modulo timings") {
    SuiteConfig cfg;
    cfg.families = "A";
    cfg.a_max = 3;
    cfg.L_max = 12;
    SuiteReport r1 = verify_suite(cfg);
    SuiteReport r2 = verify_suite(cfg);
    CHECK(r1.to_json(false) == r2.to_json(false));
    CHECK(r1.all_pass());
}

TEST_CASE("restricted config counts E-family generator checks") {
    SuiteConfig cfg;
    cfg.families = "E";
    cfg.L_max = 12;
    SuiteReport rep = verify_suite(cfg);
    int gen_checks = 0;
    for (const auto& c : rep.checks)
        if (c.check.rfind("1.generators/", 0) == 0) ++gen_checks;
    CHECK(gen_checks == 6);  // E_6/7/8 x 2 parities
}

TEST_CASE("under-truncated config reports failures with exit 1") {
    std::string dir = "/tmp/meshforge_cli_test";
    std::filesystem::remove_all(dir);
    std::string cfg_path = dir + "/cfg";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(cfg_path);
        f << "families=A\na_max=6\nL_max=2\n";
    }
    std::string out;
    int code = run({"verify", "--config", cfg_path, "--out", dir}, out);
    CHECK(code == 1);
    std::ifstream rep(dir + "/report.json");
    std::string text((std::istreambuf_iterator<char>(rep)), std::istreambuf_iterator<char>());
    CHECK(text.find("not stabilized") != std::string::npos);
}

TEST_SUITE_END();

TEST_CASE("parallel suite runs match the sequential report") {
    SuiteConfig seq;
    seq.families = "AE";
    seq.a_max = 4;
    seq.L_max = 12;
    SuiteConfig par = seq;
    par.parallelism = 4;
    CHECK(verify_suite(seq).to_json(false) == verify_suite(par).to_json(false));
}

TEST_CASE("word budget surfaces as OutOfMemoryBudget") {
    TranslationQuiver tq = ade_translation_quiver('A', 4, 2);
    auto q = std::make_shared<GradedQuiver>(tq.quiver);
    RelationSet rels;
    for (const auto& v : tq.quiver.vertices) {
        TruncatedElement m = mesh_relation(tq, v.id, 2);
        TruncatedElement over(q, 2);
        for (const auto& [w, c] : m.terms()) over.add_term(w, c);
        rels.relations.push_back({"m" + v.id, over});
    }
    CHECK_THROWS_AS(quotient_algebra(q, rels, 12, 2, 10), OutOfMemoryBudget);
}
