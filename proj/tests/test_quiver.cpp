#include <doctest.h>

#include <fstream>
#include <random>
#include <set>

#include "meshforge/ade.hpp"
#include "meshforge/quiver.hpp"

using namespace meshforge;

TEST_SUITE_BEGIN("quiver-core");

namespace {

const char* kTwoVertexJson = R"({
  "vertices": [{"id": "1", "projective": true}, {"id": "2", "projective": false}],
  "arrows": [
    {"id": "p", "label": "p", "src": "1", "tgt": "2", "degree": 0},
    {"id": "i", "label": "i", "src": "2", "tgt": "1", "degree": 0}
  ],
  "tau": {"2": "2"},
  "sigma": {"i": "p"}
})";

int solid_count(const TranslationQuiver& tq) {
    int s = 0;
    for (const auto& a : tq.quiver.arrows)
        if (a.degree == 0) ++s;
    return s;
}

// Random relabeling that keeps the structure; used for canonical-form tests.
TranslationQuiver shuffled(const TranslationQuiver& tq, std::mt19937& rng) {
    std::vector<int> vperm(tq.quiver.vertices.size()), aperm(tq.quiver.arrows.size());
    for (size_t i = 0; i < vperm.size(); ++i) vperm[i] = static_cast<int>(i);
    for (size_t i = 0; i < aperm.size(); ++i) aperm[i] = static_cast<int>(i);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(aperm.begin(), aperm.end(), rng);
    std::map<std::string, std::string> vname, aname;
    TranslationQuiver out;
    for (size_t i = 0; i < vperm.size(); ++i) {
        const auto& v = tq.quiver.vertices[vperm[i]];
        vname[v.id] = "w" + std::to_string(i);
        out.quiver.vertices.push_back({vname[v.id], v.projective});
    }
    for (size_t i = 0; i < aperm.size(); ++i) aname[tq.quiver.arrows[aperm[i]].id] = "f" + std::to_string(i);
    for (size_t i = 0; i < aperm.size(); ++i) {
        const auto& a = tq.quiver.arrows[aperm[i]];
        out.quiver.arrows.push_back({aname[a.id], aname[a.id], vname[a.src], vname[a.tgt], a.degree});
    }
    for (const auto& [f, t] : tq.tau) out.tau[vname[f]] = vname[t];
    for (const auto& [f, t] : tq.sigma) out.sigma[aname[f]] = aname[t];
    for (const auto& [f, c] : tq.mesh_coeff) out.mesh_coeff[aname[f]] = c;
    return out;
}

}  // namespace

TEST_CASE("parse_quiver reads the two-vertex fixture") {
    TranslationQuiver tq = parse_quiver(kTwoVertexJson);
    CHECK(tq.quiver.vertices.size() == 2);
    CHECK(tq.quiver.arrows.size() == 2);
    CHECK(tq.tau.at("2") == "2");
    CHECK(tq.sigma.at("i") == "p");
    CHECK(tq == full_fixture_a1_dim0());
}

TEST_CASE("parse_quiver edge and error cases") {
    TranslationQuiver empty = parse_quiver(R"({"vertices": [], "arrows": []})");
    CHECK(empty.quiver.vertices.empty());
    CHECK(empty.quiver.arrows.empty());

    CHECK_THROWS_AS(parse_quiver("{not json"), SyntaxError);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": [{"id":"1"}],
        "arrows": [{"id":"a","src":"9","tgt":"1"}]})"), UndeclaredVertex);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": [{"id":"1"},{"id":"1"}], "arrows": []})"),
                    DuplicateId);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": [{"id":"1"}],
        "arrows": [{"id":"a","src":"1","tgt":"1"},{"id":"a","src":"1","tgt":"1"}]})"),
                    DuplicateId);
}

TEST_CASE("export round trip and formats") {
    for (const auto& tq : {full_fixture_a1_dim0(), full_fixture_conifold(),
                           ade_translation_quiver('A', 3, 1), ade_translation_quiver('D', 5, 1)}) {
        CHECK(parse_quiver(export_translation_quiver(tq, "json")) == tq);
    }
    TranslationQuiver empty;
    CHECK(parse_quiver(export_translation_quiver(empty, "json")) == empty);
    CHECK(export_quiver(empty.quiver, "dot").find("digraph") != std::string::npos);
    CHECK(export_quiver(empty.quiver, "tikz").find("tikzpicture") != std::string::npos);
    CHECK_THROWS_AS(export_quiver(empty.quiver, "svg"), UnsupportedFormat);
}

TEST_CASE("dot export marks dashed arrows") {
    GradedQuiver q;
    q.vertices = {{"1", false}};
    q.arrows = {{"r", "r", "1", "1", -1}, {"x", "x", "1", "1", 0}};
    std::string dot = export_quiver(q, "dot");
    CHECK(dot.find("style=dashed") != std::string::npos);
    // only the dashed arrow is dashed
    CHECK(dot.find("style=dashed") == dot.rfind("style=dashed"));
}

TEST_CASE("validator accepts every generator") {
    for (char fam : {'A', 'D', 'E'}) {
        int lo = fam == 'A' ? 1 : (fam == 'D' ? 4 : 6);
        int hi = fam == 'E' ? 8 : 12;
        for (int n = lo; n <= hi; ++n)
            for (int dim : {1, 2}) {
                TranslationQuiver tq = ade_translation_quiver(fam, n, dim);
                ValidationReport rep = validate_translation_quiver(tq);
                CAPTURE(fam);
                CAPTURE(n);
                CAPTURE(dim);
                CHECK(rep.ok);
                CHECK(rep.violations.empty());
            }
    }
}

TEST_CASE("validator catches a redirected mesh pairing") {
    TranslationQuiver tq = full_fixture_conifold();
    tq.sigma["a1"] = "b1";  // b1: * -> +, but the mesh target of a1 is -
    ValidationReport rep = validate_translation_quiver(tq);
    CHECK(!rep.ok);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.rule == "mesh-target" && v.subject == "a1") found = true;
    CHECK(found);
}

TEST_CASE("validator catches tau injectivity violations") {
    TranslationQuiver tq;
    tq.quiver.vertices = {{"1", false}, {"2", false}, {"3", false}};
    tq.tau = {{"1", "3"}, {"2", "3"}, {"3", "1"}};
    ValidationReport rep = validate_translation_quiver(tq);
    CHECK(!rep.ok);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.rule == "tau-injective") found = true;
    CHECK(found);
}

TEST_CASE("mesh-target law on every generator") {
    for (char fam : {'A', 'D', 'E'}) {
        int lo = fam == 'A' ? 1 : (fam == 'D' ? 4 : 6);
        int hi = fam == 'E' ? 8 : 12;
        for (int n = lo; n <= hi; ++n)
            for (int dim : {1, 2}) {
                TranslationQuiver tq = ade_translation_quiver(fam, n, dim);
                for (const auto& [aid, bid] : tq.sigma) {
                    const Arrow& a = tq.quiver.arrows[tq.quiver.arrow_index(aid)];
                    const Arrow& b = tq.quiver.arrows[tq.quiver.arrow_index(bid)];
                    CHECK(b.src == a.tgt);
                    CHECK(b.tgt == *tq.tau_inv(a.src));
                }
            }
    }
}

TEST_CASE("family count table") {
    // (vertices, solid arrows) per family and parity
    for (int n = 1; n <= 12; ++n) {
        CHECK(ade_expected_counts('A', n, 2) == std::make_pair(n, 2 * (n - 1)));
        auto tq = ade_translation_quiver('A', n, 2);
        CHECK(static_cast<int>(tq.quiver.vertices.size()) == n);
        CHECK(solid_count(tq) == 2 * (n - 1));
    }
    CHECK(ade_translation_quiver('A', 1, 1).quiver.vertices.size() == 2);
    CHECK(solid_count(ade_translation_quiver('A', 1, 1)) == 0);
    for (int m = 1; m <= 6; ++m) {  // odd A_{2m}
        auto tq = ade_translation_quiver('A', 2 * m, 1);
        CHECK(static_cast<int>(tq.quiver.vertices.size()) == m);
        CHECK(solid_count(tq) == 2 * (m - 1) + 1);
    }
    for (int m = 2; m <= 6; ++m) {  // odd A_{2m-1}
        auto tq = ade_translation_quiver('A', 2 * m - 1, 1);
        CHECK(static_cast<int>(tq.quiver.vertices.size()) == m + 1);
        CHECK(solid_count(tq) == 2 * m);
    }
    for (int m = 2; m <= 6; ++m) {  // odd D_{2m+1} and D_{2m}
        if (2 * m + 1 <= 12) {
            auto tq = ade_translation_quiver('D', 2 * m + 1, 1);
            CHECK(static_cast<int>(tq.quiver.vertices.size()) == 4 * m - 1);
        }
        auto tq2 = ade_translation_quiver('D', 2 * m, 1);
        CHECK(static_cast<int>(tq2.quiver.vertices.size()) == 4 * m);
    }
    CHECK(ade_translation_quiver('E', 6, 1).quiver.vertices.size() == 6);
    CHECK(ade_translation_quiver('E', 7, 1).quiver.vertices.size() == 14);
    CHECK(ade_translation_quiver('E', 8, 1).quiver.vertices.size() == 16);
    for (int n : {6, 7, 8}) {
        auto tq = ade_translation_quiver('E', n, 2);
        CHECK(static_cast<int>(tq.quiver.vertices.size()) == n);
        CHECK(solid_count(tq) == 2 * (n - 1));
    }
}

TEST_CASE("odd E_8 example data") {
    TranslationQuiver tq = ade_translation_quiver('E', 8, 3);
    CHECK(tq.quiver.vertices.size() == 16);
    // tau is a product of 8 transpositions
    std::set<std::set<std::string>> orbits;
    for (const auto& [f, t] : tq.tau) {
        CHECK(f != t);
        CHECK(tq.tau.at(t) == f);
        orbits.insert({f, t});
    }
    CHECK(orbits.size() == 8);
}

TEST_CASE("odd D_5 example data") {
    TranslationQuiver tq = ade_translation_quiver('D', 5, 1);
    CHECK(tq.quiver.vertices.size() == 7);
    int fixed = 0, swapped = 0;
    for (const auto& [f, t] : tq.tau)
        (f == t ? fixed : swapped)++;
    CHECK(fixed == 1);
    CHECK(swapped == 6);
}

TEST_CASE("invalid Dynkin data rejected") {
    CHECK_THROWS_AS(ade_translation_quiver('A', 0, 1), InvalidDynkinIndex);
    CHECK_THROWS_AS(ade_translation_quiver('D', 3, 0), InvalidDynkinIndex);
    CHECK_THROWS_AS(ade_translation_quiver('E', 9, 2), InvalidDynkinIndex);
    CHECK_THROWS_AS(ade_translation_quiver('Z', 1, 0), InvalidDynkinIndex);
    CHECK_THROWS_AS(ade_translation_quiver('A', 1, -1), InvalidDynkinIndex);
}

TEST_CASE("canonical form is idempotent") {
    for (const auto& tq : {ade_translation_quiver('A', 4, 2), ade_translation_quiver('D', 6, 1),
                           full_fixture_conifold()}) {
        TranslationQuiver c1 = canonical_form(tq);
        TranslationQuiver c2 = canonical_form(c1);
        CHECK(c1 == c2);
    }
}

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937 rng(42);
    for (const auto& tq : {ade_translation_quiver('A', 5, 2), ade_translation_quiver('A', 6, 1),
                           ade_translation_quiver('D', 4, 1), ade_translation_quiver('D', 7, 1),
                           ade_translation_quiver('E', 7, 1), full_fixture_conifold(),
                           full_fixture_a_dim0(3)}) {
        TranslationQuiver base = canonical_form(tq);
        for (int trial = 0; trial < 3; ++trial) {
            TranslationQuiver mixed = shuffled(tq, rng);
            CHECK(canonical_form(mixed) == base);
        }
    }
}

TEST_CASE("Knoerrer parity classes agree, neighbours differ") {
    CHECK(canonical_form(ade_translation_quiver('A', 3, 1)) ==
          canonical_form(ade_translation_quiver('A', 3, 3)));
    CHECK(canonical_form(ade_translation_quiver('A', 3, 2)) ==
          canonical_form(ade_translation_quiver('A', 3, 0)));
    // even vs odd A_3: same vertex and arrow counts, different tau
    CHECK_FALSE(canonical_form(ade_translation_quiver('A', 3, 1)) ==
                canonical_form(ade_translation_quiver('A', 3, 2)));
}

TEST_CASE("stable part strips projectives and their arrows") {
    TranslationQuiver stable = full_fixture_conifold().stable_part();
    CHECK(stable.quiver.vertices.size() == 2);
    CHECK(stable.quiver.arrows.empty());
    CHECK(stable.tau.size() == 2);
    CHECK(canonical_form(stable) == canonical_form(ade_translation_quiver('A', 1, 1)));

    TranslationQuiver curve = full_fixture_a_dim0(2).stable_part();
    CHECK(canonical_form(curve) == canonical_form(ade_translation_quiver('A', 2, 2)));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("fixtures");

TEST_CASE("checked-in fixture files match the builders field by field") {
    auto load = [](const std::string& name) {
        std::ifstream f(std::string(MESHFORGE_SOURCE_DIR) + "/fixtures/" + name);
        REQUIRE(f.good());
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        return parse_quiver(text);
    };
    CHECK(load("a1_dim0.json") == full_fixture_a1_dim0());
    CHECK(load("conifold.json") == full_fixture_conifold());
    CHECK(load("a2_dim0.json") == full_fixture_a_dim0(2));
    CHECK(load("a3_dim0.json") == full_fixture_a_dim0(3));
    CHECK(load("a4_dim0.json") == full_fixture_a_dim0(4));
    CHECK(load("a1_dim2.json") == full_fixture_a1_dim2());
    // tabulated odd D/E stable quivers, gated by the validator above
    CHECK(load("odd_d4.json") == ade_translation_quiver('D', 4, 1));
    CHECK(load("odd_d5.json") == ade_translation_quiver('D', 5, 1));
    CHECK(load("odd_e6.json") == ade_translation_quiver('E', 6, 1));
    CHECK(load("odd_e7.json") == ade_translation_quiver('E', 7, 1));
    CHECK(load("odd_e8.json") == ade_translation_quiver('E', 8, 1));
    for (const std::string name :
         {"odd_d4.json", "odd_d5.json", "odd_e6.json", "odd_e7.json", "odd_e8.json"})
        CHECK(validate_translation_quiver(load(name)).ok);
}

TEST_SUITE_END();
