#include <doctest.h>

#include "meshforge/ade.hpp"
#include "meshforge/homology.hpp"
#include "meshforge/koszul.hpp"
#include "meshforge/quotient.hpp"

using namespace meshforge;

TEST_SUITE_BEGIN("koszul");

namespace {

FinDimAlgebra kxk() {
    auto q = std::make_shared<GradedQuiver>();
    q->vertices = {{"1", false}, {"2", false}};
    return quotient_algebra(q, {}, 4);
}

FinDimAlgebra dual_numbers() {
    auto q = std::make_shared<GradedQuiver>();
    q->vertices = {{"1", false}};
    q->arrows = {{"x", "x", "1", "1", 0}};
    RelationSet r;
    r.relations.push_back({"x2", parse_element(q, 6, "x x")});
    return quotient_algebra(q, r, 6);
}

FinDimAlgebra arrow_algebra() {
    auto q = std::make_shared<GradedQuiver>();
    q->vertices = {{"1", false}, {"2", false}};
    q->arrows = {{"a", "a", "1", "2", 0}};
    return quotient_algebra(q, {}, 4);
}

// Non-positive dg algebra with b_1 != 0: x in degree -1, y = dx in degree 0,
// y^2 = yx = xy = x^2 = 0. Quasi-isomorphic to the base field.
AugmentedDgAlgebra contractible_extension() {
    AugmentedDgAlgebra a;
    a.vertex_ids = {"1"};
    a.rad = {{"x", 0, 0, -1}, {"y", 0, 0, 0}};
    a.diff[0] = {{1, rat(1)}};
    a.check();
    return a;
}

// d = 0 but a nontrivial product of mixed degrees: y x = z.
AugmentedDgAlgebra mixed_product() {
    AugmentedDgAlgebra a;
    a.vertex_ids = {"1"};
    a.rad = {{"x", 0, 0, -1}, {"y", 0, 0, 0}, {"z", 0, 0, -1}};
    a.mult[{1, 0}] = {{2, rat(1)}};  // y * x = z
    a.check();
    return a;
}

}  // namespace

TEST_CASE("trivial augmentations") {
    // A = K: no generators, cohomology is K in degree 0
    KoszulPresentation e = koszul_dual(augment(kxk()), 4);
    CHECK(e.base.rad.empty());
    KoszulCohomology k = koszul_cohomology(e, 0, 3);
    CHECK(k.totals[0] == 2);
    CHECK(k.dim(0, "1", "1") == 1);
    CHECK(k.dim(0, "2", "2") == 1);
    CHECK(k.totals[1] == 0);
    CHECK(k.totals[2] == 0);
}

TEST_CASE("dual numbers: one degree-1 generator, zero differential") {
    KoszulPresentation e = koszul_dual(augment(dual_numbers()), 8);
    REQUIRE(e.base.rad.size() == 1);
    CHECK(e.generator_degree(0) == 1);
    CHECK(e.diff.empty());  // b_2(x, x) = 0 in k[x]/x^2
    KoszulCohomology k = koszul_cohomology(e, 0, 4);
    for (int n = 0; n <= 4; ++n) {
        CHECK(k.totals[n] == 1);
        CHECK(k.stabilized[n]);
    }
}

TEST_CASE("path algebra of one arrow: xi squares to zero by composability") {
    KoszulPresentation e = koszul_dual(augment(arrow_algebra()), 6);
    REQUIRE(e.base.rad.size() == 1);
    CHECK(e.diff.empty());
    KoszulCohomology k = koszul_cohomology(e, 0, 3);
    CHECK(k.dim(1, "1", "2") == 1);
    CHECK(k.totals[1] == 1);
    CHECK(k.totals[2] == 0);
    CHECK(k.totals[3] == 0);
}

TEST_CASE("bar d^2 = 0 on every shipped input") {
    for (const auto& alg : {kxk(), dual_numbers(), arrow_algebra()})
        CHECK(koszul_d_squared(augment(alg), 8));
    FinDimAlgebra pa3 = h0(dg_auslander(ade_translation_quiver('A', 3, 2), 12), 12);
    CHECK(koszul_d_squared(augment(pa3), 10));
    CHECK(koszul_d_squared(contractible_extension(), 10));
    CHECK(koszul_d_squared(mixed_product(), 10));
}

TEST_CASE("a dg input with b_1: cohomology of a contractible extension") {
    // A ~ k, so E(A) must have cohomology k in degree 0 only
    KoszulCohomology k = koszul_cohomology(koszul_dual(contractible_extension(), 8), 0, 4);
    CHECK(k.totals[0] == 1);
    for (int n = 1; n <= 4; ++n) CHECK(k.totals[n] == 0);
}

TEST_CASE("oracle agreement with minimal projective resolutions") {
    std::vector<std::pair<std::string, FinDimAlgebra>> algebras;
    algebras.push_back({"kxk", kxk()});
    algebras.push_back({"dual", dual_numbers()});
    algebras.push_back({"stable-intro", stable_algebra(auslander_presentation(full_fixture_a1_dim0()))});
    algebras.push_back({"stable-conifold", stable_algebra(auslander_presentation(full_fixture_conifold()))});
    algebras.push_back({"stable-a2", stable_algebra(auslander_presentation(full_fixture_a_dim0(2)))});
    algebras.push_back({"stable-a3", stable_algebra(auslander_presentation(full_fixture_a_dim0(3)))});
    for (const auto& [name, alg] : algebras) {
        CAPTURE(name);
        KoszulCohomology kos = koszul_cohomology(koszul_dual(augment(alg), 12), 0, 4);
        for (const auto& i : alg.vertex_ids) {
            ResolutionOverAlgebra r = min_proj_resolution(alg, i, 4);
            for (int l = 0; l <= 4; ++l)
                for (const auto& j : alg.vertex_ids) {
                    CAPTURE(l);
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(kos.dim(l, i, j) == r.ext_dim(l, i, j));
                }
        }
    }
}

TEST_CASE("quiver recovery: degree-1 cohomology counts the Gabriel arrows") {
    for (int n : {2, 3}) {
        FinDimAlgebra alg = h0(dg_auslander(ade_translation_quiver('A', n, 2), 12), 12);
        KoszulCohomology kos = koszul_cohomology(koszul_dual(augment(alg), 8), 0, 1);
        const GradedQuiver& q = *alg.quiver;
        for (const auto& i : alg.vertex_ids)
            for (const auto& j : alg.vertex_ids) {
                int arrows = 0;
                for (const auto& a : q.arrows)
                    if (a.src == i && a.tgt == j) ++arrows;
                CHECK(kos.dim(1, i, j) == arrows);
            }
        // with rad^2 = 0 the generators themselves match the arrows
        if (n == 2) CHECK(alg.dim() - 2 == static_cast<int>(augment(alg).rad.size()));
    }
}

TEST_CASE("augmented algebra json round trip") {
    AugmentedDgAlgebra a = contractible_extension();
    AugmentedDgAlgebra b = AugmentedDgAlgebra::from_json(a.to_json());
    CHECK(b.vertex_ids == a.vertex_ids);
    CHECK(b.rad.size() == a.rad.size());
    CHECK(b.mult == a.mult);
    CHECK(b.diff == a.diff);
}

TEST_CASE("malformed augmentations are rejected") {
    AugmentedDgAlgebra a;
    a.vertex_ids = {"1"};
    a.rad = {{"x", 0, 0, 1}};  // positive degree
    CHECK_THROWS_AS(a.check(), NotAugmented);
    AugmentedDgAlgebra b;
    b.vertex_ids = {"1", "2"};
    b.rad = {{"x", 0, 1, 0}, {"y", 0, 1, 0}};
    b.mult[{0, 1}] = {{0, rat(1)}};  // non-composable product
    CHECK_THROWS_AS(b.check(), NotAugmented);
    CHECK_THROWS_AS(koszul_dual(augment(kxk()), 1), Error);
}

TEST_SUITE_END();
