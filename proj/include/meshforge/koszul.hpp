#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "meshforge/fin_dim_algebra.hpp"

namespace meshforge {

// Finite-dimensional non-positive dg algebra with a chosen augmentation:
// A = K + rad with K spanned by one idempotent per vertex. Only b_1 and b_2
// are present; products and differentials of radical elements stay radical.
struct AugmentedDgAlgebra {
    struct Elem {
        std::string label;
        int src = -1;  // vertex positions
        int tgt = -1;
        int degree = 0;  // <= 0
    };

    std::vector<std::string> vertex_ids;
    std::vector<Elem> rad;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> mult;  // rad_i * rad_j
    std::map<int, std::vector<std::pair<int, Rat>>> diff;                  // b_1, degree +1

    int dim() const { return static_cast<int>(rad.size()) + static_cast<int>(vertex_ids.size()); }
    void check() const;  // NotAugmented on shape violations

    std::string to_json() const;
    static AugmentedDgAlgebra from_json(const std::string& text);
};

// The augmentation of a basis-and-structure-constants algebra: K = span of
// the vertex idempotents, rad = the rest. Requires every product of radical
// basis elements to expand over radical elements.
AugmentedDgAlgebra augment(const FinDimAlgebra& a);

// A word of the (dual) bar construction: a composable sequence of radical
// basis elements, src(letters[k]) = tgt(letters[k+1]). The matching Koszul
// dual generator word has degree sum(1 - deg) and reversed orientation.
struct BarWord {
    std::vector<int> letters;

    bool operator<(const BarWord& o) const { return letters < o.letters; }
    bool operator==(const BarWord& o) const { return letters == o.letters; }
};

// Koszul dual E(A) = D(BA): complete tensor algebra on the dual of rad[1],
// with differential dual to the bar coderivation, truncated at tensor
// length W.
struct KoszulPresentation {
    AugmentedDgAlgebra base;
    int word_bound = 0;  // W

    // generator k is dual to rad[k]; degree 1 - deg(rad[k]); as an arrow of
    // the recovered graded quiver it runs tgt(rad[k]) -> src(rad[k]).
    int generator_degree(int k) const { return 1 - base.rad[k].degree; }

    // d(generator k), as dual-bar words with coefficients.
    std::map<int, std::vector<std::pair<BarWord, Rat>>> diff;
};

KoszulPresentation koszul_dual(const AugmentedDgAlgebra& a, int word_bound);

// d^2 = 0 of the truncated bar complex (encodes associativity of b_2 and the
// Leibniz property of b_1).
bool koszul_d_squared(const AugmentedDgAlgebra& a, int word_bound);

struct KoszulCohomology {
    std::map<std::tuple<int, std::string, std::string>, int> dims;  // (n, i, j)
    std::map<int, int> totals;
    std::map<int, bool> stabilized;  // W vs W-1

    int dim(int n, const std::string& i, const std::string& j) const {
        auto it = dims.find({n, i, j});
        return it == dims.end() ? 0 : it->second;
    }
};

// H^n(E(A)) per vertex pair; when stabilized, dims(n, i, j) = Ext^n_A(S_i, S_j).
KoszulCohomology koszul_cohomology(const KoszulPresentation& e, int deg_lo, int deg_hi);

}  // namespace meshforge
