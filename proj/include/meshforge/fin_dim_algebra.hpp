#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "meshforge/linalg.hpp"
#include "meshforge/path_algebra.hpp"

namespace meshforge {

// Finite-dimensional algebra by basis and structure constants. Basis elements
// carry a (src, tgt) vertex pair: e_tgt * b * e_src = b under right-to-left
// composition, so the (i, j) block {b : src = i, tgt = j} is e_j A e_i.
struct FinDimAlgebra {
    struct BasisElem {
        std::string label;
        int src = -1;       // index into vertex_ids
        int tgt = -1;
        int length = 0;     // word length of the normal form (0 for idempotents)
    };

    QuiverPtr quiver;  // presentation quiver when built from one (may be null)
    std::vector<std::string> vertex_ids;
    std::vector<BasisElem> basis;
    std::vector<int> idempotent;  // vertex position -> basis index
    // mult[{i, j}] = basis_i * basis_j (j applied first), as (basis idx, coeff).
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> mult;
    bool stabilized = false;
    int L_used = 0;

    int dim() const { return static_cast<int>(basis.size()); }
    int vertex_pos(const std::string& id) const;
    const std::vector<std::pair<int, Rat>>& product(int i, int j) const;
    int block_dim(int src_pos, int tgt_pos) const;
    std::map<std::pair<std::string, std::string>, int> block_dims() const;  // (src, tgt) -> dim
    bool is_semisimple_diag() const;  // basis = idempotents only

    std::string to_json() const;
    static FinDimAlgebra from_json(const std::string& text);
};

// Per-block dimension matrix: entry (j, i) = dim e_j A e_i. Requires a
// stabilized input.
std::vector<std::vector<int>> cartan_matrix(const FinDimAlgebra& a);

// Corner algebra eAe for e the sum of the idempotents in `verts`.
FinDimAlgebra corner_algebra(const FinDimAlgebra& a, const std::set<std::string>& verts);

// Left module over a FinDimAlgebra: coordinates are graded by vertex
// (coordinate c lives in e_{vertex_of[c]} M) and every algebra basis element
// acts by a matrix.
struct Module {
    std::vector<int> vertex_of;        // coordinate -> vertex position in the algebra
    std::vector<RatMatrix> action;     // one dim x dim matrix per basis element

    int dim() const { return static_cast<int>(vertex_of.size()); }
};

Module simple_module(const FinDimAlgebra& a, const std::string& vertex_id);
Module projective_module(const FinDimAlgebra& a, const std::string& vertex_id);

// M |-> Me as a module over corner_algebra(a, verts); exact by construction
// (projection onto a vertex-graded direct summand).
Module restrict_module(const FinDimAlgebra& a, const Module& m, const std::set<std::string>& verts);

}  // namespace meshforge
