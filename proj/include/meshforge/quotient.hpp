#pragma once

#include "meshforge/fin_dim_algebra.hpp"
#include "meshforge/word_space.hpp"

namespace meshforge {

// Truncated quotient of the complete path algebra of a degree-0 quiver by the
// closed ideal generated by the relations. Block dimensions are computed for
// increasing truncation L; the result is taken at the smallest L whose
// dimension vector repeats over `window` consecutive values (stabilized), or
// at L_max with stabilized = false.
// Throws OutOfMemoryBudget when the truncated word space at some L exceeds
// word_budget entries.
FinDimAlgebra quotient_algebra(QuiverPtr quiver, const RelationSet& rels, int L_max, int window = 2,
                               size_t word_budget = 4000000);

struct MinimalityReport {
    int count = 0;  // relations in e_i R e_j
    int dim = 0;    // dim e_i (I / (IJ + JI)) e_j at the truncation
};

// count vs dim of the minimal-relation block e_i R e_j, where e_i X e_j is
// the block of elements with target i and source j. Equality certifies the
// block is minimal. Requires L >= max relation length + 2.
MinimalityReport minimal_relations_defect(QuiverPtr quiver, const RelationSet& rels,
                                          const std::string& i, const std::string& j, int L);

}  // namespace meshforge
