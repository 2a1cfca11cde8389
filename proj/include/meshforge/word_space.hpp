#pragma once

#include <map>

#include "meshforge/linalg.hpp"
#include "meshforge/path_algebra.hpp"

namespace meshforge {

// All path words of length <= bound, globally sorted by WordLess (so shorter
// and lexicographically smaller words come first). Optionally restricted to
// degree-0 arrows, and pruned below a minimum total degree.
struct WordSpace {
    QuiverPtr quiver;
    int bound = 0;
    std::vector<PathWord> words;
    std::map<PathWord, int, WordLess> index;

    int find(const PathWord& w) const {
        auto it = index.find(w);
        return it == index.end() ? -1 : it->second;
    }
};

WordSpace enumerate_words(QuiverPtr quiver, int bound, bool degree0_only, int min_degree);

// Normal forms rewrite large words in terms of smaller ones, so echelon
// pivots must prefer the largest word of a vector: columns are flipped word
// indices, making the sparse leading entry the largest word.
inline int word_col(int word_idx) { return -word_idx - 1; }
inline int col_word(int col) { return -col - 1; }

SparseVec element_to_vec(const WordSpace& ws, const TruncatedElement& e);
TruncatedElement vec_to_element(const WordSpace& ws, const SparseVec& v);

// Echelon basis of span{u r v : |u| + |r| + |v| <= bound} inside the word
// space, computed by arrow saturation. When `strict` is set, seeds u r v with
// |u| = |v| = 0 are excluded, yielding span(IJ + JI).
RowEchelon ideal_span(const WordSpace& ws, const RelationSet& rels, bool strict = false);

}  // namespace meshforge
