#include "meshforge/quotient.hpp"

#include <algorithm>

namespace meshforge {

namespace {

using BlockDims = std::map<std::pair<int, int>, int>;  // (src, tgt) -> dim

BlockDims quotient_dims(const WordSpace& ws, const RowEchelon& ech) {
    BlockDims dims;
    for (size_t i = 0; i < ws.words.size(); ++i) {
        if (ech.is_pivot(word_col(static_cast<int>(i)))) continue;
        const PathWord& w = ws.words[i];
        ++dims[{w.src, w.tgt}];
    }
    return dims;
}

}  // namespace

FinDimAlgebra quotient_algebra(QuiverPtr quiver, const RelationSet& rels, int L_max, int window,
                               size_t word_budget) {
    if (L_max < 2) throw BoundTooSmall("quotient_algebra needs L_max >= 2");
    if (window < 1) window = 1;
    rels.check();

    int L_lo = 2;
    for (const auto& r : rels.relations) L_lo = std::max(L_lo, r.element.max_word_length());

    std::vector<BlockDims> history;
    WordSpace ws;
    RowEchelon ech;
    int L_used = L_lo;
    bool stabilized = false;
    for (int L = L_lo; L <= L_max; ++L) {
        ws = enumerate_words(quiver, L, /*degree0_only=*/true, /*min_degree=*/0);
        if (ws.words.size() > word_budget)
            throw OutOfMemoryBudget("word space at L = " + std::to_string(L) + " has " +
                                    std::to_string(ws.words.size()) + " words");
        RelationSet bounded;
        for (const auto& r : rels.relations)
            bounded.relations.push_back({r.id, r.element.rebound(L)});
        ech = ideal_span(ws, bounded);
        history.push_back(quotient_dims(ws, ech));
        L_used = L;
        if (static_cast<int>(history.size()) >= window) {
            bool constant = true;
            for (int k = 1; k < window; ++k)
                if (history[history.size() - 1 - k] != history.back()) constant = false;
            if (constant) {
                stabilized = true;
                break;
            }
        }
    }

    FinDimAlgebra alg;
    alg.quiver = quiver;
    alg.stabilized = stabilized;
    alg.L_used = L_used;
    for (const auto& v : quiver->vertices) alg.vertex_ids.push_back(v.id);
    alg.idempotent.assign(alg.vertex_ids.size(), -1);

    std::vector<int> word_of_basis;
    std::vector<int> basis_of_word(ws.words.size(), -1);
    for (size_t i = 0; i < ws.words.size(); ++i) {
        if (ech.is_pivot(word_col(static_cast<int>(i)))) continue;
        const PathWord& w = ws.words[i];
        basis_of_word[i] = static_cast<int>(alg.basis.size());
        word_of_basis.push_back(static_cast<int>(i));
        TruncatedElement one(quiver, L_used);
        one.add_term(w, 1);
        alg.basis.push_back({element_to_string(one), w.src, w.tgt, w.length()});
        if (w.length() == 0) alg.idempotent[w.src] = basis_of_word[i];
    }

    const GradedQuiver& q = *quiver;
    for (size_t bi = 0; bi < alg.basis.size(); ++bi) {
        const PathWord& wi = ws.words[word_of_basis[bi]];
        for (size_t bj = 0; bj < alg.basis.size(); ++bj) {
            const PathWord& wj = ws.words[word_of_basis[bj]];
            auto w = concat(q, wi, wj);
            if (!w) continue;
            std::vector<std::pair<int, Rat>> entry;
            if (w->length() <= L_used) {
                int idx = ws.find(*w);
                SparseVec v{{word_col(idx), Rat(1)}};
                v = ech.reduce(std::move(v));
                for (auto it = v.rbegin(); it != v.rend(); ++it)
                    entry.emplace_back(basis_of_word[col_word(it->first)], it->second);
            }
            if (!entry.empty()) alg.mult[{static_cast<int>(bi), static_cast<int>(bj)}] = std::move(entry);
        }
    }
    return alg;
}

MinimalityReport minimal_relations_defect(QuiverPtr quiver, const RelationSet& rels,
                                          const std::string& i, const std::string& j, int L) {
    rels.check();
    int maxlen = 2;
    for (const auto& r : rels.relations) maxlen = std::max(maxlen, r.element.max_word_length());
    if (L < maxlen + 2)
        throw BoundTooSmall("minimal_relations_defect needs L >= max relation length + 2");

    int vi = quiver->vertex_index(i), vj = quiver->vertex_index(j);
    if (vi < 0) throw UndeclaredVertex("'" + i + "'");
    if (vj < 0) throw UndeclaredVertex("'" + j + "'");

    MinimalityReport rep;
    for (const auto& r : rels.relations)
        if (r.element.hom_tgt() == vi && r.element.hom_src() == vj) ++rep.count;

    WordSpace ws = enumerate_words(quiver, L, true, 0);
    RelationSet bounded;
    for (const auto& r : rels.relations)
        bounded.relations.push_back({r.id, r.element.rebound(L)});
    RowEchelon full = ideal_span(ws, bounded, /*strict=*/false);
    RowEchelon strict = ideal_span(ws, bounded, /*strict=*/true);

    auto block_rank = [&](const RowEchelon& e) {
        int rank = 0;
        for (const auto& row : e.rows()) {
            const PathWord& lead = ws.words[col_word(row.front().first)];
            if (lead.src == vj && lead.tgt == vi) ++rank;
        }
        return rank;
    };
    rep.dim = block_rank(full) - block_rank(strict);
    return rep;
}

}  // namespace meshforge
