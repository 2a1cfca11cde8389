#include "meshforge/word_space.hpp"

#include <deque>

namespace meshforge {

WordSpace enumerate_words(QuiverPtr quiver, int bound, bool degree0_only, int min_degree) {
    WordSpace ws;
    ws.quiver = quiver;
    ws.bound = bound;
    const GradedQuiver& q = *quiver;

    std::vector<PathWord> layer;
    for (size_t v = 0; v < q.vertices.size(); ++v) layer.push_back(trivial_word(static_cast<int>(v)));
    std::vector<std::vector<int>> out_of(q.vertices.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (degree0_only && q.arrows[a].degree != 0) continue;
        out_of[q.vertex_index(q.arrows[a].src)].push_back(static_cast<int>(a));
    }

    auto degree_of = [&](const PathWord& w) { return w.degree(q); };
    for (int len = 0; len <= bound && !layer.empty(); ++len) {
        for (const auto& w : layer) {
            ws.index.emplace(w, static_cast<int>(ws.words.size()));
            ws.words.push_back(w);
        }
        if (len == bound) break;
        std::vector<PathWord> next;
        for (const auto& w : layer)
            for (int a : out_of[w.tgt]) {
                PathWord ext = w;
                ext.arrows.push_back(a);
                ext.tgt = q.vertex_index(q.arrows[a].tgt);
                if (degree_of(ext) < min_degree) continue;
                next.push_back(std::move(ext));
            }
        // Extension preserves lexicographic order within a length, but the
        // degree pruning can only remove entries, so the order stands.
        layer = std::move(next);
    }
    return ws;
}

SparseVec element_to_vec(const WordSpace& ws, const TruncatedElement& e) {
    SparseVec v;
    for (const auto& [w, c] : e.terms()) {
        int idx = ws.find(w);
        if (idx < 0) continue;  // beyond the bound
        v.emplace_back(word_col(idx), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

TruncatedElement vec_to_element(const WordSpace& ws, const SparseVec& v) {
    TruncatedElement e(ws.quiver, ws.bound);
    for (const auto& [col, c] : v) e.add_term(ws.words[col_word(col)], c);
    return e;
}

namespace {

// Multiplies a homogeneous sparse vector by one arrow; left = post-compose.
SparseVec arrow_multiple(const WordSpace& ws, const SparseVec& v, int arrow, bool left) {
    const GradedQuiver& q = *ws.quiver;
    int asrc = q.vertex_index(q.arrows[arrow].src);
    int atgt = q.vertex_index(q.arrows[arrow].tgt);
    SparseVec out;
    for (const auto& [col, c] : v) {
        const PathWord& w = ws.words[col_word(col)];
        PathWord ext;
        if (left) {
            if (w.tgt != asrc) continue;
            ext = w;
            ext.arrows.push_back(arrow);
            ext.tgt = atgt;
        } else {
            if (w.src != atgt) continue;
            ext.src = asrc;
            ext.tgt = w.tgt;
            ext.arrows.reserve(w.arrows.size() + 1);
            ext.arrows.push_back(arrow);
            ext.arrows.insert(ext.arrows.end(), w.arrows.begin(), w.arrows.end());
        }
        int idx = ws.find(ext);
        if (idx >= 0) out.emplace_back(word_col(idx), c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

RowEchelon ideal_span(const WordSpace& ws, const RelationSet& rels, bool strict) {
    RowEchelon ech;
    std::deque<SparseVec> work;
    auto push = [&](SparseVec v) {
        SparseVec row = ech.insert(std::move(v));
        if (!row.empty()) work.push_back(std::move(row));
    };
    for (const auto& r : rels.relations) {
        SparseVec seed = element_to_vec(ws, r.element);
        if (seed.empty()) continue;
        if (strict) {
            for (size_t a = 0; a < ws.quiver->arrows.size(); ++a) {
                push(arrow_multiple(ws, seed, static_cast<int>(a), true));
                push(arrow_multiple(ws, seed, static_cast<int>(a), false));
            }
        } else {
            push(std::move(seed));
        }
    }
    while (!work.empty()) {
        SparseVec row = std::move(work.front());
        work.pop_front();
        for (size_t a = 0; a < ws.quiver->arrows.size(); ++a) {
            push(arrow_multiple(ws, row, static_cast<int>(a), true));
            push(arrow_multiple(ws, row, static_cast<int>(a), false));
        }
    }
    return ech;
}

}  // namespace meshforge
