#include "meshforge/homology.hpp"

#include <algorithm>

#include "meshforge/quotient.hpp"

namespace meshforge {

bool AuslanderPresentation::is_projective(const std::string& v) const {
    return std::find(projective_vertices.begin(), projective_vertices.end(), v) !=
           projective_vertices.end();
}

namespace {

RelationSet mesh_relation_set(const TranslationQuiver& tq, QuiverPtr quiver, int bound) {
    RelationSet rels;
    for (const auto& v : tq.quiver.vertices) {
        if (!tq.tau_inv(v.id)) continue;
        TruncatedElement m = mesh_relation(tq, v.id, bound);
        if (m.is_zero()) continue;
        TruncatedElement over(quiver, bound);
        for (const auto& [w, c] : m.terms()) over.add_term(w, c);
        rels.relations.push_back({"mesh_" + v.id, std::move(over)});
    }
    return rels;
}

}  // namespace

AuslanderPresentation auslander_presentation(const TranslationQuiver& full_tq, int d) {
    ValidationReport rep = validate_translation_quiver(full_tq);
    if (!rep.ok)
        throw ValidationFailed(rep.violations.front().rule + " at '" + rep.violations.front().subject + "'");
    AuslanderPresentation ap;
    ap.full_tq = full_tq;
    ap.quiver = std::make_shared<GradedQuiver>(full_tq.quiver);
    ap.relations = mesh_relation_set(full_tq, ap.quiver, 2);
    ap.d = d;
    for (const auto& v : full_tq.quiver.vertices)
        if (v.projective) ap.projective_vertices.push_back(v.id);
    return ap;
}

AuslanderPresentation auslander_algebra(const TranslationQuiver& full_tq, int L_max) {
    AuslanderPresentation ap = auslander_presentation(full_tq);
    ap.algebra = quotient_algebra(ap.quiver, ap.relations, L_max);
    return ap;
}

FinDimAlgebra stable_algebra(const AuslanderPresentation& ap, int L_max) {
    TranslationQuiver stable = ap.full_tq.stable_part();
    auto sub = std::make_shared<GradedQuiver>(stable.quiver);
    // Mesh relations of the full quiver, restricted: words through a
    // projective vertex die in A/AeA.
    RelationSet rels;
    for (const auto& r : ap.relations.relations) {
        TruncatedElement restricted(sub, r.element.bound());
        bool endpoints_survive = true;
        for (const auto& [w, c] : r.element.terms()) {
            const GradedQuiver& q = *ap.quiver;
            if (sub->vertex_index(q.vertices[w.src].id) < 0 ||
                sub->vertex_index(q.vertices[w.tgt].id) < 0) {
                endpoints_survive = false;
                break;
            }
            PathWord nw;
            nw.src = sub->vertex_index(q.vertices[w.src].id);
            nw.tgt = sub->vertex_index(q.vertices[w.tgt].id);
            bool alive = true;
            for (int ai : w.arrows) {
                int ni = sub->arrow_index(q.arrows[ai].id);
                if (ni < 0) {
                    alive = false;
                    break;
                }
                nw.arrows.push_back(ni);
            }
            if (alive) restricted.add_term(nw, c);
        }
        if (endpoints_survive && !restricted.is_zero())
            rels.relations.push_back({r.id, std::move(restricted)});
    }
    FinDimAlgebra out = quotient_algebra(sub, rels, L_max);
    if (!out.stabilized)
        throw NotStabilized("stable block dims not constant by L = " + std::to_string(L_max));
    return out;
}

Resolution mesh_resolution(const AuslanderPresentation& ap, const std::string& vertex) {
    if (ap.is_projective(vertex)) throw ProjectiveVertex("'" + vertex + "'");
    auto tau = ap.full_tq.tau_of(vertex);
    if (!tau) throw MeshUndefined("tau undefined at '" + vertex + "'");
    Resolution r;
    r.simple = vertex;
    r.steps.push_back({{vertex, 1}});
    if (ap.d == 1) {
        std::map<std::string, int> middle;
        for (int ai : ap.full_tq.quiver.arrows_out(vertex, 0))
            ++middle[ap.full_tq.quiver.arrows[ai].tgt];
        r.steps.push_back(std::move(middle));
    } else {
        auto it = ap.middle_terms.find(vertex);
        if (it == ap.middle_terms.end() || static_cast<int>(it->second.size()) != ap.d)
            throw MissingMiddleTerms("d = " + std::to_string(ap.d) + " needs fixture middle terms");
        for (const auto& step : it->second) r.steps.push_back(step);
    }
    r.steps.push_back({{*tau, 1}});
    return r;
}

Complex hom_into_simple(const Resolution& r, const std::string& j) {
    Complex c;
    for (size_t l = 0; l < r.steps.size(); ++l) {
        auto it = r.steps[l].find(j);
        int d = it == r.steps[l].end() ? 0 : it->second;
        if (d != 0) c.components[static_cast<int>(l)] = d;
    }
    return c;  // induced differentials vanish: the maps are radical
}

ExtTable ext_table(const AuslanderPresentation& ap) {
    ExtTable t;
    t.d = ap.d;
    for (const auto& v : ap.full_tq.quiver.vertices)
        if (!ap.is_projective(v.id)) t.vertices.push_back(v.id);
    for (const auto& i : t.vertices) t.pi[i] = *ap.full_tq.tau_of(i);
    for (const auto& i : t.vertices) {
        Resolution r = mesh_resolution(ap, i);
        for (size_t l = 0; l < r.steps.size(); ++l)
            for (const auto& [j, mult] : r.steps[l]) {
                if (ap.is_projective(j) || mult == 0) continue;
                t.dims[{static_cast<int>(l), i, j}] = mult;
            }
    }
    return t;
}

bool cy_duality_check(const ExtTable& t) {
    for (int l = 0; l <= t.d + 1; ++l)
        for (const auto& i : t.vertices)
            for (const auto& j : t.vertices)
                if (t.dim(l, i, j) != t.dim(t.d + 1 - l, j, t.pi.at(i))) return false;
    return true;
}

std::pair<int, int> cy_fraction(const TranslationQuiver& tq, const std::string& vertex, int d) {
    int vi = tq.quiver.vertex_index(vertex);
    if (vi < 0) throw UndeclaredVertex("'" + vertex + "'");
    if (tq.quiver.vertices[vi].projective) throw ProjectiveVertex("'" + vertex + "'");
    int n = 0;
    std::string cur = vertex;
    do {
        auto next = tq.tau_of(cur);
        if (!next) throw MeshUndefined("tau orbit of '" + vertex + "' leaves the domain");
        cur = *next;
        ++n;
    } while (cur != vertex);
    return {(d + 1) * n, n};
}

int k0_rank(const AuslanderPresentation& ap) {
    return static_cast<int>(ap.full_tq.quiver.vertices.size() - ap.projective_vertices.size());
}

namespace {

// Coordinates of a direct sum of projectives A e_{v_t}: pairs (copy, basis
// element with src = v_t).
struct ProjSum {
    std::vector<int> copy_vertex;            // copy -> vertex position
    std::vector<std::pair<int, int>> coords;  // (copy, basis index)
    std::map<std::pair<int, int>, int> coord_index;

    void add_copy(const FinDimAlgebra& a, int vertex_pos) {
        int t = static_cast<int>(copy_vertex.size());
        copy_vertex.push_back(vertex_pos);
        for (int b = 0; b < a.dim(); ++b)
            if (a.basis[b].src == vertex_pos) {
                coord_index[{t, b}] = static_cast<int>(coords.size());
                coords.push_back({t, b});
            }
    }
    int dim() const { return static_cast<int>(coords.size()); }
    int vertex_of_coord(const FinDimAlgebra& a, int c) const { return a.basis[coords[c].second].tgt; }
};

// b . vec for an algebra basis element b acting on an ambient vector.
std::vector<Rat> act(const FinDimAlgebra& a, const ProjSum& p, int b, const std::vector<Rat>& vec) {
    std::vector<Rat> out(p.dim());
    for (int c = 0; c < p.dim(); ++c) {
        if (vec[c] == 0) continue;
        auto [copy, w] = p.coords[c];
        for (const auto& [res, coef] : a.product(b, w)) {
            auto it = p.coord_index.find({copy, res});
            if (it != p.coord_index.end()) out[it->second] += vec[c] * coef;
        }
    }
    return out;
}

SparseVec to_sparse(const std::vector<Rat>& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

std::vector<Rat> to_dense(const SparseVec& s, int dim) {
    std::vector<Rat> v(dim);
    for (const auto& [i, x] : s) v[i] = x;
    return v;
}

}  // namespace

ResolutionOverAlgebra min_proj_resolution(const FinDimAlgebra& a, const std::string& vertex, int n) {
    if (!a.stabilized) throw NotStabilizedInput("min_proj_resolution needs a stabilized algebra");
    int v0 = a.vertex_pos(vertex);
    if (v0 < 0) throw UndeclaredVertex("'" + vertex + "'");

    ResolutionOverAlgebra out;
    out.simple = vertex;
    out.steps.push_back({{vertex, 1}});
    out.ext[{0, vertex, vertex}] = 1;

    ProjSum proj;
    proj.add_copy(a, v0);
    // Omega^1 = rad(A e_{v0})
    std::vector<std::vector<Rat>> kernel;
    for (int c = 0; c < proj.dim(); ++c)
        if (a.basis[proj.coords[c].second].length >= 1) {
            std::vector<Rat> unit(proj.dim());
            unit[c] = 1;
            kernel.push_back(std::move(unit));
        }

    std::vector<int> radical;
    for (int b = 0; b < a.dim(); ++b)
        if (a.basis[b].length >= 1) radical.push_back(b);

    for (int l = 1; l <= n; ++l) {
        // rad K = span { b . k : b radical basis, k in K }
        RowEchelon radk;
        for (const auto& k : kernel)
            for (int b : radical) radk.insert(to_sparse(act(a, proj, b, k)));

        // Vertex-homogeneous generators of K / rad K, greedily.
        RowEchelon chosen = radk;
        std::vector<std::pair<int, std::vector<Rat>>> gens;  // (vertex, ambient vector)
        std::map<std::string, int> step;
        for (size_t vp = 0; vp < a.vertex_ids.size(); ++vp) {
            for (const auto& k : kernel) {
                std::vector<Rat> masked(proj.dim());
                bool nonzero = false;
                for (int c = 0; c < proj.dim(); ++c)
                    if (proj.vertex_of_coord(a, c) == static_cast<int>(vp) && k[c] != 0) {
                        masked[c] = k[c];
                        nonzero = true;
                    }
                if (!nonzero) continue;
                SparseVec residue = chosen.insert(to_sparse(masked));
                if (residue.empty()) continue;
                gens.push_back({static_cast<int>(vp), to_dense(residue, proj.dim())});
                ++step[a.vertex_ids[vp]];
            }
        }
        for (const auto& [j, mult] : step) out.ext[{l, vertex, j}] = mult;
        out.steps.push_back(step);
        if (gens.empty()) break;
        if (l == n) break;

        // Next projective cover and its kernel.
        ProjSum next;
        for (const auto& [vp, g] : gens) next.add_copy(a, vp);
        RatMatrix phi(proj.dim(), next.dim());
        for (int c = 0; c < next.dim(); ++c) {
            auto [copy, w] = next.coords[c];
            std::vector<Rat> img = act(a, proj, w, gens[copy].second);
            for (int r = 0; r < proj.dim(); ++r) phi.at(r, c) = img[r];
        }
        RatMatrix ker = phi.kernel_basis();
        kernel.clear();
        for (size_t c = 0; c < ker.cols(); ++c) {
            std::vector<Rat> col(next.dim());
            for (size_t r = 0; r < ker.rows(); ++r) col[r] = ker.at(r, c);
            kernel.push_back(std::move(col));
        }
        proj = std::move(next);
    }
    return out;
}

}  // namespace meshforge
