#include "meshforge/dg_auslander.hpp"

#include <json.hpp>

#include "meshforge/quotient.hpp"
#include "meshforge/word_space.hpp"

namespace meshforge {

using nlohmann::json;

void DgPresentation::check_shape() const {
    const GradedQuiver& q = *quiver;
    ValidationReport rep = validate_graded_quiver(q);
    if (!rep.ok) throw ValidationFailed(rep.violations.front().message);
    for (const auto& a : q.arrows) {
        bool dashed = (a.degree == -1);
        bool has = diff.count(a.id) != 0;
        if (!dashed && has) throw Error("diff defined on degree-0 arrow '" + a.id + "'");
        if (dashed && !has) throw Error("diff missing on dashed arrow '" + a.id + "'");
        if (!dashed) continue;
        const TruncatedElement& img = diff.at(a.id);
        for (const auto& [w, c] : img.terms()) {
            if (w.degree(q) != 0)
                throw Error("diff('" + a.id + "') must raise degree by 1");
            if (q.vertices[w.src].id != a.src || q.vertices[w.tgt].id != a.tgt)
                throw Error("diff('" + a.id + "') has a word with wrong endpoints");
        }
    }
}

GradedQuiver DgPresentation::degree0_subquiver() const {
    GradedQuiver out;
    out.vertices = quiver->vertices;
    for (const auto& a : quiver->arrows)
        if (a.degree == 0) out.arrows.push_back(a);
    return out;
}

std::string DgPresentation::to_json() const {
    json j = json::parse(export_quiver(*quiver, "json"));
    json jd = json::object();
    for (const auto& [id, e] : diff) jd[id] = element_to_string(e);
    j["diff"] = jd;
    return j.dump(2) + "\n";
}

DgPresentation DgPresentation::from_json(const std::string& text, int bound) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SyntaxError(e.what());
    }
    // reuse the quiver parser; tau/sigma keys are absent for presentations
    TranslationQuiver shell = parse_quiver(text);
    DgPresentation dg;
    dg.quiver = std::make_shared<GradedQuiver>(shell.quiver);
    dg.bound = bound;
    if (j.contains("diff"))
        for (const auto& [id, txt] : j.at("diff").items())
            dg.diff[id] = parse_element(dg.quiver, bound, txt.get<std::string>());
    for (const auto& a : dg.quiver->arrows)
        if (a.degree == -1 && !dg.diff.count(a.id))
            dg.diff[a.id] = TruncatedElement(dg.quiver, bound);
    dg.check_shape();
    return dg;
}

TruncatedElement mesh_relation(const TranslationQuiver& tq, const std::string& vertex, int bound) {
    auto tinv = tq.tau_inv(vertex);
    if (!tinv) throw MeshUndefined("tau^{-1} undefined at '" + vertex + "'");
    auto quiver = std::make_shared<GradedQuiver>(tq.quiver);
    TruncatedElement out(quiver, bound);
    for (int ai : tq.quiver.arrows_out(vertex, 0)) {
        const Arrow& a = tq.quiver.arrows[ai];
        auto it = tq.sigma.find(a.id);
        if (it == tq.sigma.end()) throw PairingMissing("sigma missing on '" + a.id + "'");
        int pi = tq.quiver.arrow_index(it->second);
        if (pi < 0) throw PairingMissing("sigma image '" + it->second + "' undeclared");
        auto w = concat(*quiver, arrow_word(*quiver, pi), arrow_word(*quiver, ai));
        if (!w) throw PairingMissing("sigma image of '" + a.id + "' not composable");
        out.add_term(*w, tq.coeff(a.id));
    }
    return out;
}

DgPresentation dg_auslander(const TranslationQuiver& tq, int bound) {
    for (const auto& v : tq.quiver.vertices)
        if (v.projective) throw NotStable("projective vertex '" + v.id + "'");
    if (tq.tau.size() != tq.quiver.vertices.size())
        throw NotStable("tau is not a total bijection");
    ValidationReport rep = validate_translation_quiver(tq);
    if (!rep.ok)
        throw ValidationFailed(rep.violations.front().rule + " at '" + rep.violations.front().subject + "'");

    DgPresentation dg;
    auto graded = std::make_shared<GradedQuiver>(tq.quiver);
    for (const auto& v : tq.quiver.vertices) {
        std::string rho = "rho_" + v.id;
        graded->arrows.push_back({rho, rho, v.id, *tq.tau_inv(v.id), -1});
    }
    dg.quiver = graded;
    dg.bound = bound;
    for (const auto& v : tq.quiver.vertices) {
        TruncatedElement m = mesh_relation(tq, v.id, bound);
        // rebuild over the graded quiver (same degree-0 arrow indices, but a
        // different quiver object)
        TruncatedElement img(graded, bound);
        for (const auto& [w, c] : m.terms()) img.add_term(w, c);
        dg.diff["rho_" + v.id] = std::move(img);
    }
    dg.check_shape();
    return dg;
}

TruncatedElement apply_differential(const DgPresentation& dg, const TruncatedElement& x) {
    if (x.bound() > dg.bound) throw BoundMismatch("element bound exceeds the presentation bound");
    const GradedQuiver& q = *dg.quiver;
    TruncatedElement out(dg.quiver, x.bound());
    for (const auto& [w, c] : x.terms()) {
        // d(a_n ... a_1) = sum_k (-1)^{deg of a_n..a_{k+1}} a_n..a_{k+1} d(a_k) a_{k-1}..a_1
        for (size_t k = 0; k < w.arrows.size(); ++k) {
            const Arrow& ak = q.arrows[w.arrows[k]];
            if (ak.degree != -1) continue;
            auto dit = dg.diff.find(ak.id);
            if (dit == dg.diff.end() || dit->second.is_zero()) continue;
            int sign_exp = 0;
            for (size_t j = k + 1; j < w.arrows.size(); ++j)
                sign_exp += -q.arrows[w.arrows[j]].degree;
            Rat sign = (sign_exp % 2 == 0) ? 1 : -1;

            PathWord before;  // applied first
            before.src = w.src;
            before.tgt = q.vertex_index(ak.src);
            before.arrows.assign(w.arrows.begin(), w.arrows.begin() + k);

            PathWord after;
            after.src = q.vertex_index(ak.tgt);
            after.tgt = w.tgt;
            after.arrows.assign(w.arrows.begin() + k + 1, w.arrows.end());

            for (const auto& [dw, dc] : dit->second.terms()) {
                auto mid = concat(q, dw, before);
                if (!mid) continue;
                auto full = concat(q, after, *mid);
                if (!full) continue;
                out.add_term(*full, c * dc * sign);
            }
        }
    }
    return out;
}

bool check_d_squared(const DgPresentation& dg) {
    for (const auto& [id, img] : dg.diff)
        if (!apply_differential(dg, img).is_zero()) return false;
    return true;
}

namespace {

// Moves a degree-0 element onto the solid subquiver (arrow ids preserved).
TruncatedElement transfer_to_subquiver(const TruncatedElement& e, QuiverPtr sub) {
    const GradedQuiver& from = *e.quiver();
    TruncatedElement out(sub, e.bound());
    for (const auto& [w, c] : e.terms()) {
        PathWord nw;
        nw.src = sub->vertex_index(from.vertices[w.src].id);
        nw.tgt = sub->vertex_index(from.vertices[w.tgt].id);
        for (int ai : w.arrows) {
            int ni = sub->arrow_index(from.arrows[ai].id);
            if (ni < 0) throw Error("element leaves the degree-0 subquiver");
            nw.arrows.push_back(ni);
        }
        out.add_term(nw, c);
    }
    return out;
}

}  // namespace

FinDimAlgebra h0(const DgPresentation& dg, int L_max, int window) {
    if (!check_d_squared(dg)) throw Error("h0 requires d^2 = 0");
    auto sub = std::make_shared<GradedQuiver>(dg.degree0_subquiver());
    RelationSet rels;
    for (const auto& [id, img] : dg.diff) {
        if (img.is_zero()) continue;
        rels.relations.push_back({id, transfer_to_subquiver(img, sub)});
    }
    return quotient_algebra(sub, rels, L_max, window);
}

namespace {

struct GradedWordBasis {
    std::map<int, std::vector<PathWord>> by_degree;
    std::map<PathWord, int, WordLess> position;  // within its degree bucket
};

GradedWordBasis graded_words(const DgPresentation& dg, int deg_lo, int bound) {
    GradedWordBasis b;
    WordSpace ws = enumerate_words(dg.quiver, bound, /*degree0_only=*/false, deg_lo);
    for (const auto& w : ws.words) {
        int g = w.degree(*dg.quiver);
        auto& bucket = b.by_degree[g];
        b.position.emplace(w, static_cast<int>(bucket.size()));
        bucket.push_back(w);
    }
    return b;
}

std::map<int, int> truncated_cohomology(const DgPresentation& dg, int deg_lo, int deg_hi, int bound) {
    GradedWordBasis basis = graded_words(dg, deg_lo - 1, bound);
    // Differential matrices are sparse (a handful of terms per word); ranks
    // come from incremental echelon insertions of the columns.
    std::map<int, int> rank;  // degree g -> rank of d^g
    for (int g = deg_lo - 1; g <= deg_hi; ++g) {
        auto src = basis.by_degree.find(g);
        if (src == basis.by_degree.end()) continue;
        RowEchelon ech;
        for (const auto& word : src->second) {
            TruncatedElement x(dg.quiver, bound);
            x.add_term(word, 1);
            TruncatedElement dx = apply_differential(dg, x);
            SparseVec col;
            for (const auto& [w, coef] : dx.terms()) {
                auto it = basis.position.find(w);
                if (it == basis.position.end()) continue;
                col.emplace_back(it->second, coef);
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            ech.insert(std::move(col));
        }
        rank[g] = static_cast<int>(ech.rank());
    }
    std::map<int, int> dims;
    for (int g = deg_lo; g <= deg_hi; ++g) {
        int dim_g = basis.by_degree.count(g) ? static_cast<int>(basis.by_degree[g].size()) : 0;
        int rank_g = rank.count(g) ? rank[g] : 0;
        int rank_prev = rank.count(g - 1) ? rank[g - 1] : 0;
        dims[g] = dim_g - rank_g - rank_prev;
    }
    return dims;
}

}  // namespace

std::map<int, DgCohomologyEntry> dg_cohomology_dims(const DgPresentation& dg, int deg_lo,
                                                    int deg_hi, int bound) {
    if (deg_lo < -4 || deg_hi > 0 || deg_lo > deg_hi)
        throw Error("degree window must lie in [-4, 0]");
    if (!check_d_squared(dg)) throw Error("dg_cohomology_dims requires d^2 = 0");
    std::map<int, int> now = truncated_cohomology(dg, deg_lo, deg_hi, bound);
    std::map<int, int> prev = truncated_cohomology(dg, deg_lo, deg_hi, bound - 1);
    std::map<int, DgCohomologyEntry> out;
    for (int g = deg_lo; g <= deg_hi; ++g) out[g] = {now[g], now[g] == prev[g]};
    return out;
}

DgPresentation perturb_gamma(const DgPresentation& dg, const std::vector<GammaPerturbation>& spec) {
    DgPresentation out = dg;
    const GradedQuiver& q = *dg.quiver;
    for (const auto& p : spec) {
        if (p.scale == 0) throw NonUnitScalar("c = 0 at vertex '" + p.vertex + "'");
        std::string rho = "rho_" + p.vertex;
        auto it = dg.diff.find(rho);
        if (it == dg.diff.end()) throw Error("no dashed generator at vertex '" + p.vertex + "'");
        TruncatedElement img = it->second * p.scale;
        int vsrc = q.vertex_index(p.vertex);
        int vtgt = q.vertex_index(q.arrows[q.arrow_index(rho)].tgt);
        for (const auto& pad : p.paddings) {
            auto jt = dg.diff.find("rho_" + pad.rho_vertex);
            if (jt == dg.diff.end()) throw Error("no dashed generator at vertex '" + pad.rho_vertex + "'");
            if (pad.left.min_word_length() < 1 && pad.right.min_word_length() < 1)
                throw IncompatibleEndpoints("padding needs p or q of length >= 1");
            TruncatedElement term = multiply(multiply(pad.left, jt->second), pad.right);
            for (const auto& [w, c] : term.terms())
                if (w.src != vsrc || w.tgt != vtgt)
                    throw IncompatibleEndpoints("padding term has wrong endpoints at '" + p.vertex + "'");
            img += term;
        }
        out.diff[rho] = std::move(img);
    }
    out.check_shape();
    return out;
}

}  // namespace meshforge
