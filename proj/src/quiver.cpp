#include "meshforge/quiver.hpp"

#include <algorithm>
#include <set>

namespace meshforge {

int GradedQuiver::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

int GradedQuiver::arrow_index(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<int> GradedQuiver::arrows_out(const std::string& v, int degree) const {
    std::vector<int> out;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].src == v && arrows[i].degree == degree) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> GradedQuiver::arrows_in(const std::string& v, int degree) const {
    std::vector<int> out;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].tgt == v && arrows[i].degree == degree) out.push_back(static_cast<int>(i));
    return out;
}

GradedQuiver GradedQuiver::induced(const std::vector<std::string>& vertex_ids) const {
    std::set<std::string> keep(vertex_ids.begin(), vertex_ids.end());
    GradedQuiver out;
    for (const auto& v : vertices)
        if (keep.count(v.id)) out.vertices.push_back(v);
    for (const auto& a : arrows)
        if (keep.count(a.src) && keep.count(a.tgt)) out.arrows.push_back(a);
    return out;
}

std::optional<std::string> TranslationQuiver::tau_of(const std::string& v) const {
    auto it = tau.find(v);
    if (it == tau.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> TranslationQuiver::tau_inv(const std::string& v) const {
    for (const auto& [from, to] : tau)
        if (to == v) return from;
    return std::nullopt;
}

Rat TranslationQuiver::coeff(const std::string& arrow_id) const {
    auto it = mesh_coeff.find(arrow_id);
    return it == mesh_coeff.end() ? Rat(1) : it->second;
}

TranslationQuiver TranslationQuiver::stable_part() const {
    std::vector<std::string> keep;
    for (const auto& v : quiver.vertices)
        if (!v.projective) keep.push_back(v.id);
    TranslationQuiver out;
    out.quiver = quiver.induced(keep);
    std::set<std::string> kept(keep.begin(), keep.end());
    for (const auto& [from, to] : tau)
        if (kept.count(from) && kept.count(to)) out.tau[from] = to;
    std::set<std::string> kept_arrows;
    for (const auto& a : out.quiver.arrows) kept_arrows.insert(a.id);
    for (const auto& [a, b] : sigma)
        if (kept_arrows.count(a) && kept_arrows.count(b)) out.sigma[a] = b;
    for (const auto& [a, c] : mesh_coeff)
        if (kept_arrows.count(a)) out.mesh_coeff[a] = c;
    return out;
}

ValidationReport validate_graded_quiver(const GradedQuiver& q) {
    ValidationReport rep;
    std::set<std::string> vids;
    for (const auto& v : q.vertices) {
        if (!vids.insert(v.id).second) rep.add("vertex-id-unique", v.id, "duplicate vertex id");
    }
    std::set<std::string> aids;
    for (const auto& a : q.arrows) {
        if (!aids.insert(a.id).second) rep.add("arrow-id-unique", a.id, "duplicate arrow id");
        if (!vids.count(a.src)) rep.add("arrow-src-declared", a.id, "source '" + a.src + "' not a declared vertex");
        if (!vids.count(a.tgt)) rep.add("arrow-tgt-declared", a.id, "target '" + a.tgt + "' not a declared vertex");
        if (a.degree != 0 && a.degree != -1)
            rep.add("arrow-degree", a.id, "degree must be 0 or -1, got " + std::to_string(a.degree));
    }
    return rep;
}

ValidationReport validate_translation_quiver(const TranslationQuiver& tq) {
    ValidationReport rep = validate_graded_quiver(tq.quiver);
    const GradedQuiver& q = tq.quiver;

    for (const auto& a : q.arrows)
        if (a.degree != 0)
            rep.add("translation-degree0", a.id, "translation quiver arrows must have degree 0");

    // tau: defined exactly on non-projective vertices, injective, image non-projective.
    std::map<std::string, int> image_count;
    for (const auto& v : q.vertices) {
        bool has = tq.tau.count(v.id) != 0;
        if (v.projective && has) rep.add("tau-domain", v.id, "tau defined on a projective vertex");
        if (!v.projective && !has) rep.add("tau-domain", v.id, "tau missing on a non-projective vertex");
    }
    for (const auto& [from, to] : tq.tau) {
        int vi = q.vertex_index(to);
        if (q.vertex_index(from) < 0) rep.add("tau-endpoint", from, "tau source not a declared vertex");
        if (vi < 0) {
            rep.add("tau-endpoint", from, "tau image '" + to + "' not a declared vertex");
            continue;
        }
        if (q.vertices[vi].projective) rep.add("tau-image-nonprojective", from, "tau image '" + to + "' is projective");
        if (++image_count[to] > 1) rep.add("tau-injective", to, "two vertices share the tau image '" + to + "'");
    }

    // sigma: defined exactly on degree-0 arrows out of vertices in dom(tau^{-1});
    // mesh-target law; per-vertex bijection onto the arrows into tau^{-1}(i).
    std::set<std::string> tau_images;
    for (const auto& [from, to] : tq.tau) tau_images.insert(to);

    for (const auto& a : q.arrows) {
        bool need = tau_images.count(a.src) != 0;
        auto it = tq.sigma.find(a.id);
        if (need && it == tq.sigma.end()) {
            rep.add("sigma-domain", a.id, "sigma missing on arrow out of '" + a.src + "'");
            continue;
        }
        if (!need && it != tq.sigma.end())
            rep.add("sigma-domain", a.id, "sigma defined but tau^{-1}(src) is not");
        if (it == tq.sigma.end()) continue;
        int pi = q.arrow_index(it->second);
        if (pi < 0) {
            rep.add("sigma-endpoint", a.id, "sigma image '" + it->second + "' not a declared arrow");
            continue;
        }
        const Arrow& p = q.arrows[pi];
        auto tinv = tq.tau_inv(a.src);
        if (p.src != a.tgt)
            rep.add("mesh-target", a.id, "sigma image must start at tgt('" + a.id + "') = '" + a.tgt + "'");
        if (tinv && p.tgt != *tinv)
            rep.add("mesh-target", a.id, "sigma image must end at tau^{-1}('" + a.src + "') = '" + *tinv + "'");
    }

    for (const auto& v : q.vertices) {
        if (!tau_images.count(v.id)) continue;
        auto tinv = tq.tau_inv(v.id);
        auto out = q.arrows_out(v.id, 0);
        std::set<std::string> images;
        bool all_defined = true;
        for (int ai : out) {
            auto it = tq.sigma.find(q.arrows[ai].id);
            if (it == tq.sigma.end()) {
                all_defined = false;
                continue;
            }
            if (!images.insert(it->second).second)
                rep.add("sigma-injective", v.id, "sigma repeats image '" + it->second + "' at vertex '" + v.id + "'");
        }
        if (all_defined && tinv) {
            auto in = q.arrows_in(*tinv, 0);
            std::set<std::string> into;
            for (int ai : in) into.insert(q.arrows[ai].id);
            if (images != into)
                rep.add("sigma-bijective", v.id,
                        "sigma at '" + v.id + "' is not onto the arrows into '" + *tinv + "'");
        }
    }

    std::set<std::string> aids;
    for (const auto& a : q.arrows) aids.insert(a.id);
    for (const auto& [a, c] : tq.mesh_coeff) {
        if (!aids.count(a)) rep.add("mesh-coeff-key", a, "coefficient on undeclared arrow");
        if (c == 0) rep.add("mesh-coeff-nonzero", a, "mesh coefficient must be nonzero");
    }

    return rep;
}

}  // namespace meshforge
