#include "meshforge/fin_dim_algebra.hpp"

#include <json.hpp>

#include "meshforge/errors.hpp"

namespace meshforge {

using nlohmann::json;

int FinDimAlgebra::vertex_pos(const std::string& id) const {
    for (size_t i = 0; i < vertex_ids.size(); ++i)
        if (vertex_ids[i] == id) return static_cast<int>(i);
    return -1;
}

const std::vector<std::pair<int, Rat>>& FinDimAlgebra::product(int i, int j) const {
    static const std::vector<std::pair<int, Rat>> kEmpty;
    auto it = mult.find({i, j});
    return it == mult.end() ? kEmpty : it->second;
}

int FinDimAlgebra::block_dim(int src_pos, int tgt_pos) const {
    int d = 0;
    for (const auto& b : basis)
        if (b.src == src_pos && b.tgt == tgt_pos) ++d;
    return d;
}

std::map<std::pair<std::string, std::string>, int> FinDimAlgebra::block_dims() const {
    std::map<std::pair<std::string, std::string>, int> dims;
    for (const auto& b : basis) ++dims[{vertex_ids[b.src], vertex_ids[b.tgt]}];
    return dims;
}

bool FinDimAlgebra::is_semisimple_diag() const {
    for (const auto& b : basis)
        if (b.length != 0) return false;
    return true;
}

std::string FinDimAlgebra::to_json() const {
    json j;
    j["vertices"] = vertex_ids;
    json jb = json::array();
    for (const auto& b : basis)
        jb.push_back({{"label", b.label},
                      {"src", vertex_ids[b.src]},
                      {"tgt", vertex_ids[b.tgt]},
                      {"length", b.length}});
    j["basis"] = jb;
    json ji = json::object();
    for (size_t v = 0; v < vertex_ids.size(); ++v)
        if (idempotent[v] >= 0) ji[vertex_ids[v]] = idempotent[v];
    j["idempotents"] = ji;
    json jm = json::array();
    for (const auto& [key, terms] : mult) {
        json t = json::array();
        for (const auto& [b, c] : terms) t.push_back({b, rat_to_string(c)});
        jm.push_back({{"l", key.first}, {"r", key.second}, {"terms", t}});
    }
    j["mult"] = jm;
    json jd = json::object();
    for (const auto& [key, d] : block_dims()) jd[key.first + "->" + key.second] = d;
    j["block_dims"] = jd;
    j["stabilized"] = stabilized;
    j["L_used"] = L_used;
    return j.dump(2) + "\n";
}

FinDimAlgebra FinDimAlgebra::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SyntaxError(e.what());
    }
    FinDimAlgebra a;
    try {
        a.vertex_ids = j.at("vertices").get<std::vector<std::string>>();
        a.idempotent.assign(a.vertex_ids.size(), -1);
        for (const auto& jb : j.at("basis")) {
            FinDimAlgebra::BasisElem b;
            b.label = jb.at("label").get<std::string>();
            b.src = a.vertex_pos(jb.at("src").get<std::string>());
            b.tgt = a.vertex_pos(jb.at("tgt").get<std::string>());
            b.length = jb.value("length", 1);
            if (b.src < 0 || b.tgt < 0) throw SyntaxError("basis element on undeclared vertex");
            a.basis.push_back(std::move(b));
        }
        for (const auto& [v, idx] : j.at("idempotents").items()) {
            int p = a.vertex_pos(v);
            if (p < 0) throw SyntaxError("idempotent on undeclared vertex");
            a.idempotent[p] = idx.get<int>();
        }
        for (const auto& jm : j.at("mult")) {
            std::vector<std::pair<int, Rat>> terms;
            for (const auto& t : jm.at("terms"))
                terms.emplace_back(t.at(0).get<int>(), rat_from_string(t.at(1).get<std::string>()));
            a.mult[{jm.at("l").get<int>(), jm.at("r").get<int>()}] = std::move(terms);
        }
        a.stabilized = j.value("stabilized", true);
        a.L_used = j.value("L_used", 0);
    } catch (const json::exception& e) {
        throw SyntaxError(e.what());
    }
    return a;
}

std::vector<std::vector<int>> cartan_matrix(const FinDimAlgebra& a) {
    if (!a.stabilized) throw NotStabilizedInput("cartan_matrix needs a stabilized algebra");
    size_t n = a.vertex_ids.size();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (const auto& b : a.basis) ++c[b.tgt][b.src];  // entry (j, i) = dim e_j A e_i
    return c;
}

FinDimAlgebra corner_algebra(const FinDimAlgebra& a, const std::set<std::string>& verts) {
    if (verts.empty()) throw EmptyIdempotent("corner on the empty vertex set");
    std::vector<int> keep_vertex;
    for (const auto& v : verts) {
        int p = a.vertex_pos(v);
        if (p < 0) throw UndeclaredVertex("'" + v + "'");
        keep_vertex.push_back(p);
    }
    FinDimAlgebra out;
    out.quiver = nullptr;  // the corner is not presented by a subquiver
    out.stabilized = a.stabilized;
    out.L_used = a.L_used;
    std::vector<int> new_vertex_pos(a.vertex_ids.size(), -1);
    for (size_t i = 0; i < a.vertex_ids.size(); ++i) {
        if (!verts.count(a.vertex_ids[i])) continue;
        new_vertex_pos[i] = static_cast<int>(out.vertex_ids.size());
        out.vertex_ids.push_back(a.vertex_ids[i]);
    }
    out.idempotent.assign(out.vertex_ids.size(), -1);
    std::vector<int> new_basis_idx(a.basis.size(), -1);
    for (size_t b = 0; b < a.basis.size(); ++b) {
        const auto& be = a.basis[b];
        if (new_vertex_pos[be.src] < 0 || new_vertex_pos[be.tgt] < 0) continue;
        new_basis_idx[b] = static_cast<int>(out.basis.size());
        out.basis.push_back({be.label, new_vertex_pos[be.src], new_vertex_pos[be.tgt], be.length});
        if (be.length == 0) out.idempotent[new_vertex_pos[be.src]] = new_basis_idx[b];
    }
    for (const auto& [key, terms] : a.mult) {
        int i = new_basis_idx[key.first], j = new_basis_idx[key.second];
        if (i < 0 || j < 0) continue;
        std::vector<std::pair<int, Rat>> nt;
        for (const auto& [b, c] : terms) {
            // products of corner elements stay in the corner blocks
            nt.emplace_back(new_basis_idx[b], c);
        }
        out.mult[{i, j}] = std::move(nt);
    }
    return out;
}

Module simple_module(const FinDimAlgebra& a, const std::string& vertex_id) {
    int v = a.vertex_pos(vertex_id);
    if (v < 0) throw UndeclaredVertex("'" + vertex_id + "'");
    Module m;
    m.vertex_of = {v};
    m.action.reserve(a.basis.size());
    for (int b = 0; b < a.dim(); ++b) {
        RatMatrix act(1, 1);
        if (a.basis[b].length == 0 && a.basis[b].src == v) act.at(0, 0) = 1;
        m.action.push_back(std::move(act));
    }
    return m;
}

Module projective_module(const FinDimAlgebra& a, const std::string& vertex_id) {
    int v = a.vertex_pos(vertex_id);
    if (v < 0) throw UndeclaredVertex("'" + vertex_id + "'");
    Module m;
    std::vector<int> coords;  // basis elements with src = v
    std::vector<int> coord_of_basis(a.basis.size(), -1);
    for (int b = 0; b < a.dim(); ++b)
        if (a.basis[b].src == v) {
            coord_of_basis[b] = static_cast<int>(coords.size());
            coords.push_back(b);
            m.vertex_of.push_back(a.basis[b].tgt);
        }
    int d = static_cast<int>(coords.size());
    for (int b = 0; b < a.dim(); ++b) {
        RatMatrix act(d, d);
        for (int c = 0; c < d; ++c)
            for (const auto& [res, coef] : a.product(b, coords[c]))
                if (coord_of_basis[res] >= 0) act.at(coord_of_basis[res], c) = coef;
        m.action.push_back(std::move(act));
    }
    return m;
}

Module restrict_module(const FinDimAlgebra& a, const Module& m, const std::set<std::string>& verts) {
    if (verts.empty()) throw EmptyIdempotent("restriction to the empty vertex set");
    std::vector<int> keep;  // coordinates
    std::map<int, int> new_vpos;
    int next = 0;
    for (size_t i = 0; i < a.vertex_ids.size(); ++i)
        if (verts.count(a.vertex_ids[i])) new_vpos[static_cast<int>(i)] = next++;
    for (int c = 0; c < m.dim(); ++c)
        if (new_vpos.count(m.vertex_of[c])) keep.push_back(c);

    Module out;
    for (int c : keep) out.vertex_of.push_back(new_vpos[m.vertex_of[c]]);
    for (int b = 0; b < a.dim(); ++b) {
        const auto& be = a.basis[b];
        if (!verts.count(a.vertex_ids[be.src]) || !verts.count(a.vertex_ids[be.tgt])) continue;
        RatMatrix act(keep.size(), keep.size());
        for (size_t r = 0; r < keep.size(); ++r)
            for (size_t c = 0; c < keep.size(); ++c) act.at(r, c) = m.action[b].at(keep[r], keep[c]);
        out.action.push_back(std::move(act));
    }
    return out;
}

}  // namespace meshforge
