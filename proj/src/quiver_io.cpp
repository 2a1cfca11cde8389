#include <json.hpp>

#include <set>

#include "meshforge/quiver.hpp"

namespace meshforge {

using nlohmann::json;

namespace {

json quiver_to_json(const GradedQuiver& q) {
    json jv = json::array();
    for (const auto& v : q.vertices) jv.push_back({{"id", v.id}, {"projective", v.projective}});
    json ja = json::array();
    for (const auto& a : q.arrows)
        ja.push_back({{"id", a.id}, {"label", a.label}, {"src", a.src}, {"tgt", a.tgt}, {"degree", a.degree}});
    return json{{"vertices", jv}, {"arrows", ja}};
}

GradedQuiver quiver_from_json(const json& j) {
    GradedQuiver q;
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw SyntaxError("quiver object needs 'vertices' and 'arrows'");
    std::set<std::string> vids, aids;
    for (const auto& jv : j.at("vertices")) {
        Vertex v;
        v.id = jv.at("id").get<std::string>();
        v.projective = jv.value("projective", false);
        if (!vids.insert(v.id).second) throw DuplicateId("vertex '" + v.id + "'");
        q.vertices.push_back(std::move(v));
    }
    for (const auto& ja : j.at("arrows")) {
        Arrow a;
        a.id = ja.at("id").get<std::string>();
        a.label = ja.value("label", a.id);
        a.src = ja.at("src").get<std::string>();
        a.tgt = ja.at("tgt").get<std::string>();
        a.degree = ja.value("degree", 0);
        if (!aids.insert(a.id).second) throw DuplicateId("arrow '" + a.id + "'");
        if (!vids.count(a.src)) throw UndeclaredVertex("arrow '" + a.id + "' source '" + a.src + "'");
        if (!vids.count(a.tgt)) throw UndeclaredVertex("arrow '" + a.id + "' target '" + a.tgt + "'");
        q.arrows.push_back(std::move(a));
    }
    return q;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string to_dot(const GradedQuiver& q) {
    std::string out = "digraph quiver {\n  rankdir=LR;\n";
    for (const auto& v : q.vertices) {
        out += "  \"" + dot_escape(v.id) + "\"";
        if (v.projective) out += " [shape=box]";
        out += ";\n";
    }
    for (const auto& a : q.arrows) {
        out += "  \"" + dot_escape(a.src) + "\" -> \"" + dot_escape(a.tgt) + "\" [label=\"" +
               dot_escape(a.label) + "\"";
        if (a.degree == -1) out += ", style=dashed";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

std::string to_tikz(const GradedQuiver& q) {
    // Deterministic circular placement; no layout optimization.
    std::string out = "\\begin{tikzpicture}[->,node distance=14mm]\n";
    size_t n = q.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& v = q.vertices[i];
        out += "  \\node (v" + std::to_string(i) + ") at (" + std::to_string(360.0 * i / (n ? n : 1)) +
               ":" + (n > 1 ? "2.2" : "0") + ") {$" + v.id + "$};\n";
    }
    for (const auto& a : q.arrows) {
        int si = q.vertex_index(a.src), ti = q.vertex_index(a.tgt);
        out += "  \\draw[";
        out += (a.degree == -1) ? "dashed" : "solid";
        if (si == ti) {
            out += "] (v" + std::to_string(si) + ") edge[loop above] node[above] {$" + a.label +
                   "$} (v" + std::to_string(ti) + ");\n";
        } else {
            out += ", bend left=12] (v" + std::to_string(si) + ") edge node[auto] {$" + a.label +
                   "$} (v" + std::to_string(ti) + ");\n";
        }
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace

TranslationQuiver parse_quiver(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SyntaxError(e.what());
    }
    TranslationQuiver tq;
    try {
        tq.quiver = quiver_from_json(j);
        if (j.contains("tau"))
            for (const auto& [k, v] : j.at("tau").items()) tq.tau[k] = v.get<std::string>();
        if (j.contains("sigma"))
            for (const auto& [k, v] : j.at("sigma").items()) tq.sigma[k] = v.get<std::string>();
        if (j.contains("mesh_coeff"))
            for (const auto& [k, v] : j.at("mesh_coeff").items())
                tq.mesh_coeff[k] = rat_from_string(v.get<std::string>());
    } catch (const json::exception& e) {
        throw SyntaxError(e.what());
    } catch (const std::invalid_argument& e) {
        throw SyntaxError(e.what());
    }
    return tq;
}

std::string export_quiver(const GradedQuiver& q, const std::string& format) {
    if (format == "json") return quiver_to_json(q).dump(2) + "\n";
    if (format == "dot") return to_dot(q);
    if (format == "tikz") return to_tikz(q);
    throw UnsupportedFormat("'" + format + "'");
}

std::string export_translation_quiver(const TranslationQuiver& tq, const std::string& format) {
    if (format == "json") {
        json j = quiver_to_json(tq.quiver);
        json jt = json::object(), js = json::object(), jc = json::object();
        for (const auto& [k, v] : tq.tau) jt[k] = v;
        for (const auto& [k, v] : tq.sigma) js[k] = v;
        for (const auto& [k, v] : tq.mesh_coeff) jc[k] = rat_to_string(v);
        j["tau"] = jt;
        j["sigma"] = js;
        if (!jc.empty()) j["mesh_coeff"] = jc;
        return j.dump(2) + "\n";
    }
    return export_quiver(tq.quiver, format);
}

}  // namespace meshforge
