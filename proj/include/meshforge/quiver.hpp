#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meshforge/errors.hpp"
#include "meshforge/rational.hpp"

namespace meshforge {

struct Vertex {
    std::string id;
    bool projective = false;

    bool operator==(const Vertex&) const = default;
};

struct Arrow {
    std::string id;
    std::string label;  // display label; defaults to id
    std::string src;
    std::string tgt;
    int degree = 0;  // 0 = solid, -1 = dashed

    bool operator==(const Arrow&) const = default;
};

// Finite quiver with integer arrow degrees. Vertices and arrows keep their
// declaration order; indices into `vertices`/`arrows` are stable handles.
struct GradedQuiver {
    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const;     // -1 if absent
    int arrow_index(const std::string& id) const;      // -1 if absent
    const Arrow& arrow(int idx) const { return arrows[idx]; }

    std::vector<int> arrows_out(const std::string& v, int degree) const;
    std::vector<int> arrows_in(const std::string& v, int degree) const;

    // Subquiver on the given vertices, dropping arrows with an endpoint outside.
    GradedQuiver induced(const std::vector<std::string>& vertex_ids) const;

    bool operator==(const GradedQuiver&) const = default;
};

// Stable or full translation quiver: degree-0 quiver plus the translation tau
// (defined exactly on non-projective vertices) and the mesh pairing sigma.
struct TranslationQuiver {
    GradedQuiver quiver;
    std::map<std::string, std::string> tau;            // vertex -> vertex
    std::map<std::string, std::string> sigma;          // arrow -> arrow
    std::map<std::string, Rat> mesh_coeff;             // arrow -> nonzero rational

    std::optional<std::string> tau_of(const std::string& v) const;
    std::optional<std::string> tau_inv(const std::string& v) const;
    Rat coeff(const std::string& arrow_id) const;      // defaults to 1

    // Restriction to the non-projective vertices, with tau and sigma restricted
    // to what survives. For a full Auslander-Reiten quiver this is the stable part.
    TranslationQuiver stable_part() const;

    bool operator==(const TranslationQuiver&) const = default;
};

struct Violation {
    std::string rule;
    std::string subject;  // vertex or arrow id
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string rule, std::string subject, std::string message) {
        ok = false;
        violations.push_back({std::move(rule), std::move(subject), std::move(message)});
    }
};

ValidationReport validate_graded_quiver(const GradedQuiver& q);
ValidationReport validate_translation_quiver(const TranslationQuiver& tq);

// JSON wire format (see README): {"vertices": [...], "arrows": [...],
// "tau": {...}, "sigma": {...}, "mesh_coeff": {...}}.
TranslationQuiver parse_quiver(const std::string& text);
std::string export_quiver(const GradedQuiver& q, const std::string& format);
std::string export_translation_quiver(const TranslationQuiver& tq, const std::string& format);

// Deterministic canonical relabeling. Quivers related by an isomorphism that
// commutes with tau, sigma and mesh coefficients map to the same value.
TranslationQuiver canonical_form(const TranslationQuiver& tq);

}  // namespace meshforge
