#pragma once

#include <optional>
#include <tuple>

#include "meshforge/complexes.hpp"
#include "meshforge/dg_auslander.hpp"
#include "meshforge/fin_dim_algebra.hpp"
#include "meshforge/quiver.hpp"

namespace meshforge {

// Auslander algebra of a full translation quiver (projective vertices allowed):
// the path algebra modulo the mesh relations at every vertex with tau^{-1}
// defined. The truncated quotient is computed on demand.
struct AuslanderPresentation {
    TranslationQuiver full_tq;
    QuiverPtr quiver;                 // shared copy of full_tq.quiver (degree 0)
    RelationSet relations;            // mesh relations, indexed by vertex
    std::optional<FinDimAlgebra> algebra;
    std::vector<std::string> projective_vertices;  // e
    int d = 1;                        // almost-split depth
    // Middle steps 1..d of the resolution for d >= 2, per vertex (fixture data).
    std::map<std::string, std::vector<std::map<std::string, int>>> middle_terms;

    bool is_projective(const std::string& v) const;
};

// Combinatorial presentation (relations, e, tau) without the quotient algebra.
AuslanderPresentation auslander_presentation(const TranslationQuiver& full_tq, int d = 1);

// Presentation plus the truncated quotient algebra (stabilized flag surfaced).
AuslanderPresentation auslander_algebra(const TranslationQuiver& full_tq, int L_max);

// A/AeA: quotient by everything factoring through a projective vertex.
// Computed as the truncated quotient of the stable subquiver by the mesh
// relations with projective-visiting words dropped. Throws NotStabilized when
// the restricted quotient fails to stabilize by L_max.
FinDimAlgebra stable_algebra(const AuslanderPresentation& ap, int L_max = 16);

struct Resolution {
    std::string simple;                            // augmentation target S_i
    std::vector<std::map<std::string, int>> steps;  // l = 0..d+1: projective -> multiplicity
};

Resolution mesh_resolution(const AuslanderPresentation& ap, const std::string& vertex);

// Complex with C^l = multiplicity of P_j in step l and zero differentials
// (radical maps die under Hom into a simple).
Complex hom_into_simple(const Resolution& r, const std::string& j);

struct ExtTable {
    int d = 1;
    std::vector<std::string> vertices;             // non-projective
    std::map<std::string, std::string> pi;         // = tau_d
    std::map<std::tuple<int, std::string, std::string>, int> dims;

    int dim(int l, const std::string& i, const std::string& j) const {
        auto it = dims.find({l, i, j});
        return it == dims.end() ? 0 : it->second;
    }
};

ExtTable ext_table(const AuslanderPresentation& ap);

// D Ext^l(S_i, S_j) = Ext^{d+1-l}(S_j, S_{pi(i)}), checked entrywise.
bool cy_duality_check(const ExtTable& t);

// Unreduced Calabi-Yau fraction ((d+1) n_i) / n_i for the tau_d-orbit length n_i.
std::pair<int, int> cy_fraction(const TranslationQuiver& tq, const std::string& vertex, int d);

int k0_rank(const AuslanderPresentation& ap);

// Minimal projective resolution of the simple at a vertex over the algebra
// itself, by iterated projective covers; ext[(l, i, j)] = dim Ext^l(S_i, S_j).
struct ResolutionOverAlgebra {
    std::string simple;
    std::vector<std::map<std::string, int>> steps;  // l = 0..n
    std::map<std::tuple<int, std::string, std::string>, int> ext;

    int ext_dim(int l, const std::string& i, const std::string& j) const {
        auto it = ext.find({l, i, j});
        return it == ext.end() ? 0 : it->second;
    }
};

ResolutionOverAlgebra min_proj_resolution(const FinDimAlgebra& a, const std::string& vertex, int n);

}  // namespace meshforge
