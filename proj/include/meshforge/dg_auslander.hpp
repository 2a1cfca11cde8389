#pragma once

#include <map>
#include <string>
#include <vector>

#include "meshforge/fin_dim_algebra.hpp"
#include "meshforge/quiver.hpp"

namespace meshforge {

// Graded quiver in degrees 0 and -1 together with the differential images of
// the degree -1 generators. Degree-0 generators map to 0.
struct DgPresentation {
    QuiverPtr quiver;
    std::map<std::string, TruncatedElement> diff;  // dashed arrow id -> degree-0 element
    int bound = 0;

    // Structural invariants: degrees in {0, -1}, diff defined exactly on the
    // dashed arrows, each image of degree 0 with matching endpoints.
    void check_shape() const;

    GradedQuiver degree0_subquiver() const;

    std::string to_json() const;
    static DgPresentation from_json(const std::string& text, int bound);
};

// Mesh relation at a vertex: sum over degree-0 arrows a: i -> m of
// coeff(a) * sigma(a) * a, a combination of length-2 paths i -> tau^{-1}(i).
TruncatedElement mesh_relation(const TranslationQuiver& tq, const std::string& vertex, int bound = 2);

// dg Auslander presentation of a stable translation quiver: degree-0 part is
// the quiver itself, one dashed arrow rho_i: i -> tau^{-1}(i) per vertex, and
// diff(rho_i) the mesh relation at i.
DgPresentation dg_auslander(const TranslationQuiver& tq, int bound);

// Unique degree-1 extension of diff by the graded Leibniz rule
// d(xy) = d(x) y + (-1)^{|x|} x d(y).
TruncatedElement apply_differential(const DgPresentation& dg, const TruncatedElement& x);

bool check_d_squared(const DgPresentation& dg);

// H^0 = truncated quotient of the degree-0 subquiver by the nonzero
// differential images.
FinDimAlgebra h0(const DgPresentation& dg, int L_max, int window = 2);

struct DgCohomologyEntry {
    int dim = 0;
    bool stabilized = false;  // dim agreed with the L-1 run
};

// Cohomology of the word-length-truncated completed path algebra in the given
// (non-positive) degree window.
std::map<int, DgCohomologyEntry> dg_cohomology_dims(const DgPresentation& dg, int deg_lo,
                                                    int deg_hi, int bound);

struct GammaPadding {
    TruncatedElement left;   // p
    std::string rho_vertex;  // j
    TruncatedElement right;  // q
};

struct GammaPerturbation {
    std::string vertex;  // i
    Rat scale = 1;       // c_i, nonzero
    std::vector<GammaPadding> paddings;
};

// diff'(rho_i) = c_i diff(rho_i) + sum of p * diff(rho_j) * q. The result is
// dg-isomorphic to the input, so all dimension invariants must coincide.
DgPresentation perturb_gamma(const DgPresentation& dg, const std::vector<GammaPerturbation>& spec);

}  // namespace meshforge
