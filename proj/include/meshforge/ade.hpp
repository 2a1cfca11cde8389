#pragma once

#include <utility>

#include "meshforge/quiver.hpp"

namespace meshforge {

// Stable translation quiver of the ADE family member, keyed on the parity of
// krull_dim. family is 'A', 'D' or 'E'; valid indices: A n>=1, D n>=4, E 6..8.
TranslationQuiver ade_translation_quiver(char family, int index, int krull_dim);

// (vertex count, solid arrow count) for the generator above.
std::pair<int, int> ade_expected_counts(char family, int index, int krull_dim);

// Full Auslander-Reiten quivers (projective vertex included) for the shipped
// fixtures, named by singularity type and Krull dimension.

// A_1 in dimension 0: vertices 1 (projective), 2; arrows p: 1->2, i: 2->1.
TranslationQuiver full_fixture_a1_dim0();

// A_1 in dimension 3 (the conifold): vertices +, * (projective), -.
TranslationQuiver full_fixture_conifold();

// A_n in dimension 0: doubled chain 1..n+1 with vertex n+1 projective.
TranslationQuiver full_fixture_a_dim0(int n);

// A_1 in dimension 2: Kronecker-shaped, non-stabilizing quotient.
TranslationQuiver full_fixture_a1_dim2();

}  // namespace meshforge
