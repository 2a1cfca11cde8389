#pragma once

#include <map>

#include "meshforge/linalg.hpp"

namespace meshforge {

// Bounded cochain complex of finite-dimensional Q-vector spaces. components
// holds the dimensions on the (finite) support; differentials[j] is the
// matrix of d^j: C^j -> C^{j+1} (rows index C^{j+1}).
struct Complex {
    std::map<int, int> components;
    std::map<int, RatMatrix> differentials;

    int dim_at(int j) const {
        auto it = components.find(j);
        return it == components.end() ? 0 : it->second;
    }
    const RatMatrix* diff_at(int j) const {
        auto it = differentials.find(j);
        return it == differentials.end() ? nullptr : &it->second;
    }

    // Throws NotAComplex when shapes disagree or d^{j+1} d^j != 0.
    void check() const;

    std::string to_json() const;
};

std::map<int, int> cohomology_dims(const Complex& m);

enum class StdSide { leq, gt };
enum class BrutalSide { leq, geq };

Complex std_truncate(const Complex& m, int i, StdSide side);
Complex brutal_truncate(const Complex& m, int i, BrutalSide side);

}  // namespace meshforge
