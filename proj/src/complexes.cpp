#include "meshforge/complexes.hpp"

#include <json.hpp>

#include "meshforge/errors.hpp"

namespace meshforge {

using nlohmann::json;

void Complex::check() const {
    for (const auto& [j, d] : differentials) {
        if (static_cast<int>(d.cols()) != dim_at(j) || static_cast<int>(d.rows()) != dim_at(j + 1))
            throw NotAComplex("differential at degree " + std::to_string(j) + " has wrong shape");
        const RatMatrix* next = diff_at(j + 1);
        if (next && !next->multiply(d).is_zero())
            throw NotAComplex("d^2 != 0 at degree " + std::to_string(j));
    }
}

std::string Complex::to_json() const {
    json jc = json::object(), jd = json::object();
    for (const auto& [deg, dim] : components)
        if (dim != 0) jc[std::to_string(deg)] = dim;
    for (const auto& [deg, d] : differentials) {
        json rows = json::array();
        for (size_t i = 0; i < d.rows(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < d.cols(); ++j) row.push_back(rat_to_string(d.at(i, j)));
            rows.push_back(row);
        }
        jd[std::to_string(deg)] = rows;
    }
    return json{{"components", jc}, {"differentials", jd}}.dump(2) + "\n";
}

std::map<int, int> cohomology_dims(const Complex& m) {
    m.check();
    std::map<int, int> h;
    for (const auto& [j, dim] : m.components) {
        if (dim == 0) continue;
        const RatMatrix* dj = m.diff_at(j);
        const RatMatrix* dprev = m.diff_at(j - 1);
        int ker = dim - static_cast<int>(dj ? dj->rank() : 0);
        int im = static_cast<int>(dprev ? dprev->rank() : 0);
        int hj = ker - im;
        if (hj != 0) h[j] = hj;
    }
    return h;
}

namespace {

// Basis of the column space, as columns.
RatMatrix image_basis(const RatMatrix& d) {
    RowEchelon ech;
    std::vector<SparseVec> cols;
    for (size_t c = 0; c < d.cols(); ++c) {
        SparseVec v;
        for (size_t r = 0; r < d.rows(); ++r)
            if (d.at(r, c) != 0) v.emplace_back(static_cast<int>(r), d.at(r, c));
        SparseVec row = ech.insert(std::move(v));
        if (!row.empty()) cols.push_back(std::move(row));
    }
    RatMatrix out(d.rows(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, x] : cols[c]) out.at(r, c) = x;
    return out;
}

}  // namespace

Complex std_truncate(const Complex& m, int i, StdSide side) {
    m.check();
    Complex out;
    if (side == StdSide::leq) {
        for (const auto& [j, dim] : m.components)
            if (j < i && dim != 0) out.components[j] = dim;
        for (const auto& [j, d] : m.differentials)
            if (j + 1 < i) out.differentials[j] = d;
        const RatMatrix* di = m.diff_at(i);
        int keri = m.dim_at(i) - static_cast<int>(di ? di->rank() : 0);
        if (keri != 0) out.components[i] = keri;
        const RatMatrix* dprev = m.diff_at(i - 1);
        if (dprev && keri != 0 && m.dim_at(i - 1) != 0) {
            if (!di) {
                out.differentials[i - 1] = *dprev;
            } else {
                // express d^{i-1} in a kernel basis of d^i
                RatMatrix k = di->kernel_basis();
                RatMatrix t(keri, m.dim_at(i - 1));
                for (size_t c = 0; c < dprev->cols(); ++c) {
                    std::vector<Rat> b(dprev->rows());
                    for (size_t r = 0; r < dprev->rows(); ++r) b[r] = dprev->at(r, c);
                    std::vector<Rat> x = solve_in_span(k, b);
                    for (size_t r = 0; r < x.size(); ++r) t.at(r, c) = x[r];
                }
                out.differentials[i - 1] = std::move(t);
            }
        }
        return out;
    }
    // sigma^{> i}: degree i component is C^i / ker d^i, embedded via im d^i.
    for (const auto& [j, dim] : m.components)
        if (j > i && dim != 0) out.components[j] = dim;
    for (const auto& [j, d] : m.differentials)
        if (j > i) out.differentials[j] = d;
    const RatMatrix* di = m.diff_at(i);
    int ranki = static_cast<int>(di ? di->rank() : 0);
    if (ranki != 0) {
        out.components[i] = ranki;
        out.differentials[i] = image_basis(*di);  // (C^i/ker) -> C^{i+1}
    }
    return out;
}

Complex brutal_truncate(const Complex& m, int i, BrutalSide side) {
    m.check();
    Complex out;
    auto keep = [&](int j) { return side == BrutalSide::leq ? j <= i : j >= i; };
    for (const auto& [j, dim] : m.components)
        if (keep(j) && dim != 0) out.components[j] = dim;
    for (const auto& [j, d] : m.differentials)
        if (keep(j) && keep(j + 1)) out.differentials[j] = d;
    return out;
}

}  // namespace meshforge
