#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "meshforge/quiver.hpp"

namespace meshforge {

namespace {

// Canonical labeling by individualization-refinement: refine a vertex
// coloring, branch over the members of the first non-singleton color class,
// and keep the lexicographically least encoding over all leaves. Branching is
// bounded by the (tiny) automorphism groups of the shipped families.

struct Searcher {
    const TranslationQuiver& tq;
    int n;
    std::vector<int> tau;                                  // vertex -> vertex or -1
    std::vector<int> tau_inv;                              // vertex -> vertex or -1
    std::vector<std::vector<std::pair<int, int>>> outs;    // v -> (tgt, arrow)
    std::vector<std::vector<std::pair<int, int>>> ins;     // v -> (src, arrow)

    std::string best;
    bool have_best = false;
    std::vector<int> best_order;

    explicit Searcher(const TranslationQuiver& q) : tq(q) {
        n = static_cast<int>(tq.quiver.vertices.size());
        tau.assign(n, -1);
        tau_inv.assign(n, -1);
        for (const auto& [from, to] : tq.tau) {
            int f = tq.quiver.vertex_index(from), t = tq.quiver.vertex_index(to);
            tau[f] = t;
            tau_inv[t] = f;
        }
        outs.resize(n);
        ins.resize(n);
        for (size_t ai = 0; ai < tq.quiver.arrows.size(); ++ai) {
            const auto& a = tq.quiver.arrows[ai];
            int s = tq.quiver.vertex_index(a.src), t = tq.quiver.vertex_index(a.tgt);
            outs[s].push_back({t, static_cast<int>(ai)});
            ins[t].push_back({s, static_cast<int>(ai)});
        }
    }

    std::vector<int> refine(std::vector<int> color) const {
        for (int round = 0; round < n + 1; ++round) {
            std::vector<std::string> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> o, i;
                for (auto [t, ai] : outs[v]) o.push_back(color[t] * 2 + tq.quiver.arrows[ai].degree);
                for (auto [s, ai] : ins[v]) i.push_back(color[s] * 2 + tq.quiver.arrows[ai].degree);
                std::sort(o.begin(), o.end());
                std::sort(i.begin(), i.end());
                std::ostringstream s;
                s << color[v] << '|' << tq.quiver.vertices[v].projective << '|';
                for (int x : o) s << x << ',';
                s << '|';
                for (int x : i) s << x << ',';
                s << '|' << (tau[v] >= 0 ? color[tau[v]] : -1)
                  << '|' << (tau_inv[v] >= 0 ? color[tau_inv[v]] : -1);
                sig[v] = s.str();
            }
            std::map<std::string, int> codes;
            for (int v = 0; v < n; ++v) codes.emplace(sig[v], 0);
            int next = 0;
            for (auto& [k, c] : codes) c = next++;
            std::vector<int> fresh(n);
            for (int v = 0; v < n; ++v) fresh[v] = codes[sig[v]];
            if (fresh == color) break;
            color = std::move(fresh);
        }
        return color;
    }

    // Sigma image ranks under an arrow order, the tie-breaking payload.
    std::string sigma_signature(const std::vector<int>& ids) const {
        std::vector<int> rank(ids.size(), 0);
        for (size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);
        std::ostringstream s;
        for (int ai : ids) {
            auto it = tq.sigma.find(tq.quiver.arrows[ai].id);
            s << (it != tq.sigma.end() ? rank[tq.quiver.arrow_index(it->second)] : -1) << ',';
        }
        return s.str();
    }

    // Arrow order under a vertex position map; parallel arrows refined by
    // sigma-partner rank, remaining ties resolved by trying every order
    // within a tied run and keeping the least sigma signature.
    std::vector<int> sorted_arrows(const std::vector<int>& pos) const {
        size_t m = tq.quiver.arrows.size();
        std::vector<int> ids(m);
        for (size_t i = 0; i < m; ++i) ids[i] = static_cast<int>(i);
        auto key = [&](int ai) {
            const auto& a = tq.quiver.arrows[ai];
            return std::tuple<int, int, int, std::string>(
                pos[tq.quiver.vertex_index(a.src)], pos[tq.quiver.vertex_index(a.tgt)], a.degree,
                rat_to_string(tq.coeff(a.id)));
        };
        std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) { return key(x) < key(y); });
        std::vector<int> rank(m, 0);
        for (size_t i = 0; i < m; ++i) rank[ids[i]] = static_cast<int>(i);
        std::vector<int> sigma_of(m, -1), sigma_inv(m, -1);
        for (const auto& [x, y] : tq.sigma) {
            int xi = tq.quiver.arrow_index(x), yi = tq.quiver.arrow_index(y);
            sigma_of[xi] = yi;
            sigma_inv[yi] = xi;
        }
        auto ext = [&](int ai) {
            return std::tuple(key(ai), sigma_of[ai] >= 0 ? rank[sigma_of[ai]] : -1,
                              sigma_inv[ai] >= 0 ? rank[sigma_inv[ai]] : -1);
        };
        for (int round = 0; round < 4; ++round) {
            std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) { return ext(x) < ext(y); });
            for (size_t i = 0; i < m; ++i) rank[ids[i]] = static_cast<int>(i);
        }

        // Runs still tied under ext carry automorphic parallel arrows.
        std::vector<std::pair<size_t, size_t>> runs;
        size_t total = 1;
        for (size_t i = 0; i < m;) {
            size_t j = i + 1;
            while (j < m && !(ext(ids[i]) < ext(ids[j]))) ++j;
            if (j - i > 1) {
                runs.push_back({i, j});
                for (size_t f = 2; f <= j - i; ++f) total *= f;
            }
            i = j;
        }
        if (runs.empty() || total > 5040) return ids;

        std::vector<int> best_ids = ids;
        std::string best_sig = sigma_signature(ids);
        std::vector<int> work = ids;
        std::function<void(size_t)> enumerate = [&](size_t r) {
            if (r == runs.size()) {
                std::string sig = sigma_signature(work);
                if (sig < best_sig) {
                    best_sig = sig;
                    best_ids = work;
                }
                return;
            }
            auto [lo, hi] = runs[r];
            std::vector<int> slice(work.begin() + lo, work.begin() + hi);
            std::sort(slice.begin(), slice.end());
            do {
                std::copy(slice.begin(), slice.end(), work.begin() + lo);
                enumerate(r + 1);
            } while (std::next_permutation(slice.begin(), slice.end()));
        };
        enumerate(0);
        return best_ids;
    }

    std::string encode(const std::vector<int>& order) const {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::vector<int> arrow_ids = sorted_arrows(pos);
        std::vector<int> rank(arrow_ids.size());
        for (size_t i = 0; i < arrow_ids.size(); ++i) rank[arrow_ids[i]] = static_cast<int>(i);
        std::ostringstream s;
        s << n << ';';
        for (int i = 0; i < n; ++i) s << tq.quiver.vertices[order[i]].projective;
        s << ';';
        for (int i = 0; i < n; ++i) s << (tau[order[i]] >= 0 ? pos[tau[order[i]]] : -1) << ',';
        s << ';';
        for (int ai : arrow_ids) {
            const auto& a = tq.quiver.arrows[ai];
            s << pos[tq.quiver.vertex_index(a.src)] << '>' << pos[tq.quiver.vertex_index(a.tgt)]
              << '@' << a.degree << '#' << rat_to_string(tq.coeff(a.id)) << ',';
        }
        s << ';';
        for (int ai : arrow_ids) {
            auto it = tq.sigma.find(tq.quiver.arrows[ai].id);
            s << (it != tq.sigma.end() ? rank[tq.quiver.arrow_index(it->second)] : -1) << ',';
        }
        return s.str();
    }

    void search(std::vector<int>& order, std::vector<int> color) {
        if (static_cast<int>(order.size()) == n) {
            std::string enc = encode(order);
            if (!have_best || enc < best) {
                best = std::move(enc);
                best_order = order;
                have_best = true;
            }
            return;
        }
        std::vector<bool> chosen(n, false);
        for (int v : order) chosen[v] = true;
        int cmin = -1;
        for (int v = 0; v < n; ++v)
            if (!chosen[v] && (cmin < 0 || color[v] < cmin)) cmin = color[v];
        for (int v = 0; v < n; ++v) {
            if (chosen[v] || color[v] != cmin) continue;
            order.push_back(v);
            // individualize: chosen vertices get pinned negative colors
            std::vector<int> next = color;
            for (size_t k = 0; k < order.size(); ++k)
                next[order[k]] = -(n + 1) + static_cast<int>(k);
            search(order, refine(std::move(next)));
            order.pop_back();
        }
    }
};

}  // namespace

TranslationQuiver canonical_form(const TranslationQuiver& tq) {
    Searcher s(tq);
    std::vector<int> order;
    if (s.n == 0) {
        TranslationQuiver empty;
        return empty;
    }
    s.search(order, s.refine(std::vector<int>(s.n, 0)));

    const std::vector<int>& ord = s.best_order;
    std::vector<int> pos(s.n);
    for (int i = 0; i < s.n; ++i) pos[ord[i]] = i;

    TranslationQuiver out;
    for (int i = 0; i < s.n; ++i)
        out.quiver.vertices.push_back({"v" + std::to_string(i), tq.quiver.vertices[ord[i]].projective});

    std::vector<int> arrow_ids = s.sorted_arrows(pos);
    std::map<std::string, std::string> arrow_rename;
    for (size_t i = 0; i < arrow_ids.size(); ++i) {
        const auto& a = tq.quiver.arrows[arrow_ids[i]];
        std::string nid = "e" + std::to_string(i);
        arrow_rename[a.id] = nid;
        out.quiver.arrows.push_back({nid, nid,
                                     "v" + std::to_string(pos[tq.quiver.vertex_index(a.src)]),
                                     "v" + std::to_string(pos[tq.quiver.vertex_index(a.tgt)]),
                                     a.degree});
    }
    for (const auto& [from, to] : tq.tau)
        out.tau["v" + std::to_string(pos[tq.quiver.vertex_index(from)])] =
            "v" + std::to_string(pos[tq.quiver.vertex_index(to)]);
    for (const auto& [a, b] : tq.sigma) out.sigma[arrow_rename[a]] = arrow_rename[b];
    for (const auto& [a, c] : tq.mesh_coeff)
        if (c != 1) out.mesh_coeff[arrow_rename[a]] = c;
    return out;
}

}  // namespace meshforge
