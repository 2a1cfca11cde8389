#include "meshforge/koszul.hpp"

#include <json.hpp>

#include "meshforge/errors.hpp"

namespace meshforge {

using nlohmann::json;

void AugmentedDgAlgebra::check() const {
    for (const auto& e : rad) {
        if (e.src < 0 || e.src >= static_cast<int>(vertex_ids.size()) || e.tgt < 0 ||
            e.tgt >= static_cast<int>(vertex_ids.size()))
            throw NotAugmented("radical element '" + e.label + "' off the vertex grid");
        if (e.degree > 0) throw NotAugmented("positive degree on '" + e.label + "'");
    }
    for (const auto& [key, terms] : mult) {
        const Elem& x = rad.at(key.first);
        const Elem& y = rad.at(key.second);
        if (y.tgt != x.src) throw NotAugmented("product of non-composable radical elements");
        for (const auto& [r, c] : terms) {
            const Elem& z = rad.at(r);
            if (z.src != y.src || z.tgt != x.tgt || z.degree != x.degree + y.degree)
                throw NotAugmented("product of '" + x.label + "' and '" + y.label + "' malformed");
        }
    }
    for (const auto& [k, terms] : diff) {
        const Elem& x = rad.at(k);
        for (const auto& [r, c] : terms) {
            const Elem& z = rad.at(r);
            if (z.src != x.src || z.tgt != x.tgt || z.degree != x.degree + 1)
                throw NotAugmented("differential of '" + x.label + "' malformed");
        }
    }
}

std::string AugmentedDgAlgebra::to_json() const {
    json j;
    j["vertices"] = vertex_ids;
    json jr = json::array();
    for (const auto& e : rad)
        jr.push_back({{"label", e.label},
                      {"src", vertex_ids[e.src]},
                      {"tgt", vertex_ids[e.tgt]},
                      {"degree", e.degree}});
    j["rad"] = jr;
    json jm = json::array();
    for (const auto& [key, terms] : mult) {
        json t = json::array();
        for (const auto& [r, c] : terms) t.push_back({r, rat_to_string(c)});
        jm.push_back({{"l", key.first}, {"r", key.second}, {"terms", t}});
    }
    j["mult"] = jm;
    json jd = json::object();
    for (const auto& [k, terms] : diff) {
        json t = json::array();
        for (const auto& [r, c] : terms) t.push_back({r, rat_to_string(c)});
        jd[std::to_string(k)] = t;
    }
    j["diff"] = jd;
    return j.dump(2) + "\n";
}

AugmentedDgAlgebra AugmentedDgAlgebra::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SyntaxError(e.what());
    }
    AugmentedDgAlgebra a;
    try {
        a.vertex_ids = j.at("vertices").get<std::vector<std::string>>();
        auto vpos = [&](const std::string& id) {
            for (size_t i = 0; i < a.vertex_ids.size(); ++i)
                if (a.vertex_ids[i] == id) return static_cast<int>(i);
            throw NotAugmented("undeclared vertex '" + id + "'");
        };
        for (const auto& je : j.at("rad")) {
            Elem e;
            e.label = je.at("label").get<std::string>();
            e.src = vpos(je.at("src").get<std::string>());
            e.tgt = vpos(je.at("tgt").get<std::string>());
            e.degree = je.value("degree", 0);
            a.rad.push_back(std::move(e));
        }
        for (const auto& jm : j.value("mult", json::array())) {
            std::vector<std::pair<int, Rat>> terms;
            for (const auto& t : jm.at("terms"))
                terms.emplace_back(t.at(0).get<int>(), rat_from_string(t.at(1).get<std::string>()));
            a.mult[{jm.at("l").get<int>(), jm.at("r").get<int>()}] = std::move(terms);
        }
        if (j.contains("diff"))
            for (const auto& [k, jt] : j.at("diff").items()) {
                std::vector<std::pair<int, Rat>> terms;
                for (const auto& t : jt)
                    terms.emplace_back(t.at(0).get<int>(), rat_from_string(t.at(1).get<std::string>()));
                a.diff[std::stoi(k)] = std::move(terms);
            }
    } catch (const json::exception& e) {
        throw SyntaxError(e.what());
    }
    a.check();
    return a;
}

AugmentedDgAlgebra augment(const FinDimAlgebra& alg) {
    AugmentedDgAlgebra a;
    a.vertex_ids = alg.vertex_ids;
    for (size_t v = 0; v < alg.vertex_ids.size(); ++v)
        if (v >= alg.idempotent.size() || alg.idempotent[v] < 0)
            throw NotAugmented("no idempotent at vertex '" + alg.vertex_ids[v] + "'");
    std::vector<int> rad_index(alg.basis.size(), -1);
    for (int b = 0; b < alg.dim(); ++b) {
        if (alg.basis[b].length == 0) continue;
        rad_index[b] = static_cast<int>(a.rad.size());
        a.rad.push_back({alg.basis[b].label, alg.basis[b].src, alg.basis[b].tgt, 0});
    }
    for (const auto& [key, terms] : alg.mult) {
        int i = rad_index[key.first], j = rad_index[key.second];
        if (i < 0 || j < 0) continue;  // products with idempotents
        std::vector<std::pair<int, Rat>> nt;
        for (const auto& [b, c] : terms) {
            if (rad_index[b] < 0) throw NotAugmented("radical product with a unit component");
            nt.emplace_back(rad_index[b], c);
        }
        if (!nt.empty()) a.mult[{i, j}] = std::move(nt);
    }
    a.check();
    return a;
}

namespace {

// Composable bar words of length <= bound; letters[k] applied after
// letters[k+1] (word reads as a right-to-left product).
std::vector<std::vector<BarWord>> bar_words(const AugmentedDgAlgebra& a, int bound) {
    std::vector<std::vector<BarWord>> by_len(bound + 1);
    by_len[0].push_back({});  // formal empty word (unused in matrices)
    for (int r = 0; r < static_cast<int>(a.rad.size()); ++r) by_len[1].push_back({{r}});
    for (int len = 2; len <= bound; ++len)
        for (const auto& w : by_len[len - 1])
            for (int r = 0; r < static_cast<int>(a.rad.size()); ++r)
                if (a.rad[w.letters.back()].src == a.rad[r].tgt) {
                    BarWord ext = w;
                    ext.letters.push_back(r);
                    by_len[len].push_back(std::move(ext));
                }
    return by_len;
}

int shifted_degree(const AugmentedDgAlgebra& a, const BarWord& w) {
    int d = 0;
    for (int r : w.letters) d += a.rad[r].degree - 1;
    return d;
}

// Bar coderivation on a word; degree +1 with Koszul signs past shifted letters:
//   b_1 slot k:   (-1)^{eps_k + 1} * (coefficient of the replacement)
//   b_2 slots k,k+1: (-1)^{eps_k + deg(a_k)} * (coefficient of the product)
// where eps_k = sum_{j < k} (deg(a_j) - 1). The d^2 = 0 suite pins these signs.
std::vector<std::pair<BarWord, Rat>> bar_diff(const AugmentedDgAlgebra& a, const BarWord& w) {
    std::vector<std::pair<BarWord, Rat>> out;
    int n = static_cast<int>(w.letters.size());
    int eps = 0;
    for (int k = 0; k < n; ++k) {
        int sign_b1 = ((eps + 1) % 2 == 0) ? 1 : -1;
        auto dit = a.diff.find(w.letters[k]);
        if (dit != a.diff.end())
            for (const auto& [r, c] : dit->second) {
                BarWord nw = w;
                nw.letters[k] = r;
                out.push_back({std::move(nw), c * sign_b1});
            }
        if (k + 1 < n) {
            int deg_k = a.rad[w.letters[k]].degree;
            int sign_b2 = ((eps + deg_k) % 2 == 0) ? 1 : -1;
            auto mit = a.mult.find({w.letters[k], w.letters[k + 1]});
            if (mit != a.mult.end())
                for (const auto& [r, c] : mit->second) {
                    BarWord nw;
                    nw.letters.reserve(n - 1);
                    nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.begin() + k);
                    nw.letters.push_back(r);
                    nw.letters.insert(nw.letters.end(), w.letters.begin() + k + 2, w.letters.end());
                    out.push_back({std::move(nw), c * sign_b2});
                }
        }
        eps += a.rad[w.letters[k]].degree - 1;
    }
    return out;
}

}  // namespace

KoszulPresentation koszul_dual(const AugmentedDgAlgebra& a, int word_bound) {
    a.check();
    if (word_bound < 2) throw Error("koszul_dual needs W >= 2");
    KoszulPresentation e;
    e.base = a;
    e.word_bound = word_bound;
    // d(xi_c) pairs xi_c against b_1 and b_2: collect, for each generator c,
    // the bar words of length 1 and 2 whose bar differential hits [c].
    for (int r = 0; r < static_cast<int>(a.rad.size()); ++r) {
        BarWord single{{r}};
        for (const auto& [nw, c] : bar_diff(a, single))
            if (nw.letters.size() == 1) e.diff[nw.letters[0]].push_back({single, c});
    }
    for (int x = 0; x < static_cast<int>(a.rad.size()); ++x)
        for (int y = 0; y < static_cast<int>(a.rad.size()); ++y) {
            if (a.rad[x].src != a.rad[y].tgt) continue;
            BarWord pair{{x, y}};
            for (const auto& [nw, c] : bar_diff(a, pair))
                if (nw.letters.size() == 1) e.diff[nw.letters[0]].push_back({pair, c});
        }
    return e;
}

bool koszul_d_squared(const AugmentedDgAlgebra& a, int word_bound) {
    auto words = bar_words(a, word_bound);
    for (int len = 1; len <= word_bound; ++len)
        for (const auto& w : words[len]) {
            std::map<BarWord, Rat> acc;
            for (const auto& [w1, c1] : bar_diff(a, w))
                for (const auto& [w2, c2] : bar_diff(a, w1)) {
                    acc[w2] += c1 * c2;
                }
            for (const auto& [w2, c] : acc)
                if (c != 0) return false;
        }
    return true;
}

KoszulCohomology koszul_cohomology(const KoszulPresentation& e, int deg_lo, int deg_hi) {
    const AugmentedDgAlgebra& a = e.base;
    if (deg_lo < 0 || deg_hi >= e.word_bound || deg_lo > deg_hi)
        throw Error("degrees must lie in [0, W-1]");

    // Since every letter has degree <= 0, a word of E-degree n has length
    // <= n; degrees <= deg_hi only need bar lengths <= deg_hi + 1.
    auto run = [&](int max_len) {
        // E-degree of a word = -shifted bar degree; block = (src, tgt) of the
        // underlying path, contributing to Ext(S_src, S_tgt).
        std::map<std::tuple<int, int, int>, std::vector<BarWord>> buckets;  // (n, src, tgt)
        std::map<BarWord, int> pos;
        auto words = bar_words(a, max_len);
        for (int len = 1; len <= max_len; ++len)
            for (const auto& w : words[len]) {
                int n = -shifted_degree(a, w);
                int src = a.rad[w.letters.back()].src;
                int tgt = a.rad[w.letters.front()].tgt;
                auto& bucket = buckets[{n, src, tgt}];
                pos[w] = static_cast<int>(bucket.size());
                bucket.push_back(w);
            }
        // Bar differential drops E-degree by 1 within a block; assemble the
        // two matrices around each requested degree on the bar side.
        std::map<std::tuple<int, int, int>, int> dims;
        for (const auto& [key, bucket] : buckets) {
            auto [n, src, tgt] = key;
            if (n < deg_lo || n > deg_hi) continue;
            // d_E into degree n+1 is the transpose of d_B out of E-degree n+1.
            auto rank_from = [&](int from_deg) {
                auto it = buckets.find({from_deg, src, tgt});
                if (it == buckets.end()) return 0;
                auto jt = buckets.find({from_deg - 1, src, tgt});
                size_t rows = jt == buckets.end() ? 0 : jt->second.size();
                RatMatrix m(rows, it->second.size());
                bool nonzero = false;
                for (size_t c = 0; c < it->second.size(); ++c)
                    for (const auto& [nw, coef] : bar_diff(a, it->second[c])) {
                        auto pit = pos.find(nw);
                        if (pit == pos.end()) continue;
                        if (-shifted_degree(a, nw) != from_deg - 1) continue;
                        m.at(pit->second, c) = coef;
                        nonzero = true;
                    }
                return nonzero ? static_cast<int>(m.rank()) : 0;
            };
            int dim_n = static_cast<int>(bucket.size());
            int h = dim_n - rank_from(n) - rank_from(n + 1);
            if (h != 0) dims[key] = h;
        }
        return dims;
    };

    int cap_now = std::min(e.word_bound, deg_hi + 1);
    int cap_prev = std::min(e.word_bound - 1, deg_hi + 1);
    auto now = run(cap_now);
    auto prev = run(cap_prev);

    KoszulCohomology out;
    for (int n = deg_lo; n <= deg_hi; ++n) {
        out.totals[n] = 0;
        out.stabilized[n] = true;
    }
    // K itself contributes Ext^0(S_i, S_i) = k at every vertex.
    if (deg_lo == 0)
        for (const auto& v : a.vertex_ids) {
            out.dims[{0, v, v}] += 1;
            out.totals[0] += 1;
        }
    for (const auto& [key, h] : now) {
        auto [n, src, tgt] = key;
        out.dims[{n, a.vertex_ids[src], a.vertex_ids[tgt]}] += h;
        out.totals[n] += h;
    }
    for (int n = deg_lo; n <= deg_hi; ++n) {
        for (const auto& [key, h] : now) {
            auto [m, src, tgt] = key;
            if (m != n) continue;
            auto it = prev.find(key);
            if (it == prev.end() || it->second != h) out.stabilized[n] = false;
        }
        for (const auto& [key, h] : prev) {
            auto [m, src, tgt] = key;
            if (m == n && !now.count(key)) out.stabilized[n] = false;
        }
    }
    return out;
}

}  // namespace meshforge
