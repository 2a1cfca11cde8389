#include "meshforge/ade.hpp"

#include <map>
#include <string>
#include <vector>

namespace meshforge {

namespace {

std::string num(int v) { return std::to_string(v); }

void add_vertex(TranslationQuiver& tq, const std::string& id, bool projective = false) {
    tq.quiver.vertices.push_back({id, projective});
}

void add_arrow(TranslationQuiver& tq, const std::string& id, const std::string& src,
               const std::string& tgt, int degree = 0) {
    tq.quiver.arrows.push_back({id, id, src, tgt, degree});
}

// sigma is determined whenever no two arrows share (src, tgt): for each arrow
// a out of a vertex with tau^{-1} defined, its mesh partner is the unique
// arrow tgt(a) -> tau^{-1}(src(a)). Generators below have no parallel arrows;
// fixtures with parallel arrows set sigma explicitly.
void infer_sigma(TranslationQuiver& tq) {
    std::map<std::string, std::string> tau_inv;
    for (const auto& [from, to] : tq.tau) tau_inv[to] = from;
    for (const auto& a : tq.quiver.arrows) {
        if (a.degree != 0 || !tau_inv.count(a.src)) continue;
        const std::string& target = tau_inv[a.src];
        const Arrow* partner = nullptr;
        for (const auto& b : tq.quiver.arrows) {
            if (b.degree != 0 || b.src != a.tgt || b.tgt != target) continue;
            if (partner) throw Error("infer_sigma: parallel arrows at '" + a.id + "'");
            partner = &b;
        }
        if (!partner) throw Error("infer_sigma: no mesh partner for '" + a.id + "'");
        tq.sigma[a.id] = partner->id;
    }
}

// Dynkin edge lists, smaller endpoint first; the arrow pair of edge {i,j} is
// named a<i>: i->j and a<i>*: j->i.
std::vector<std::pair<int, int>> dynkin_edges(char family, int n) {
    std::vector<std::pair<int, int>> edges;
    if (family == 'A') {
        for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    } else if (family == 'D') {
        edges.push_back({1, 3});
        edges.push_back({2, 3});
        for (int i = 3; i < n; ++i) edges.push_back({i, i + 1});
    } else {
        edges.push_back({1, 4});
        edges.push_back({2, 3});
        for (int i = 3; i < n; ++i) edges.push_back({i, i + 1});
    }
    return edges;
}

TranslationQuiver even_ade(char family, int n) {
    TranslationQuiver tq;
    for (int v = 1; v <= n; ++v) add_vertex(tq, num(v));
    for (auto [i, j] : dynkin_edges(family, n)) {
        add_arrow(tq, "a" + num(i), num(i), num(j));
        add_arrow(tq, "a" + num(i) + "*", num(j), num(i));
    }
    for (int v = 1; v <= n; ++v) tq.tau[num(v)] = num(v);
    infer_sigma(tq);
    return tq;
}

TranslationQuiver odd_a(int n) {
    TranslationQuiver tq;
    if (n == 1) {
        add_vertex(tq, "1");
        add_vertex(tq, "2");
        tq.tau["1"] = "2";
        tq.tau["2"] = "1";
        return tq;
    }
    if (n % 2 == 0) {
        // (A_{2m}): doubled chain on 1..m with a solid loop g at m.
        int m = n / 2;
        for (int v = 1; v <= m; ++v) add_vertex(tq, num(v));
        for (int i = 1; i < m; ++i) {
            add_arrow(tq, "a" + num(i), num(i), num(i + 1));
            add_arrow(tq, "a" + num(i) + "*", num(i + 1), num(i));
        }
        add_arrow(tq, "g", num(m), num(m));
        for (int v = 1; v <= m; ++v) tq.tau[num(v)] = num(v);
        infer_sigma(tq);
        return tq;
    }
    // (A_{2m-1}), m >= 2: fork 1, 2 into 3, doubled chain 3..m+1; tau = (1 2).
    int m = (n + 1) / 2;
    for (int v = 1; v <= m + 1; ++v) add_vertex(tq, num(v));
    add_arrow(tq, "a1", "1", "3");
    add_arrow(tq, "a1*", "3", "1");
    add_arrow(tq, "a2", "2", "3");
    add_arrow(tq, "a2*", "3", "2");
    for (int j = 3; j <= m; ++j) {
        add_arrow(tq, "a" + num(j), num(j), num(j + 1));
        add_arrow(tq, "a" + num(j) + "*", num(j + 1), num(j));
    }
    tq.tau["1"] = "2";
    tq.tau["2"] = "1";
    for (int v = 3; v <= m + 1; ++v) tq.tau[num(v)] = num(v);
    infer_sigma(tq);
    return tq;
}

int pair_of(int v) { return v ^ 1; }  // column partner 2k <-> 2k+1

TranslationQuiver odd_d(int n) {
    TranslationQuiver tq;
    if (n % 2 == 1) {
        // (D_{2m+1}): two rows 0,2,..,4m-4 / 1,3,..,4m-3 plus tail 4m-2.
        int m = (n - 1) / 2;
        int tail = 4 * m - 2;
        for (int v = 0; v <= tail; ++v) add_vertex(tq, num(v));
        for (int w = 0; w <= 4 * m - 5; ++w) {
            add_arrow(tq, "a" + num(w), num(w), num(w + 2));
            add_arrow(tq, "a" + num(w) + "*", num(pair_of(w + 2)), num(w));
        }
        add_arrow(tq, "a" + num(4 * m - 4), num(tail), num(4 * m - 4));
        add_arrow(tq, "a" + num(4 * m - 4) + "*", num(4 * m - 4), num(tail));
        add_arrow(tq, "a" + num(4 * m - 3), num(4 * m - 3), num(tail));
        add_arrow(tq, "a" + num(4 * m - 3) + "*", num(tail), num(4 * m - 3));
        for (int v = 0; v < tail; ++v) tq.tau[num(v)] = num(pair_of(v));
        tq.tau[num(tail)] = num(tail);
        infer_sigma(tq);
        return tq;
    }
    // (D_{2m}): two rows 0,2,..,4m-6 / 1,3,..,4m-5 plus two tail pairs
    // {4m-4, 4m-3} and {4m-2, 4m-1} attached to the chain ends 4m-6, 4m-5.
    int m = n / 2;
    int c1 = 4 * m - 6, c2 = 4 * m - 5;
    int u1 = 4 * m - 4, u2 = 4 * m - 3, w1 = 4 * m - 2, w2 = 4 * m - 1;
    for (int v = 0; v <= w2; ++v) add_vertex(tq, num(v));
    for (int w = 0; w <= 4 * m - 7; ++w) {
        add_arrow(tq, "a" + num(w), num(w), num(w + 2));
        add_arrow(tq, "a" + num(w) + "*", num(pair_of(w + 2)), num(w));
    }
    add_arrow(tq, "a" + num(u1), num(u1), num(c1));
    add_arrow(tq, "a" + num(u1) + "*", num(c2), num(u1));
    add_arrow(tq, "a" + num(c1), num(c1), num(u2));
    add_arrow(tq, "a" + num(u2), num(u2), num(c2));
    add_arrow(tq, "a" + num(c2), num(c2), num(w1));
    add_arrow(tq, "a" + num(w1), num(w1), num(c1));
    add_arrow(tq, "a" + num(w2), num(w2), num(c2));
    add_arrow(tq, "a" + num(w2) + "*", num(c1), num(w2));
    for (int v = 0; v <= w2; ++v) tq.tau[num(v)] = num(pair_of(v));
    infer_sigma(tq);
    return tq;
}

TranslationQuiver odd_e(int n) {
    TranslationQuiver tq;
    if (n == 6) {
        for (int v = 1; v <= 6; ++v) add_vertex(tq, num(v));
        add_arrow(tq, "a1", "1", "4");
        add_arrow(tq, "a1*", "3", "1");
        add_arrow(tq, "a2", "2", "3");
        add_arrow(tq, "a2*", "4", "2");
        add_arrow(tq, "a3", "3", "5");
        add_arrow(tq, "a3*", "5", "3");
        add_arrow(tq, "a4", "4", "5");
        add_arrow(tq, "a4*", "5", "4");
        add_arrow(tq, "a5", "5", "6");
        add_arrow(tq, "a5*", "6", "5");
        tq.tau = {{"1", "2"}, {"2", "1"}, {"3", "4"}, {"4", "3"}, {"5", "5"}, {"6", "6"}};
        infer_sigma(tq);
        return tq;
    }
    // E_7 and E_8 share the shape: two rows of transposed pairs plus a two-
    // vertex tail attached to the pair (t-1, t) two columns from the end.
    int rows = (n == 7) ? 12 : 14;  // vertices 1..rows in two rows
    int b1 = rows + 1, b2 = rows + 2;
    for (int v = 1; v <= b2; ++v) add_vertex(tq, num(v));
    for (int k = 1; k + 2 <= rows; k += 2) {
        // top row: odd vertices k, k+2; bottom row: even vertices k+1, k+3
        add_arrow(tq, "a" + num(k) + "*", num(k + 2), num(k));
        add_arrow(tq, "a" + num(k + 1) + "*", num(k + 3), num(k + 1));
        add_arrow(tq, "a" + num(k), num(k), num(k + 3));
        add_arrow(tq, "a" + num(k + 1), num(k + 1), num(k + 2));
    }
    // Tail pair attachment: 5/6 for E_7, 9/10 for E_8.
    int top = (n == 7) ? 5 : 9;
    int bot = top + 1;
    add_arrow(tq, "a" + num(b1), num(b1), num(bot));
    add_arrow(tq, "a" + num(b1) + "*", num(top), num(b1));
    add_arrow(tq, "a" + num(b2), num(b2), num(top));
    add_arrow(tq, "a" + num(b2) + "*", num(bot), num(b2));
    for (int k = 1; k <= rows; k += 2) {
        tq.tau[num(k)] = num(k + 1);
        tq.tau[num(k + 1)] = num(k);
    }
    tq.tau[num(b1)] = num(b2);
    tq.tau[num(b2)] = num(b1);
    infer_sigma(tq);
    return tq;
}

}  // namespace

TranslationQuiver ade_translation_quiver(char family, int index, int krull_dim) {
    if (krull_dim < 0) throw InvalidDynkinIndex("krull_dim must be non-negative");
    bool even = (krull_dim % 2 == 0);
    switch (family) {
        case 'A':
            if (index < 1) throw InvalidDynkinIndex("A_n needs n >= 1");
            return even ? even_ade('A', index) : odd_a(index);
        case 'D':
            if (index < 4) throw InvalidDynkinIndex("D_n needs n >= 4");
            return even ? even_ade('D', index) : odd_d(index);
        case 'E':
            if (index < 6 || index > 8) throw InvalidDynkinIndex("E_n needs n in {6,7,8}");
            return even ? even_ade('E', index) : odd_e(index);
        default:
            throw InvalidDynkinIndex(std::string("unknown family '") + family + "'");
    }
}

std::pair<int, int> ade_expected_counts(char family, int index, int krull_dim) {
    bool even = (krull_dim % 2 == 0);
    int n = index;
    if (even) return {n, 2 * (n - 1)};
    if (family == 'A') {
        if (n == 1) return {2, 0};
        if (n % 2 == 0) return {n / 2, n - 1};   // A_{2m}: m vertices, 2(m-1)+1
        return {(n + 1) / 2 + 1, n + 1};         // A_{2m-1}: m+1 vertices, 2m
    }
    if (family == 'D') {
        if (n % 2 == 1) return {2 * n - 3, 4 * n - 8};  // D_{2m+1}: 4m-1, 8m-4
        return {2 * n, 4 * n - 4};                      // D_{2m}: 4m, 8m-4
    }
    if (n == 6) return {6, 10};
    if (n == 7) return {14, 24};
    return {16, 28};
}

TranslationQuiver full_fixture_a1_dim0() {
    TranslationQuiver tq;
    add_vertex(tq, "1", true);
    add_vertex(tq, "2");
    add_arrow(tq, "p", "1", "2");
    add_arrow(tq, "i", "2", "1");
    tq.tau["2"] = "2";
    tq.sigma["i"] = "p";
    return tq;
}

TranslationQuiver full_fixture_conifold() {
    TranslationQuiver tq;
    add_vertex(tq, "+");
    add_vertex(tq, "*", true);
    add_vertex(tq, "-");
    add_arrow(tq, "a1", "+", "*");
    add_arrow(tq, "a2", "+", "*");
    add_arrow(tq, "b1", "*", "+");
    add_arrow(tq, "b2", "*", "+");
    add_arrow(tq, "c1", "*", "-");
    add_arrow(tq, "c2", "*", "-");
    add_arrow(tq, "d1", "-", "*");
    add_arrow(tq, "d2", "-", "*");
    tq.tau["+"] = "-";
    tq.tau["-"] = "+";
    tq.sigma["a1"] = "c1";
    tq.sigma["a2"] = "c2";
    tq.sigma["d1"] = "b1";
    tq.sigma["d2"] = "b2";
    return tq;
}

TranslationQuiver full_fixture_a_dim0(int n) {
    if (n < 1) throw InvalidDynkinIndex("A_n needs n >= 1");
    TranslationQuiver tq;
    for (int v = 1; v <= n + 1; ++v) add_vertex(tq, num(v), v == n + 1);
    for (int i = 1; i <= n; ++i) {
        add_arrow(tq, "a" + num(i), num(i), num(i + 1));
        add_arrow(tq, "a" + num(i) + "*", num(i + 1), num(i));
    }
    for (int v = 1; v <= n; ++v) tq.tau[num(v)] = num(v);
    infer_sigma(tq);
    return tq;
}

TranslationQuiver full_fixture_a1_dim2() {
    TranslationQuiver tq;
    add_vertex(tq, "1", true);
    add_vertex(tq, "2");
    add_arrow(tq, "x", "1", "2");
    add_arrow(tq, "y", "1", "2");
    add_arrow(tq, "x*", "2", "1");
    add_arrow(tq, "y*", "2", "1");
    tq.tau["2"] = "2";
    tq.sigma["x*"] = "x";
    tq.sigma["y*"] = "y";
    return tq;
}

}  // namespace meshforge
