#include "meshforge/path_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace meshforge {

int PathWord::degree(const GradedQuiver& q) const {
    int d = 0;
    for (int a : arrows) d += q.arrows[a].degree;
    return d;
}

bool WordLess::operator()(const PathWord& a, const PathWord& b) const {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.src < b.src;  // distinguishes trivial paths
}

PathWord trivial_word(int vertex) {
    return PathWord{vertex, vertex, {}};
}

PathWord arrow_word(const GradedQuiver& q, int arrow_idx) {
    const Arrow& a = q.arrows[arrow_idx];
    return PathWord{q.vertex_index(a.src), q.vertex_index(a.tgt), {arrow_idx}};
}

std::optional<PathWord> concat(const GradedQuiver& q, const PathWord& x, const PathWord& y) {
    (void)q;
    if (y.tgt != x.src) return std::nullopt;
    PathWord w;
    w.src = y.src;
    w.tgt = x.tgt;
    w.arrows = y.arrows;
    w.arrows.insert(w.arrows.end(), x.arrows.begin(), x.arrows.end());
    return w;
}

TruncatedElement TruncatedElement::trivial(QuiverPtr quiver, int bound, const std::string& vertex_id) {
    int v = quiver->vertex_index(vertex_id);
    if (v < 0) throw UndeclaredVertex("'" + vertex_id + "'");
    TruncatedElement e(std::move(quiver), bound);
    e.add_term(trivial_word(v), 1);
    return e;
}

TruncatedElement TruncatedElement::from_arrow(QuiverPtr quiver, int bound, const std::string& arrow_id) {
    int a = quiver->arrow_index(arrow_id);
    if (a < 0) throw SyntaxError("unknown arrow '" + arrow_id + "'");
    TruncatedElement e(quiver, bound);
    e.add_term(arrow_word(*quiver, a), 1);
    return e;
}

void TruncatedElement::add_term(const PathWord& w, const Rat& c) {
    if (c == 0 || w.length() > bound_) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedElement TruncatedElement::rebound(int new_bound) const {
    TruncatedElement out(quiver_, new_bound);
    for (const auto& [w, c] : terms_) out.add_term(w, c);
    return out;
}

TruncatedElement& TruncatedElement::operator+=(const TruncatedElement& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

TruncatedElement TruncatedElement::operator*(const Rat& c) const {
    TruncatedElement out(quiver_, bound_);
    if (c == 0) return out;
    for (const auto& [w, x] : terms_) out.terms_.emplace(w, x * c);
    return out;
}

int TruncatedElement::hom_src() const {
    int s = -1;
    for (const auto& [w, c] : terms_) {
        if (s == -1) s = w.src;
        else if (s != w.src) return -1;
    }
    return s;
}

int TruncatedElement::hom_tgt() const {
    int t = -1;
    for (const auto& [w, c] : terms_) {
        if (t == -1) t = w.tgt;
        else if (t != w.tgt) return -1;
    }
    return t;
}

int TruncatedElement::min_word_length() const {
    int m = -1;
    for (const auto& [w, c] : terms_)
        if (m < 0 || w.length() < m) m = w.length();
    return m;
}

int TruncatedElement::max_word_length() const {
    int m = -1;
    for (const auto& [w, c] : terms_)
        if (w.length() > m) m = w.length();
    return m;
}

namespace {

void check_compatible(const TruncatedElement& x, const TruncatedElement& y) {
    if (x.bound() != y.bound())
        throw BoundMismatch("bounds " + std::to_string(x.bound()) + " vs " + std::to_string(y.bound()));
    if (x.quiver() && y.quiver() && x.quiver() != y.quiver() && !(*x.quiver() == *y.quiver()))
        throw QuiverMismatch("elements over different quivers");
}

}  // namespace

TruncatedElement multiply(const TruncatedElement& x, const TruncatedElement& y) {
    check_compatible(x, y);
    const QuiverPtr& q = x.quiver() ? x.quiver() : y.quiver();
    TruncatedElement out(q, x.bound());
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            auto w = concat(*q, wx, wy);
            if (w) out.add_term(*w, cx * cy);
        }
    return out;
}

TruncatedElement add(const TruncatedElement& x, const TruncatedElement& y) {
    check_compatible(x, y);
    TruncatedElement out = x;
    out += y;
    return out;
}

TruncatedElement parse_element(QuiverPtr quiver, int bound, const std::string& text) {
    TruncatedElement out(quiver, bound);
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);

    size_t pos = 0;
    bool first = true;
    while (pos < tokens.size()) {
        Rat sign = 1;
        if (tokens[pos] == "+" || tokens[pos] == "-") {
            if (tokens[pos] == "-") sign = -1;
            ++pos;
        } else if (!first) {
            throw SyntaxError("expected '+' or '-' before '" + tokens[pos] + "'");
        }
        first = false;
        if (pos >= tokens.size()) throw SyntaxError("dangling sign");

        // Collect one term: tokens up to the next standalone +/-.
        std::vector<std::string> factors;
        Rat coef = sign;
        bool leading = true;
        while (pos < tokens.size() && tokens[pos] != "+" && tokens[pos] != "-") {
            std::string t = tokens[pos++];
            if (leading) {
                auto star = t.find('*');
                if (star != std::string::npos) {
                    try {
                        coef *= rat_from_string(t.substr(0, star));
                        t = t.substr(star + 1);
                        if (t.empty()) {
                            leading = false;
                            continue;
                        }
                    } catch (const std::invalid_argument&) {
                        // '*' belongs to the arrow label (e.g. "a1*")
                    }
                }
                leading = false;
            }
            factors.push_back(t);
        }
        if (factors.empty()) throw SyntaxError("empty term");

        // Right-to-left: the last displayed factor is applied first.
        TruncatedElement term(quiver, bound);
        bool started = false;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            TruncatedElement f(quiver, bound);
            const std::string& tok = *it;
            if (tok.size() >= 4 && tok.rfind("e(", 0) == 0 && tok.back() == ')') {
                f = TruncatedElement::trivial(quiver, bound, tok.substr(2, tok.size() - 3));
            } else {
                int ai = quiver->arrow_index(tok);
                if (ai < 0) {
                    // fall back to display labels
                    for (size_t k = 0; k < quiver->arrows.size(); ++k)
                        if (quiver->arrows[k].label == tok) ai = static_cast<int>(k);
                }
                if (ai < 0) throw SyntaxError("unknown arrow '" + tok + "'");
                f = TruncatedElement::from_arrow(quiver, bound, quiver->arrows[ai].id);
            }
            term = started ? multiply(f, term) : f;
            started = true;
        }
        out += term * coef;
    }
    return out;
}

std::string element_to_string(const TruncatedElement& e) {
    if (e.is_zero()) return "0";
    const GradedQuiver& q = *e.quiver();
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "- ";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out += rat_to_string(a) + "*";
        if (w.length() == 0) {
            out += "e(" + q.vertices[w.src].id + ")";
        } else {
            for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) {
                if (it != w.arrows.rbegin()) out += " ";
                out += q.arrows[*it].label;
            }
        }
    }
    return out;
}

void RelationSet::check() const {
    for (const auto& r : relations) {
        if (r.element.is_zero()) throw Error("relation '" + r.id + "' is zero");
        if (r.element.hom_src() < 0 || r.element.hom_tgt() < 0)
            throw Error("relation '" + r.id + "' mixes source/target pairs");
        if (r.element.min_word_length() < 2)
            throw Error("relation '" + r.id + "' has a word of length < 2");
    }
}

}  // namespace meshforge
