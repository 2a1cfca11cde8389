#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "meshforge/quiver.hpp"
#include "meshforge/rational.hpp"

namespace meshforge {

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

// Composition is right-to-left throughout: the juxtaposition "xy" applies y
// first, then x. A PathWord stores its arrows in application order, i.e.
// arrows[0] is the rightmost factor of the displayed word.
struct PathWord {
    int src = -1;             // vertex index
    int tgt = -1;             // vertex index
    std::vector<int> arrows;  // arrow indices, application order

    int length() const { return static_cast<int>(arrows.size()); }
    int degree(const GradedQuiver& q) const;

    bool operator==(const PathWord&) const = default;
};

// Total order: (length, arrow sequence, src). Basis normal forms are chosen
// greedily against this order.
struct WordLess {
    bool operator()(const PathWord& a, const PathWord& b) const;
};

PathWord trivial_word(int vertex);
PathWord arrow_word(const GradedQuiver& q, int arrow_idx);
// Concatenation x*y (y applied first); nullopt when not composable.
std::optional<PathWord> concat(const GradedQuiver& q, const PathWord& x, const PathWord& y);

// Finite rational combination of path words, valid modulo words longer than L.
class TruncatedElement {
public:
    TruncatedElement() = default;
    TruncatedElement(QuiverPtr quiver, int bound) : quiver_(std::move(quiver)), bound_(bound) {}

    static TruncatedElement trivial(QuiverPtr quiver, int bound, const std::string& vertex_id);
    static TruncatedElement from_arrow(QuiverPtr quiver, int bound, const std::string& arrow_id);

    const QuiverPtr& quiver() const { return quiver_; }
    int bound() const { return bound_; }
    const std::map<PathWord, Rat, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * w, discarding words longer than the bound and zero results.
    void add_term(const PathWord& w, const Rat& c);

    // Same element under a different length bound (terms beyond it dropped).
    TruncatedElement rebound(int new_bound) const;

    TruncatedElement& operator+=(const TruncatedElement& other);
    TruncatedElement operator*(const Rat& c) const;

    // Homogeneous source/target, when every term agrees; -1 otherwise (or empty).
    int hom_src() const;
    int hom_tgt() const;
    int min_word_length() const;
    int max_word_length() const;

    bool operator==(const TruncatedElement& other) const {
        return terms_ == other.terms_ && bound_ == other.bound_;
    }

private:
    QuiverPtr quiver_;
    int bound_ = 0;
    std::map<PathWord, Rat, WordLess> terms_;
};

// Bilinear extension of word concatenation; non-composable pairs give 0 and
// words longer than the shared bound are discarded.
TruncatedElement multiply(const TruncatedElement& x, const TruncatedElement& y);
TruncatedElement add(const TruncatedElement& x, const TruncatedElement& y);

// Element text: terms joined by "+"/"-", optional coefficient prefix "p/q*",
// arrow labels juxtaposed right-to-left, trivial path "e(v)".
// Example: "a1 a1* + a2* a2".
TruncatedElement parse_element(QuiverPtr quiver, int bound, const std::string& text);
std::string element_to_string(const TruncatedElement& e);

struct Relation {
    std::string id;
    TruncatedElement element;  // single (src, tgt) pair, word lengths >= 2
};

struct RelationSet {
    std::vector<Relation> relations;

    // Throws Error unless every relation is endpoint-homogeneous with all
    // word lengths >= 2.
    void check() const;
};

}  // namespace meshforge
