#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace meshforge {

// All coefficient arithmetic in this library is exact rational.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    mpq_class r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonical "p/q" (or "p" when q = 1); the wire format for rationals.
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

}  // namespace meshforge
