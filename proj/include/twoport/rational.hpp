#pragma once

// Arbitrary-precision rationals on top of GMP. mpq_class keeps results of
// arithmetic canonical (lowest terms, positive denominator); only raw
// numerator/denominator construction needs an explicit canonicalize().

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace twoport {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rat& r) { return sgn(r); }

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();  // "p" or "p/q", canonical
}

// Parses "p" or "p/q" (optional leading sign). Decimal points are rejected:
// every persisted number must be exact.
inline Rat rat_from_string(const std::string& s) {
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("decimal literals are not accepted: '" + s + "'");
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace twoport
