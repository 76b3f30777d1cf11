#pragma once

#include <gmpxx.h>

#include <string>

namespace dcdkit {

// Arbitrary precision rational; mpq_class keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "p/q" and "-p/q".
Rat parse_rat(const std::string& text);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace dcdkit
