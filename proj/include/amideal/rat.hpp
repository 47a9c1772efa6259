#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "amideal/errors.hpp"

namespace amideal {

// Exact rational scalar.  GMP's mpq_class already guarantees canonical form
// (lowest terms, positive denominator) for values produced by arithmetic, so
// we use it directly and add the few helpers the library needs on top.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw BadParams("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parse "p", "-p/q", etc.  Whitespace is not accepted; q must be nonzero.
Rat parse_rat(const std::string& text);

// Render as "p/q", or just "p" for integers (GMP's canonical text form).
std::string to_string(const Rat& q);

// Fixed-point decimal rendering with `digits` places, round-to-nearest.
std::string to_decimal_string(const Rat& q, int digits);

// q^e for integer e (e < 0 requires q != 0).
Rat pow_int(const Rat& q, long e);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// n! as an exact integer.
Int factorial(Index n);

// ⌈√n⌉ for n ≥ 1.
Index ceil_sqrt(Index n);

}  // namespace amideal
