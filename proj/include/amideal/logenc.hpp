#pragma once

#include "amideal/interval.hpp"

namespace amideal {

// Certified natural-log enclosures, computed once per argument with MPFR
// directed rounding and cached.  Enclosure width is below 2^-LOG_FRACTIONAL_BITS.
inline constexpr unsigned LOG_FRACTIONAL_BITS = 160;

// Enclosure of ln(k), k ≥ 1.
Interval ln_enclosure(Index k);

// Same for arbitrary-size integer arguments (not cached).
Interval ln_enclosure_z(const Int& k);

// Enclosure of ln(k)^m, m ≥ 0 (ln(k) ≥ 0 since k ≥ 1).
Interval ln_pow_enclosure(Index k, unsigned m);

}  // namespace amideal
