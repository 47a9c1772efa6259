#pragma once

#include "amideal/relations.hpp"
#include "amideal/seq.hpp"

namespace amideal {

// The four monotone envelopes of a sequence phi:
//   und  phi_n = max_{i<=n} phi_i   (least nondecreasing majorant)
//   lni  phi_n = min_{i<=n} phi_i   (greatest nonincreasing minorant)
//   lnd  phi_n = inf_{i>=n} phi_i   (greatest nondecreasing minorant)
//   uni  phi_n = sup_{i>=n} phi_i   (least nonincreasing majorant)
// und/lni depend only on the past and are exact on any window; lnd/uni look
// into the future and need the sequence's tail extremum oracles.
enum class EnvMode { und, lnd, uni, lni };

EnvMode env_mode_from_string(const std::string& s);

// Window view of the envelope.  For lnd/uni the returned valid_upto marks how
// far the window values are exact for the full (infinite) envelope; with a
// point tail oracle that is all of [1, N].
WindowedPrefix envelope(EnvMode mode, const Seq& s, Index N);

// Prefix-only variant: exact for und/lni; for the future-dependent modes the
// window alone determines nothing, so valid_upto is 0 and the values are the
// in-window suffix statistics.
WindowedPrefix envelope(EnvMode mode, const Prefix& p);

// Streaming Seq view of the envelope (running extremum for und/lni, tail
// extremum oracle reads for lnd/uni).
Seq envelope_seq(EnvMode mode, const Seq& s);

// Least concave majorant of a nonnegative quasiconcave window (nondecreasing
// with phi_n/n nonincreasing; validated).  Values are the exact upper hull of
// the window points; valid_upto is the last hull vertex strictly before N.
WindowedPrefix concave_majorant(const Prefix& phi);

// Same hull, but with the promise sup phi = sup_hint beyond the window;
// valid_upto shrinks to the vertices that no admissible future can displace.
WindowedPrefix concave_majorant(const Prefix& phi, const Rat& sup_hint);

enum class ConvexBoundary {
    window_exact,  // hull of the window points only
    zero_limit,    // phi is nonincreasing to 0 beyond the window: the hull
                   // additionally descends to a zero anchored at index 2N-1
};

// Greatest convex minorant of a positive window (lower hull).
WindowedPrefix convex_minorant(const Prefix& phi, ConvexBoundary boundary);

// Closed-form generators of the arithmetic-mean interior/closure hulls of the
// principal ideal generated by xi: omega times the requested envelope of
// xi/omega.  The am-infinity variants carry side conditions that are checked
// as horizon verdicts first.
enum class GenKind { am_interior, am_oo, aminf_interior, aminf_oo };

WindowedPrefix mean_ideal_generator(GenKind kind, const Seq& xi, Index N,
                                    const CheckConfig* guard_cfg = nullptr);

}  // namespace amideal
