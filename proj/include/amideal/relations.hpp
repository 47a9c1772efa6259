#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amideal/seq.hpp"

namespace amideal {

// Horizon-limited verdicts for asymptotic relations between sequences.  A
// verdict is evidence gathered on a finite window, not a proof: `holds` and
// `fails` are backed by concrete witnesses, everything else is reported as
// `indeterminate` rather than guessed.

enum class Decision { holds, fails, indeterminate };

std::string to_string(Decision d);

struct CheckConfig {
    Index horizon = 10000;       // last index evaluated
    Index n0 = 8;                // stability statistics start here
    Rat growth = Rat(3, 2);      // running-max growth across half-windows that refutes O()
    Rat delta = Rat(1, 10);      // smallness threshold for o()
    unsigned B = 4;              // dyadic windows inspected for trend checks
    unsigned M_max = 8;          // ampliation orders searched by membership tests
    unsigned K_max = 8;          // power / log exponents searched
    Rat block_decay = Rat(3, 4); // dyadic block-sum ratio accepted as geometric decay
    Rat sentinel = Rat(10);      // partial-sum level treated as divergence evidence
    unsigned long long seed = 20240915ull;  // PRNG seed for randomized checks
};

struct Verdict {
    Decision decision = Decision::indeterminate;
    Index horizon = 0;
    std::optional<unsigned> witness_m;  // ampliation order / block witness when relevant
    std::optional<Rat> bound;           // bounding constant C backing a `holds`
    std::vector<Index> indices;         // witness or refuting indices (capped)
    Rat margin = Rat(0);                // slack between observed growth and the threshold
    unsigned m_searched = 0;            // quantifier caps actually exhausted
    unsigned k_searched = 0;
    unsigned t_log2 = 0;
    std::string note;

    bool holds() const { return decision == Decision::holds; }
    bool fails() const { return decision == Decision::fails; }
};

// xi = O(eta)?  Scans the ratio xi_n/eta_n on [1, horizon].  `holds` when the
// running max over [n0, horizon] was last raised at or before horizon/2, or
// grew by less than a quarter of the allowed growth margin across the two
// half-windows; `fails` when it certifiably grew by more than cfg.growth, or
// when it kept climbing by a non-decaying additive step across each of the
// last B window doublings (log-like growth never settles).
Verdict big_o(const Seq& xi, const Seq& eta, const CheckConfig& cfg = {});

// xi = o(eta)?  Compares ratio suprema across the last cfg.B dyadic windows:
// `holds` when the newest supremum is below cfg.delta and the suprema are
// nonincreasing; `fails` when the supremum is certifiably >= delta and did not
// decay by more than cfg.growth across the newest pair.
Verdict little_o(const Seq& xi, const Seq& eta, const CheckConfig& cfg = {});

// sup_n xi_n / xi_2n < infinity?  Same classifier as big_o against the
// index-doubled sequence; evaluates xi up to 2*horizon.
Verdict delta_half(const Seq& xi, const CheckConfig& cfg = {});

// Is xi summable?  A trait-certified tail oracle decides immediately;
// otherwise dyadic block sums must decay geometrically (holds) or the partial
// sums must pass cfg.sentinel without block decay (fails).
Verdict summable(const Seq& xi, const CheckConfig& cfg = {});

// Does xi majorize eta, i.e. do eta's partial sums stay below xi's at every
// k <= N?  Exact; never indeterminate.
Verdict majorizes(const Prefix& eta, const Prefix& xi);

// Tail-sum domination: tail(eta, n) <= tail(xi, n) for all 1 <= n <= N,
// decided through the certified tail enclosures.
Verdict majorizes_inf(const Seq& eta, const Seq& xi, Index N);

// Is xi regular, i.e. am(xi) = O(xi)?  (xi <= am(xi) is automatic for
// nonincreasing xi, so only one direction needs checking.)
Verdict regular(const Seq& xi, const CheckConfig& cfg = {});

// Two-sided horizon check xi ≍ am_inf(xi).
Verdict inf_regular(const Seq& xi, const CheckConfig& cfg = {});

}  // namespace amideal
