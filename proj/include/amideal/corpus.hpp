#pragma once

#include <string>
#include <vector>

#include "amideal/seq.hpp"

namespace amideal {

// Named-sequence registry.  Every returned Seq carries proven traits and the
// tightest closed-form tail oracles the construction admits.
//
//   omega            <1/n>
//   const(c)         <c, c, ...>, c >= 0
//   zeta(p)          <1/n^p>, integer p >= 2
//   geometric(q)     <q^n>, 0 < q < 1
//   omlog(m)         <(1/n) ln^m(n+1)>, integer m >= 0 (interval-valued for m >= 1)
//   ex220            1/k!       on ((k-1)!)^2 < j <= (k!)^2   (j = 1 -> 1)
//   ex38             1/(j k!)   on k! <= j < (k+1)!
//   ex315            1/(2^k k!) on (k-1)! < j <= k!           (j = 1 -> 1/8)
//   ex24min_a/_b     1/n_k and 1/n_k^2 on alternating blocks, n_k = 2^(2^k)
//   ex24split_a/_b   an exact monotone splitting a + b = omega with each part
//                    starved by growing factors on alternating phases
//   ex415eta         <1/(n^2 3^n)>
//   e1               <1, 0, 0, ...>
Seq corpus_seq(const std::string& name, const std::vector<Rat>& params = {});

std::vector<std::string> corpus_names();

// <3^n>; a growth weight, not part of the nonincreasing registry.
Seq pow3_seq();

// <1/ceil(sqrt(n))>; exact stand-in for n^{-1/2} used by regularity checks.
Seq isqrt_seq();

// Closed-form block arithmetic for the ex24min pair, usable far beyond any
// machine-sized index (block ends n_K = 2^(2^K) overflow at K = 7).
Int ex24min_block_end(unsigned k);                       // n_k, k >= 1 (n_0 = 0)
Rat ex24min_partial_at_block(char which, unsigned K);    // sum_{j <= n_K}, which in {a, b}
Interval ex24min_min_total(unsigned K);                  // bounds on sum_j min(a, b)_j

// Phase table for the ex24split pair: phase k covers (m_{k-1}, m_k]; during
// odd phases b holds the constant h_k, during even phases a does.
struct SplitPhase {
    Int end;  // m_k
    Rat held; // h_k
};
SplitPhase ex24split_phase(unsigned k);  // k >= 1; lazily extends the table

}  // namespace amideal
