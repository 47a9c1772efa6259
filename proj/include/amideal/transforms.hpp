#pragma once

#include "amideal/seq.hpp"

namespace amideal {

// Cesàro means: output_n = (1/n) * sum_{i<=n} p_i.  Nonincreasing nonnegative
// input yields nonincreasing output (checked).
Prefix am(const Prefix& p);

// Tail means (1/n) * sum_{j>n} s_j for n = 1..N, as certified intervals.
// Requires the summable flag not "no" and a tail oracle.
std::vector<Interval> am_inf(const Seq& s, Index N);

// Telescoped inverse of am: eta_n = n*p_n - (n-1)*p_{n-1}.
Prefix mean_inverse(const Prefix& p);

// Telescoped inverse of the tail mean: eta_{n+1} = n*p_n - (n+1)*p_{n+1}.
// Input entries must be point intervals; the first output index is 2 (index 1
// is unconstrained by tail means), so result[i] is the value at i+1.
Prefix mean_inf_inverse(const std::vector<Interval>& p);

Prefix ampliate(Index m, const Prefix& p);  // each entry repeated m times
Prefix contract(Index m, const Prefix& p);  // entry i -> p_{m i}, length floor(N/m)

// eta = running-min of (beta * xi) where beta_i = k on block k.  On block k
// (k >= 2) the output satisfies eta_n >= (k-1) * xi_n.
Prefix step_boost(const Prefix& xi, const Blocks& blocks);

// Flatten eta to the value (am eta)_{n_k} on each block.  Requires the block
// density condition  mean over block k >= (1/2) (am eta)_{n_k}; then the
// output's means stay within twice eta's means.
Prefix block_flatten_am(const Prefix& eta, const Blocks& blocks);

// Flatten a summable eta to the value (tail mean at n_k) on block k.  Requires
// block sums to cover half the tail ahead of them; certifies the output's
// tails within three times eta's tails up to min(N, last block end).
Prefix block_flatten_aminf(const Seq& eta, const Blocks& blocks, Index N);

// Smallest growth factor: gamma nondecreasing, gamma <= lnd(beta), and
// gamma*eta nonincreasing, via the running-min recursion.
Prefix gamma_monotonize(const Prefix& eta, const Prefix& beta);

// Greedy block finders for the flatten transforms: shortest blocks whose
// density conditions validate; they stop before the first end that cannot be
// extended within the data.
Blocks find_am_blocks(const Prefix& eta);
Blocks find_aminf_blocks(const Seq& eta, Index N);

}  // namespace amideal
