#pragma once

#include <map>
#include <utility>
#include <vector>

#include "amideal/seq.hpp"

namespace amideal {

// Sparse exact matrix with all entries >= 0 and every row and column sum <= 1
// (validated on construction helpers).  Indices are 1-based.
struct SubstochasticMatrix {
    std::map<std::pair<Index, Index>, Rat> entries;
    Index nrows = 0;
    Index ncols = 0;

    Rat at(Index r, Index c) const;
};

SubstochasticMatrix matrix_from_dense(const std::vector<std::vector<Rat>>& m);
void validate_substochastic(const SubstochasticMatrix& m);  // throws BadParams

// result_i = input_{image[i-1]}; an injection on [1, N].
struct Permutation {
    std::vector<Index> image;
};

// Splits xi = eta~ + mu~ with both parts nonnegative and the partial sums of
// eta (resp. mu) dominated by those of eta~ (resp. mu~), given the prefix
// feasibility sum(eta, k) + sum(mu, k) <= sum(xi, k) for every k.  Follows
// the scale-and-split recursion: gamma = max_k (sum eta + sum mu)/(sum xi),
// split at the smallest maximizing k, recurse on both halves of gamma*xi,
// rescale by 1/gamma.  When the only maximizing k is the window end the
// recursion cannot shrink; that tight case is solved directly by a
// backward/forward envelope pass over the feasible prefix-sum corridor.
std::pair<Prefix, Prefix> lemma31_split(const Prefix& xi, const Prefix& eta, const Prefix& mu);

// For nonincreasing nonnegative eta, xi with the partial sums of eta
// dominated by those of xi, builds an exact substochastic P with P*xi = eta.
// Pointwise-dominated pairs get the diagonal eta_j/xi_j; otherwise xi's tail
// mass is trimmed to equalize totals and the remainder is realized by a
// finite chain of T-transforms.  Columns over zero entries of xi are cleared.
SubstochasticMatrix markus_matrix(const Prefix& eta, const Prefix& xi);

Prefix apply_matrix(const SubstochasticMatrix& P, const Prefix& xi);

// Nonincreasing rearrangement with its stable witness injection.
std::pair<Prefix, Permutation> monotonize(const Prefix& x);

// Row-permuted matrix pi o P; substochastic invariants re-validated.
SubstochasticMatrix compose_monotone(const SubstochasticMatrix& P, const Permutation& pi);

// lhs = (rho+mu)^*, rhs = D_2 rho^* + D_2 mu^* on the shared length; holds is
// the pointwise comparison lhs <= rhs.
struct FanResult {
    Prefix lhs;
    Prefix rhs;
    bool holds = false;
};
FanResult fan_dominates(const Prefix& rho, const Prefix& mu);

// (max(xi - rho, 0))^*
Prefix sum_decomposition_witness(const Prefix& xi, const Prefix& rho);

}  // namespace amideal
