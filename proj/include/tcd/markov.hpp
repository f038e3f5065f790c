#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcd/rational.hpp"
#include "tcd/transitions.hpp"

namespace tcd {

// Finite Markov chain with exact rational transition matrix and stationary
// distribution. validate() checks: rows sum to 1, entries >= 0, sigma >= 0
// sums to 1, and sigma P = sigma exactly.
struct FiniteChain {
  std::vector<std::vector<Rat>> p;
  std::vector<Rat> sigma;

  std::size_t size() const { return p.size(); }
  void validate() const;  // throws InputError
  bool strictly_positive() const;
};

// Uniform walk chain on a compatibility digraph: p(e,f) = 1/r on arcs.
// Requires the digraph to be r-out-regular and r-in-regular (so the uniform
// distribution is stationary); throws InputError otherwise.
FiniteChain chain_from_digraph(const CompatibilityDigraph& dg);

// Chain from a transition matrix alone; computes the stationary distribution
// exactly (unique when the matrix is strictly positive).
FiniteChain chain_from_matrix(std::vector<std::vector<Rat>> p);

// p^step with the same stationary distribution.
FiniteChain block_chain(const FiniteChain& c, unsigned step);

// alpha = min_{i,j,k} p_ij / sigma_k, beta = max_{i,j,k} p_ij / sigma_k.
// Defined only for strictly positive chains (and strictly positive sigma).
struct MixingParams {
  Rat alpha, beta;
};
std::optional<MixingParams> mixing_params(const FiniteChain& c);

// Least integer t with t >= 2 + 2 ln(beta) / alpha, computed with upward
// rounding throughout so it never under-approximates.
long mixing_threshold(const MixingParams& mp);

// Checks |p^t_ij - sigma_j| <= (1 - alpha/2)^t sigma_j for all i,j, exactly.
// worst_ratio_by_t[s-1] is the max deviation ratio after s steps, s = 1..t.
struct MixingReport {
  bool applicable = false;  // mixing_params existed
  Rat alpha, beta;
  long t_min = 0;
  unsigned t = 0;
  Rat worst_ratio;  // at step t, relative to the bound
  std::vector<Rat> worst_ratio_by_t;
  bool pass = false;  // worst_ratio <= 1
};

MixingReport verify_mixing(const FiniteChain& c, unsigned t);

// (1 - alpha/(3 ell0))^ell : the predicted exactness defect of compatible
// ell-walk counts given mixing parameter alpha at base length ell0.
Rat predicted_exactness(const Rat& alpha, unsigned ell0, unsigned ell);

}  // namespace tcd
