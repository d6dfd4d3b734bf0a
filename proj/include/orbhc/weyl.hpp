#pragma once

// Partitions, block-cycle permutations and the periodic cyclic homology
// of the group algebra of Z^n x| S_n, i.e. O((C^*)^n) x| S_n.

#include <cstddef>
#include <vector>

#include "orbhc/exactla.hpp"

namespace orbhc {

using Partition = std::vector<std::size_t>;  // weakly decreasing, positive
using Permutation = std::vector<std::size_t>;  // 0-based images

// All partitions of n in reverse lexicographic order: (n), (n-1, 1), ...
std::vector<Partition> partitions(std::size_t n);

// Cycles of lengths lambda_1, lambda_2, .. on consecutive blocks.
Permutation sigma_lambda(const Partition& lambda);

// Number of distinct part sizes.
std::size_t t_of_lambda(const Partition& lambda);

// Generators of the centralizer of sigma_lambda in S_n: one rotation per
// cycle, and the block swaps of neighbouring cycles of equal length,
// which generate Q_lambda.
std::vector<Permutation> cycle_generators(const Partition& lambda);
std::vector<Permutation> q_lambda_generators(const Partition& lambda);

struct WeylContribution {
  Partition lambda;
  std::size_t t = 0;
  std::size_t hp0 = 0, hp1 = 0;  // sum_{k = q mod 2} C(t, k)
  // dims of the Q_lambda-invariants of Lambda^even / Lambda^odd of the
  // cycle permutation representation on Q^{number of parts}
  std::size_t invariant_hp0 = 0, invariant_hp1 = 0;
};

struct WeylReport {
  std::size_t n = 0;
  std::size_t hp0 = 0, hp1 = 0;
  std::vector<WeylContribution> per_lambda;
};

// Throws InvariantViolation if the binomial and the exterior-power
// evaluations disagree for some lambda.
WeylReport hp_weyl_formula(std::size_t n);

inline constexpr std::size_t kDefaultWeylBound = 4;

// Compares hp_weyl_formula(n) with hp_report for S_n permuting the
// coordinates of (C^*)^n. Throws SizeLimitExceeded for n > bound.
bool weyl_cross_check(std::size_t n, std::size_t bound = kDefaultWeylBound);

}  // namespace orbhc
