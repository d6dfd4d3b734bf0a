#pragma once

// Koszul complexes K_*(R, E, f) with R = Q[x_1..x_n], M = R, and f a
// linear map from E = Q^e into the linear forms of R.
//
// K_{j,D} has basis (monomial of degree D - j) x (j-subset of the exterior
// basis); exterior generators carry degree 1, so the differential
//   d(m e_{i_1}...e_{i_j}) = sum_k (-1)^(k-1) f(e_{i_k}) m e_{i_1}..^..e_{i_j}
// preserves D.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "orbhc/exactla.hpp"
#include "orbhc/polynomial.hpp"

namespace orbhc {

// (homological degree j, internal degree D) -> dimension.
using GradedTable = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

class KoszulComplex {
 public:
  // f has one row per exterior generator: f(e_j) = sum_i f(j, i) x_i.
  // Constant terms are not representable; every use of the complex here
  // is f = i o h with h linear.
  KoszulComplex(std::size_t n, RationalMatrix f, std::size_t d_max);

  std::size_t ring_dim() const { return n_; }
  std::size_t exterior_dim() const { return f_.rows(); }
  std::size_t d_max() const { return d_max_; }
  const RationalMatrix& f() const { return f_; }

  // Basis size of K_{j,D}.
  std::size_t block_dim(std::size_t j, std::size_t D) const;
  // d : K_{j,D} -> K_{j-1,D}. For j = 0 this is the 0 x dim matrix.
  RationalMatrix differential(std::size_t j, std::size_t D) const;

  // Basis element of K_{j,D} as (monomial, subset).
  std::pair<Exponent, Subset> basis_element(std::size_t j, std::size_t D, std::size_t i) const;
  std::size_t basis_index(std::size_t j, std::size_t D, const Exponent& m, const Subset& s) const;

 private:
  std::size_t n_;
  RationalMatrix f_;
  std::size_t d_max_;
  std::map<std::pair<std::size_t, std::size_t>, RationalMatrix> blocks_;
};

// Assembles every block with j <= e, D <= d_max and verifies d o d = 0
// (CompositionNotZero otherwise).
KoszulComplex build_koszul(std::size_t n, const RationalMatrix& f, std::size_t d_max);

GradedTable koszul_homology_dims(const KoszulComplex& k, std::size_t d_max);

// Kunneth: for f = f1 (+) f2 on R1 (x) R2 the graded homology is the
// convolution of the factors' tables. Returns whether that holds.
bool koszul_kunneth_check(const KoszulComplex& k1, const KoszulComplex& k2, std::size_t d_max);

// Convolution of two graded tables, truncated at d_max.
GradedTable kunneth_convolution(const GradedTable& a, const GradedTable& b, std::size_t d_max);

// f = i o (g^* - 1) for a linear g acting as in LinearElement:
// f(e_j) = g(x_j) - x_j.
RationalMatrix twisted_koszul_map(const RationalMatrix& g);

// Expected table form_space_dim(dim ker(g - 1), D - q, q). Computes the
// Koszul homology for f = i o (g^* - 1) and throws InvariantViolation if
// the two disagree; HypothesisViolated if g - 1 is not injective on
// E / ker(g - 1).
GradedTable koszul_restriction_dims(const RationalMatrix& g, std::size_t d_max);

}  // namespace orbhc
