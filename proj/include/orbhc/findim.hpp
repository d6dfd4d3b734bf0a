#pragma once

// Finite-dimensional algebras given by structure constants, their crossed
// products by finite groups of automorphisms, and brute-force Hochschild
// homology from the reduced bar complex.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbhc/exactla.hpp"
#include "orbhc/groups.hpp"

namespace orbhc {

inline constexpr std::size_t kDefaultFindimLimit = 200000;

class FinDimAlgebra {
 public:
  // products[i * d + j] = e_i e_j. Checks associativity and the unit laws
  // (InvalidArgument on failure).
  FinDimAlgebra(std::size_t dim, std::vector<SparseVector> products, RationalVector unit);

  std::size_t dimension() const { return dim_; }
  const RationalVector& unit() const { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;

  // Optional grading of the basis by elements of a finite group; the
  // product of homogeneous elements is homogeneous of the product degree.
  bool graded() const { return group_ != nullptr; }
  const FiniteGroup& grading_group() const { return *group_; }
  std::size_t label(std::size_t i) const { return labels_.at(i); }
  void set_grading(std::shared_ptr<const FiniteGroup> group, std::vector<std::size_t> labels);

 private:
  std::size_t dim_;
  std::vector<SparseVector> products_;
  RationalVector unit_;
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::size_t> labels_;
};

FinDimAlgebra scalar_algebra();
// M_n(Q) on matrix units, E_ij at index i * n + j.
FinDimAlgebra matrix_algebra(std::size_t n);

// Matrix of a -> u a u^{-1}; u must be invertible in A.
RationalMatrix inner_automorphism(const FinDimAlgebra& a, const RationalVector& u);
// Validates an automorphism matrix (column j = image of e_j).
AlgebraAutomorphism make_automorphism(const FinDimAlgebra& a, const RationalMatrix& m);

// A x| G on the basis e_i g, index i + dim(A) * g, graded by g.
FinDimAlgebra findim_crossed_product(const FinDimAlgebra& a, std::shared_ptr<const FiniteGroup> group);
// Same for an arbitrary finite group acting through action[g] (one
// automorphism matrix per element, a homomorphism; e.g. trivial actions).
FinDimAlgebra findim_crossed_product(const FinDimAlgebra& a, std::shared_ptr<const FiniteGroup> group,
                                     const std::vector<RationalMatrix>& action);

struct FindimClassDims {
  std::size_t representative;  // group element index (0 when ungraded)
  std::string description;
  std::vector<std::size_t> dims;  // HH_0 .. HH_{q_max}
};

struct FindimHHResult {
  std::vector<std::size_t> total;
  std::vector<FindimClassDims> per_class;  // one entry when ungraded
};

// HH_q(A) for q <= q_max; split by the conjugacy class of the product of
// labels when A is graded. Throws SizeLimitExceeded when B_{q_max + 1}
// has more than `limit` basis tensors.
FindimHHResult findim_hh_dims(const FinDimAlgebra& a, std::size_t q_max,
                              std::size_t limit = kDefaultFindimLimit);

}  // namespace orbhc
