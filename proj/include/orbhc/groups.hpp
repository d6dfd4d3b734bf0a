#pragma once

// Finite groups given by generators in a concrete action.
//
// Three kinds of elements are supported:
//
//  * LinearElement: an invertible matrix G acting on the polynomial ring
//    Q[x_1..x_n] by the algebra map x_i -> sum_j G(j, i) x_j, i.e. column i
//    of G is the image of x_i. Composition is the matrix product, so the
//    element G*H acts as "first H, then G" on polynomials.
//
//  * MonomialElement: a permutation-with-translation map of the torus
//    (C^*)^n,  (g . t)_i = exp(2 pi i shift_i) * t_{perm(i)}.
//    Composition g*h is the map t -> g.(h.t), which works out to
//      perm_{gh}  = perm_h o perm_g,
//      shift_{gh}(i) = shift_g(i) + shift_h(perm_g(i))   (mod 1).
//    Coordinate inversions are not representable and are rejected by
//    from_exponent_matrix().
//
//  * AlgebraAutomorphism: a matrix acting on the coordinates of a
//    finite-dimensional algebra; column j is the image of basis vector j.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "orbhc/exactla.hpp"

namespace orbhc {

struct LinearElement {
  RationalMatrix matrix;
};

struct MonomialElement {
  std::vector<std::size_t> perm;  // 0-based
  RationalVector shift;           // each entry in [0, 1)

  MonomialElement(std::vector<std::size_t> perm, RationalVector shift);

  // Builds the element from an integer exponent matrix (t_i -> prod_j
  // t_j^{A(i, j)}). Only permutation matrices are accepted.
  static MonomialElement from_exponent_matrix(const RationalMatrix& exponents,
                                              RationalVector shift);
};

struct AlgebraAutomorphism {
  RationalMatrix matrix;
};

using GroupElement = std::variant<LinearElement, MonomialElement, AlgebraAutomorphism>;

std::size_t element_dimension(const GroupElement& g);
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement identity_like(const GroupElement& g);
// Canonical text of the normalized entries; equal elements have equal keys.
std::string element_key(const GroupElement& g);
std::string describe(const GroupElement& g);

const RationalMatrix& linear_matrix(const GroupElement& g);
const MonomialElement& monomial(const GroupElement& g);

class FiniteGroup {
 public:
  std::size_t size() const { return elements_.size(); }
  std::size_t identity() const { return 0; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t dimension() const { return element_dimension(elements_.front()); }

  friend FiniteGroup close_group(const std::vector<GroupElement>&, std::size_t);

 private:
  std::vector<GroupElement> elements_;  // elements_[0] is the identity
  std::vector<std::size_t> table_;      // row-major multiplication table
  std::vector<std::size_t> inverse_;
};

inline constexpr std::size_t kDefaultGroupLimit = 20000;

// Breadth-first closure under right multiplication by the generators.
// Element order is deterministic: identity first, then discovery order.
// Throws SizeLimitExceeded past `limit` elements.
FiniteGroup close_group(const std::vector<GroupElement>& generators,
                        std::size_t limit = kDefaultGroupLimit);

struct ConjugacyClass {
  std::size_t representative;        // lowest element index in the class
  std::vector<std::size_t> members;  // sorted
};

// Classes ordered by representative index.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group);

std::vector<std::size_t> centralizer(const FiniteGroup& group, std::size_t g);

// Permutation matrix P with P e_i = e_{perm[i]}.
RationalMatrix permutation_matrix(const std::vector<std::size_t>& perm);

// Cycles of a permutation, each starting at its smallest entry, ordered by
// that entry.
std::vector<std::vector<std::size_t>> permutation_cycles(const std::vector<std::size_t>& perm);

}  // namespace orbhc
