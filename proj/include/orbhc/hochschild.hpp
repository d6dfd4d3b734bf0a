#pragma once

// Brute-force graded bar complexes of A = Q[x_1..x_n] twisted by a linear
// automorphism g (acting as a LinearElement), together with the operators
// relating them to Koszul complexes and differential forms.
//
// Spaces, all graded by total polynomial degree D:
//   B_q   = A (x) (A/Q1)^{(x)q}             reduced Hochschild chains
//   P_n   = A (x) (A/Q1)^{(x)(n-1)} (x) A   resolution chains (P_0 = A)
//   U_q   = A^{(x)(q+1)}                    unreduced chains (for t_g)
// A basis tensor is a tuple of monomials; in reduced slots the monomial
// must be non-constant. Tensors are ordered by degree composition, then
// lexicographically by monomial.
//
// Operators (x = a_0 (x) ... (x) a_n):
//   b'_g x = a_0 g(a_1) (x) a_2 .. + sum_{i=1}^{n-1} (-1)^i .. a_i a_{i+1} ..
//   b_g  x = b'_g x + (-1)^n a_n a_0 (x) a_1 (x) .. (x) a_{n-1}
//   s_g  x = 1 (x) g^{-1}(a_0) (x) a_1 (x) .. (x) a_n
//   t_g  x = (-1)^n a_n (x) g^{-1}(a_0) (x) a_1 (x) .. (x) a_{n-1}   (t_g a_0 = g^{-1} a_0)
//   B_g  x = s_g sum_{k=0}^{n} t_g^k x
// With the twist sitting on the first face, these are the operators that
// satisfy b_g (1 - t_g) = (1 - t_g) b'_g and s_g b'_g + b'_g s_g = 1, and
// t_g^{n+1} is the diagonal action of g^{-1}. Up to that diagonal action,
// t_g a_0 (x) a_1 = -g(a_1) (x) a_0. For g = 1 they are the classical s, t, B.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "orbhc/exactla.hpp"
#include "orbhc/koszul.hpp"
#include "orbhc/polyforms.hpp"
#include "orbhc/polynomial.hpp"

namespace orbhc {

// Operators on these blocks are dense, so the guard is on the basis size of
// a single block.
inline constexpr std::size_t kDefaultBlockLimit = 2500;

// All monomials of degree <= max_degree in m variables, with stable ids
// (degree-major, graded lex inside a degree).
class MonomialTable {
 public:
  MonomialTable(std::size_t m, std::size_t max_degree);

  std::size_t variables() const { return m_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t count() const { return exps_.size(); }
  const Exponent& exponent(std::size_t id) const { return exps_[id]; }
  std::size_t degree(std::size_t id) const { return degree_[id]; }
  const std::vector<std::size_t>& of_degree(std::size_t d) const { return by_degree_.at(d); }
  std::size_t id(const Exponent& e) const;
  std::size_t product(std::size_t a, std::size_t b) const;

 private:
  std::size_t m_, max_degree_;
  std::vector<Exponent> exps_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<std::size_t>> by_degree_;
  std::map<Exponent, std::size_t> lookup_;
};

using Tensor = std::vector<std::uint32_t>;  // monomial ids, one per slot

class TensorSpace {
 public:
  // Slots in [reduced_begin, reduced_end) hold non-constant monomials.
  TensorSpace(const MonomialTable& table, std::size_t slots, std::size_t D,
              std::size_t reduced_begin, std::size_t reduced_end,
              std::size_t limit = kDefaultBlockLimit);

  std::size_t size() const { return tensors_.size(); }
  std::size_t slots() const { return slots_; }
  std::size_t total_degree() const { return D_; }
  const Tensor& at(std::size_t i) const { return tensors_[i]; }
  // nullopt when a reduced slot is constant (the tensor is 0 there).
  std::optional<std::size_t> index(const Tensor& t) const;

 private:
  const MonomialTable* table_;
  std::size_t slots_, D_, reduced_begin_, reduced_end_;
  std::vector<Tensor> tensors_;
  std::map<Tensor, std::size_t> lookup_;
};

// Twisted bar machinery for one linear g on Q^n, up to total degree d_max.
class PolynomialBarComplex {
 public:
  PolynomialBarComplex(RationalMatrix g, std::size_t d_max,
                       std::size_t block_limit = kDefaultBlockLimit);

  std::size_t dimension() const { return g_.rows(); }
  std::size_t d_max() const { return d_max_; }
  const RationalMatrix& g() const { return g_; }
  const MonomialTable& monomials() const { return table_; }

  const TensorSpace& bar_space(std::size_t q, std::size_t D) const;
  const TensorSpace& resolution_space(std::size_t n, std::size_t D) const;
  const TensorSpace& unreduced_space(std::size_t q, std::size_t D) const;

  RationalMatrix b(std::size_t q, std::size_t D) const;              // B_q -> B_{q-1}
  RationalMatrix b_prime(std::size_t n, std::size_t D) const;        // P_n -> P_{n-1}
  RationalMatrix contraction(std::size_t n, std::size_t D) const;    // P_n -> P_{n+1}
  RationalMatrix cyclic(std::size_t q, std::size_t D) const;         // U_q -> U_q (t_g)
  RationalMatrix connes_B(std::size_t q, std::size_t D) const;       // B_q -> B_{q+1}
  RationalMatrix diagonal_action(const RationalMatrix& h, std::size_t q, std::size_t D) const;
  RationalMatrix kappa(std::size_t p, std::size_t D) const;          // K_{p,D} -> B_{p,D}
  RationalMatrix chi(std::size_t q, std::size_t D) const;            // B_q -> Omega^q_{D-q}(F)

  // Columns span the fixed subspace F = {v : g^T v = v} of the points.
  const RationalMatrix& fixed_subspace() const { return fixed_; }

  // Order of g (throws SizeLimitExceeded above `limit`).
  std::size_t order(std::size_t limit = 10000) const;

 private:
  using Combination = std::vector<std::pair<Tensor, Rational>>;
  RationalMatrix assemble(const TensorSpace& src, const TensorSpace& dst,
                          const std::function<void(const Tensor&, Combination&)>& op) const;
  // Expands the tensor with `images` applied on the given slots.
  void apply_on_slots(const Tensor& t, const std::vector<std::size_t>& slots,
                      const std::vector<std::vector<std::pair<std::uint32_t, Rational>>>& images,
                      const Rational& coef, Combination& out) const;
  const TensorSpace& space(int kind, std::size_t q, std::size_t D) const;

  RationalMatrix g_, g_inv_, fixed_;
  std::size_t d_max_, block_limit_;
  MonomialTable table_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> g_images_, g_inv_images_;
  mutable std::map<std::tuple<int, std::size_t, std::size_t>, std::unique_ptr<TensorSpace>> spaces_;
};

// Monomial images under x_i -> sum_j h(j, i) x_j for all monomials of a table.
std::vector<std::vector<std::pair<std::uint32_t, Rational>>> monomial_action(
    const MonomialTable& table, const RationalMatrix& h);

// Operation-level entry points.
RationalMatrix b_twisted(const RationalMatrix& g, std::size_t q, std::size_t D);
RationalMatrix b_prime_twisted(const RationalMatrix& g, std::size_t n, std::size_t D);
RationalMatrix B_twisted(const RationalMatrix& g, std::size_t q, std::size_t D);
RationalMatrix kappa_E(const RationalMatrix& g, std::size_t p, std::size_t D);
// chi_g of a chain given by its coordinates in B_{q,D}.
PolyForm chkr_chi(const RationalMatrix& g, std::size_t q, std::size_t D, const RationalVector& chain);

// (q, D) -> dim HH_q(Q[x], g) in internal degree D.
GradedTable hh_twisted_dims(const RationalMatrix& g, std::size_t q_max, std::size_t d_max);
// (n, D) -> dim HC_n(Q[x], g) in internal degree D, via coinvariants of
// the mixed complex realized as invariants of <g>.
GradedTable hc_twisted_dims(const RationalMatrix& g, std::size_t n_max, std::size_t d_max);

// Same, restricted to the invariants of a finite group commuting with g
// (the centralizer). `group` lists every element as a LinearElement
// matrix. Gives dim HH_q(A, g)^C and dim HC_n(A, g)^C.
GradedTable invariant_hh_dims(const RationalMatrix& g, const std::vector<RationalMatrix>& group,
                              std::size_t q_max, std::size_t d_max,
                              std::size_t block_limit = kDefaultBlockLimit);
GradedTable invariant_hc_dims(const RationalMatrix& g, const std::vector<RationalMatrix>& group,
                              std::size_t n_max, std::size_t d_max,
                              std::size_t block_limit = kDefaultBlockLimit);

// Every element of the cyclic group generated by g.
std::vector<RationalMatrix> cyclic_group(const RationalMatrix& g, std::size_t limit = 10000);

}  // namespace orbhc
