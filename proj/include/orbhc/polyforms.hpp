#pragma once

// Polynomial differential forms on a vector space.
//
// The (q, c) piece of Omega^*(C^m) has basis x^alpha dx_I with |alpha| = c
// and I a q-subset of {0..m-1}; ordered by monomial first (graded lex),
// then subset (lex). Its total degree is c + q, which is the grading every
// chain map in the engine preserves.
//
// Group actions on forms use one variance convention throughout: a matrix
// G acts by the algebra map x_i -> sum_j G(j, i) x_j (and the same on dx_i),
// which is the convention of LinearElement. Only invariant dimensions are
// consumed downstream and those do not depend on the convention.

#include <cstddef>
#include <map>
#include <utility>

#include "orbhc/exactla.hpp"
#include "orbhc/polynomial.hpp"

namespace orbhc {

std::size_t form_space_dim(std::size_t m, std::size_t c, std::size_t q);

class GradedFormSpace {
 public:
  GradedFormSpace(std::size_t m, std::size_t c, std::size_t q);

  std::size_t ambient_dim() const { return m_; }
  std::size_t coefficient_degree() const { return c_; }
  std::size_t form_degree() const { return q_; }
  std::size_t size() const { return monomials_.size() * subsets_.size(); }

  const MonomialBasis& monomials() const { return monomials_; }
  const std::vector<Subset>& subsets() const { return subsets_; }

  std::size_t index(const Exponent& alpha, const Subset& s) const;
  std::pair<Exponent, Subset> term(std::size_t i) const;

  friend bool operator==(const GradedFormSpace& a, const GradedFormSpace& b) {
    return a.m_ == b.m_ && a.c_ == b.c_ && a.q_ == b.q_;
  }

 private:
  std::size_t m_, c_, q_;
  MonomialBasis monomials_;
  std::vector<Subset> subsets_;
  std::map<Subset, std::size_t> subset_index_;
};

// Sparse form: (monomial, sorted subset) -> coefficient. Used while
// building matrices; converted to a coordinate vector at the end.
using FormTerms = std::map<std::pair<Exponent, Subset>, Rational>;

void add_form_term(FormTerms& f, const Exponent& alpha, const Subset& s, const Rational& c);
FormTerms wedge(const FormTerms& a, const FormTerms& b);
FormTerms polynomial_as_form(const Polynomial& p);
FormTerms exterior_derivative(const Polynomial& p);  // dp as a 1-form

struct PolyForm {
  std::size_t m = 0, c = 0, q = 0;
  RationalVector coeffs;

  static PolyForm from_terms(std::size_t m, std::size_t c, std::size_t q, const FormTerms& t);
  FormTerms terms() const;
  friend bool operator==(const PolyForm&, const PolyForm&) = default;
};

// Matrix of d : Omega^q_c -> Omega^{q+1}_{c-1} (zero rows when c = 0).
RationalMatrix de_rham_matrix(std::size_t m, std::size_t c, std::size_t q);
PolyForm de_rham_d(const PolyForm& w);

// Pullback along u -> F u, F an n x m matrix: Omega^q_c(C^n) -> Omega^q_c(C^m).
RationalMatrix substitution_matrix(const RationalMatrix& F, std::size_t c, std::size_t q);

// Pullback of w along the inclusion of span(columns of subspace).
PolyForm restrict_form(const PolyForm& w, const RationalMatrix& subspace);

// Matrix of the action of g on the (c, q) piece of Omega(C^n).
RationalMatrix action_on_forms(const RationalMatrix& g, std::size_t c, std::size_t q);

}  // namespace orbhc
