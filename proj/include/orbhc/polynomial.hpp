#pragma once

// Sparse multivariate polynomials and the fixed monomial order used by
// every matrix in the engine.
//
// Monomial order: graded lexicographic. Within one degree, exponent
// vectors are sorted lexicographically in decreasing order, so for
// m = 2, c = 2 the order is x^2, xy, y^2.

#include <cstddef>
#include <map>
#include <vector>

#include "orbhc/exactla.hpp"

namespace orbhc {

using Exponent = std::vector<int>;
using Polynomial = std::map<Exponent, Rational>;
using Subset = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

// Number of monomials of degree c in m variables (1 for m = c = 0).
std::size_t monomial_count(std::size_t m, std::size_t c);

std::vector<Exponent> monomials_of_degree(std::size_t m, std::size_t c);

// k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> subsets_of_size(std::size_t n, std::size_t k);

int degree(const Exponent& e);

void add_term(Polynomial& p, const Exponent& e, const Rational& c);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p, std::size_t var);

// p(F u): substitutes x_i = sum_k F(i, k) u_k, F has n rows and m columns.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& F);

// Indexing of monomials of a fixed degree.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t m, std::size_t c);
  std::size_t size() const { return list_.size(); }
  const Exponent& at(std::size_t i) const { return list_[i]; }
  std::size_t index(const Exponent& e) const;  // throws on unknown monomial

 private:
  std::vector<Exponent> list_;
  std::map<Exponent, std::size_t> lookup_;
};

}  // namespace orbhc
