#include "orbhc/polyforms.hpp"

#include <algorithm>

#include "orbhc/errors.hpp"

namespace orbhc {

std::size_t form_space_dim(std::size_t m, std::size_t c, std::size_t q) {
  return monomial_count(m, c) * binomial(m, q);
}

GradedFormSpace::GradedFormSpace(std::size_t m, std::size_t c, std::size_t q)
    : m_(m), c_(c), q_(q), monomials_(m, c), subsets_(subsets_of_size(m, q)) {
  for (std::size_t i = 0; i < subsets_.size(); ++i) subset_index_.emplace(subsets_[i], i);
}

std::size_t GradedFormSpace::index(const Exponent& alpha, const Subset& s) const {
  const auto it = subset_index_.find(s);
  if (it == subset_index_.end()) throw InvalidArgument("form subset not in basis");
  return monomials_.index(alpha) * subsets_.size() + it->second;
}

std::pair<Exponent, Subset> GradedFormSpace::term(std::size_t i) const {
  return {monomials_.at(i / subsets_.size()), subsets_[i % subsets_.size()]};
}

void add_form_term(FormTerms& f, const Exponent& alpha, const Subset& s, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = f.try_emplace({alpha, s}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) f.erase(it);
  }
}

namespace {

// Sign of sorting the concatenation a ++ b, or 0 if they intersect.
int merge_sign(const Subset& a, const Subset& b, Subset& merged) {
  merged.clear();
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else {
      if (i < a.size() && a[i] == b[j]) return 0;
      inversions += static_cast<int>(a.size() - i);
      merged.push_back(b[j++]);
    }
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

FormTerms wedge(const FormTerms& a, const FormTerms& b) {
  FormTerms out;
  Subset merged;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const int s = merge_sign(ka.second, kb.second, merged);
      if (s == 0) continue;
      Exponent e(ka.first.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ka.first[i] + kb.first[i];
      add_form_term(out, e, merged, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  }
  return out;
}

FormTerms polynomial_as_form(const Polynomial& p) {
  FormTerms out;
  for (const auto& [e, c] : p) add_form_term(out, e, {}, c);
  return out;
}

FormTerms exterior_derivative(const Polynomial& p) {
  FormTerms out;
  for (const auto& [e, c] : p) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Exponent d = e;
      --d[i];
      add_form_term(out, d, {i}, c * e[i]);
    }
  }
  return out;
}

PolyForm PolyForm::from_terms(std::size_t m, std::size_t c, std::size_t q, const FormTerms& t) {
  const GradedFormSpace space(m, c, q);
  PolyForm w{m, c, q, RationalVector(space.size())};
  for (const auto& [key, coef] : t) {
    if (key.first.size() != m || static_cast<std::size_t>(degree(key.first)) != c ||
        key.second.size() != q) {
      throw InvalidArgument("form term does not belong to the (c, q) piece");
    }
    w.coeffs[space.index(key.first, key.second)] += coef;
  }
  return w;
}

FormTerms PolyForm::terms() const {
  const GradedFormSpace space(m, c, q);
  if (coeffs.size() != space.size()) throw InvalidArgument("PolyForm coefficient length mismatch");
  FormTerms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    auto [alpha, s] = space.term(i);
    add_form_term(t, alpha, s, coeffs[i]);
  }
  return t;
}

RationalMatrix de_rham_matrix(std::size_t m, std::size_t c, std::size_t q) {
  const GradedFormSpace source(m, c, q);
  if (c == 0) return RationalMatrix(0, source.size());
  const GradedFormSpace target(m, c - 1, q + 1);
  RationalMatrix d(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    auto [alpha, s] = source.term(col);
    Polynomial p{{alpha, Rational(1)}};
    const FormTerms dw = wedge(exterior_derivative(p), FormTerms{{{Exponent(m, 0), s}, 1}});
    for (const auto& [key, coef] : dw) d(target.index(key.first, key.second), col) += coef;
  }
  return d;
}

PolyForm de_rham_d(const PolyForm& w) {
  const RationalMatrix d = de_rham_matrix(w.m, w.c, w.q);
  if (w.c == 0) {
    // The target piece has negative coefficient degree, so d w = 0; keep
    // the total degree by reporting an empty vector in degree (q + 1, 0).
    return PolyForm{w.m, 0, w.q + 1, RationalVector(form_space_dim(w.m, 0, w.q + 1))};
  }
  return PolyForm{w.m, w.c - 1, w.q + 1, d * w.coeffs};
}

RationalMatrix substitution_matrix(const RationalMatrix& F, std::size_t c, std::size_t q) {
  const std::size_t n = F.rows(), m = F.cols();
  const GradedFormSpace source(n, c, q);
  const GradedFormSpace target(m, c, q);
  RationalMatrix out(target.size(), source.size());

  // Pullback of dx_i is sum_k F(i, k) du_k.
  std::vector<FormTerms> dx(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) add_form_term(dx[i], Exponent(m, 0), {k}, F(i, k));

  for (std::size_t col = 0; col < source.size(); ++col) {
    auto [alpha, s] = source.term(col);
    FormTerms w = polynomial_as_form(substitute_linear(Polynomial{{alpha, Rational(1)}}, F));
    for (auto i : s) w = wedge(w, dx[i]);
    for (const auto& [key, coef] : w) out(target.index(key.first, key.second), col) += coef;
  }
  return out;
}

PolyForm restrict_form(const PolyForm& w, const RationalMatrix& subspace) {
  if (subspace.rows() != w.m) throw InvalidArgument("restrict_form: ambient dimension mismatch");
  if (rank(subspace) != subspace.cols()) {
    throw InvalidArgument("restrict_form: subspace basis is not linearly independent");
  }
  const RationalMatrix r = substitution_matrix(subspace, w.c, w.q);
  return PolyForm{subspace.cols(), w.c, w.q, r * w.coeffs};
}

RationalMatrix action_on_forms(const RationalMatrix& g, std::size_t c, std::size_t q) {
  if (g.rows() != g.cols()) throw InvalidArgument("action_on_forms: matrix must be square");
  return substitution_matrix(g.transpose(), c, q);
}

}  // namespace orbhc
