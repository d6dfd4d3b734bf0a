#include "orbhc/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "orbhc/errors.hpp"

namespace orbhc {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t monomial_count(std::size_t m, std::size_t c) {
  if (m == 0) return c == 0 ? 1 : 0;
  return binomial(m + c - 1, c);
}

std::vector<Exponent> monomials_of_degree(std::size_t m, std::size_t c) {
  std::vector<Exponent> out;
  if (m == 0) {
    if (c == 0) out.emplace_back();
    return out;
  }
  Exponent cur(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == m) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[var] = e;
      rec(var + 1, left - e);
    }
  };
  rec(0, static_cast<int>(c));
  return out;
}

std::vector<Subset> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k > n) return out;
  Subset cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void add_term(Polynomial& p, const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return out;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    if (e.at(var) == 0) continue;
    Exponent d = e;
    --d[var];
    add_term(out, d, c * e[var]);
  }
  return out;
}

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& F) {
  const std::size_t m = F.cols();
  std::vector<Polynomial> images(F.rows());
  for (std::size_t i = 0; i < F.rows(); ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      Exponent e(m, 0);
      e[k] = 1;
      add_term(images[i], e, F(i, k));
    }
  }
  Polynomial out;
  for (const auto& [e, c] : p) {
    if (e.size() != F.rows()) throw InvalidArgument("substitute_linear: arity mismatch");
    Polynomial term;
    term[Exponent(m, 0)] = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = multiply(term, images[i]);
    for (const auto& [te, tc] : term) add_term(out, te, tc);
  }
  return out;
}

MonomialBasis::MonomialBasis(std::size_t m, std::size_t c) : list_(monomials_of_degree(m, c)) {
  for (std::size_t i = 0; i < list_.size(); ++i) lookup_.emplace(list_[i], i);
}

std::size_t MonomialBasis::index(const Exponent& e) const {
  const auto it = lookup_.find(e);
  if (it == lookup_.end()) throw InvalidArgument("monomial not in basis");
  return it->second;
}

}  // namespace orbhc
