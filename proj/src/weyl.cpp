#include "orbhc/weyl.hpp"

#include <numeric>
#include <set>

#include "orbhc/crossprod.hpp"
#include "orbhc/errors.hpp"
#include "orbhc/groups.hpp"
#include "orbhc/polynomial.hpp"

namespace orbhc {

namespace {

void partitions_rec(std::size_t left, std::size_t max_part, Partition& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::size_t> block_starts(const Partition& lambda) {
  std::vector<std::size_t> starts;
  std::size_t s = 0;
  for (auto part : lambda) {
    starts.push_back(s);
    s += part;
  }
  return starts;
}

std::size_t total(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), std::size_t{0}); }

}  // namespace

std::vector<Partition> partitions(std::size_t n) {
  if (n == 0) throw InvalidArgument("partitions: n must be positive");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Permutation sigma_lambda(const Partition& lambda) {
  Permutation p(total(lambda));
  const auto starts = block_starts(lambda);
  for (std::size_t b = 0; b < lambda.size(); ++b) {
    if (lambda[b] == 0) throw InvalidArgument("partition parts must be positive");
    if (b > 0 && lambda[b] > lambda[b - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    for (std::size_t i = 0; i < lambda[b]; ++i) p[starts[b] + i] = starts[b] + (i + 1) % lambda[b];
  }
  return p;
}

std::size_t t_of_lambda(const Partition& lambda) { return std::set<std::size_t>(lambda.begin(), lambda.end()).size(); }

std::vector<Permutation> cycle_generators(const Partition& lambda) {
  const auto starts = block_starts(lambda);
  const std::size_t n = total(lambda);
  std::vector<Permutation> out;
  for (std::size_t b = 0; b < lambda.size(); ++b) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = 0; i < lambda[b]; ++i) p[starts[b] + i] = starts[b] + (i + 1) % lambda[b];
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Permutation> q_lambda_generators(const Partition& lambda) {
  const auto starts = block_starts(lambda);
  const std::size_t n = total(lambda);
  std::vector<Permutation> out;
  for (std::size_t b = 0; b + 1 < lambda.size(); ++b) {
    if (lambda[b] != lambda[b + 1]) continue;
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = 0; i < lambda[b]; ++i) {
      p[starts[b] + i] = starts[b + 1] + i;
      p[starts[b + 1] + i] = starts[b] + i;
    }
    out.push_back(std::move(p));
  }
  return out;
}

WeylReport hp_weyl_formula(std::size_t n) {
  WeylReport report;
  report.n = n;
  for (const auto& lambda : partitions(n)) {
    WeylContribution c;
    c.lambda = lambda;
    c.t = t_of_lambda(lambda);
    for (std::size_t k = 0; k <= c.t; ++k) (k % 2 ? c.hp1 : c.hp0) += binomial(c.t, k);

    // Q_lambda permutes the cycles of sigma_lambda; its action on the
    // parts is generated by swaps of neighbouring equal parts, and the
    // invariants of a group are the common fixed vectors of its generators.
    const std::size_t r = lambda.size();
    std::vector<RationalMatrix> gens;
    for (std::size_t b = 0; b + 1 < r; ++b) {
      if (lambda[b] != lambda[b + 1]) continue;
      Permutation swap(r);
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[b], swap[b + 1]);
      gens.push_back(permutation_matrix(swap));
    }
    for (std::size_t k = 0; k <= r; ++k) {
      const std::size_t dim = binomial(r, k);
      RationalMatrix stacked(dim * gens.size(), dim);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const RationalMatrix m = exterior_power(gens[i], k) - RationalMatrix::identity(dim);
        for (std::size_t row = 0; row < dim; ++row)
          for (std::size_t col = 0; col < dim; ++col) stacked(i * dim + row, col) = m(row, col);
      }
      (k % 2 ? c.invariant_hp1 : c.invariant_hp0) += dim - rank(stacked);
    }
    if (c.invariant_hp0 != c.hp0 || c.invariant_hp1 != c.hp1 ||
        torus_hp_contribution(c.t, {}, 0) != c.hp0 || torus_hp_contribution(c.t, {}, 1) != c.hp1) {
      throw InvariantViolation("partition contribution disagrees between binomials and exterior powers");
    }
    report.hp0 += c.hp0;
    report.hp1 += c.hp1;
    report.per_lambda.push_back(std::move(c));
  }
  return report;
}

bool weyl_cross_check(std::size_t n, std::size_t bound) {
  if (n == 0) throw InvalidArgument("weyl_cross_check: n must be positive");
  if (n > bound) {
    throw SizeLimitExceeded("weyl_cross_check: n = " + std::to_string(n) + " exceeds the bound " +
                            std::to_string(bound));
  }
  std::vector<std::size_t> id(n), transposition(n), cycle(n);
  std::iota(id.begin(), id.end(), 0);
  transposition = id;
  if (n >= 2) std::swap(transposition[0], transposition[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  const FiniteGroup sn = close_group({MonomialElement(transposition, RationalVector(n)), MonomialElement(cycle, RationalVector(n))});
  const HomologyReport hp = hp_report(sn);
  const WeylReport w = hp_weyl_formula(n);
  return hp.hp_totals[0] == w.hp0 && hp.hp_totals[1] == w.hp1;
}

}  // namespace orbhc
