#include "orbhc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "orbhc/crossprod.hpp"
#include "orbhc/errors.hpp"
#include "orbhc/findim.hpp"
#include "orbhc/hochschild.hpp"
#include "orbhc/koszul.hpp"
#include "orbhc/polyforms.hpp"
#include "orbhc/weyl.hpp"

namespace orbhc {

namespace {

// Collects failed expectations; keeps the first few messages.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  void equal(std::size_t got, std::size_t want, const std::string& what) {
    (*this)(got == want, what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    return std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + messages_;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string messages_;
};

std::string at(std::size_t q, std::size_t D) { return "(q=" + std::to_string(q) + ", D=" + std::to_string(D) + ")"; }

std::size_t lookup(const GradedTable& t, std::size_t q, std::size_t D) {
  const auto it = t.find({q, D});
  return it == t.end() ? 0 : it->second;
}

std::vector<std::size_t> iota_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

MonomialElement perm_element(std::vector<std::size_t> p) {
  const std::size_t n = p.size();
  return MonomialElement(std::move(p), RationalVector(n));
}

FiniteGroup symmetric_on_torus(std::size_t n) {
  auto t = iota_perm(n), c = iota_perm(n);
  if (n >= 2) std::swap(t[0], t[1]);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return close_group({perm_element(t), perm_element(c)});
}

const RationalMatrix kMinusOne{{-1}};
const RationalMatrix kSwap{{0, 1}, {1, 0}};
const RationalMatrix kThreeCycle{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
const RationalMatrix kDiag2{{-1, 0}, {0, 1}};
const RationalMatrix kDiag3{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};

std::size_t fixed_dim(const RationalMatrix& g) {
  return kernel_basis(g.transpose() - RationalMatrix::identity(g.rows())).size();
}

void koszul_resolution(Expect& expect) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = koszul_homology_dims(build_koszul(n, RationalMatrix::identity(n), 4), 4);
    for (std::size_t D = 0; D <= 4; ++D)
      for (std::size_t q = 0; q <= n; ++q)
        expect.equal(lookup(t, q, D), q == 0 && D == 0 ? 1 : 0, "n=" + std::to_string(n) + " " + at(q, D));
  }
}

void twisted_hkr(Expect& expect) {
  for (const auto& g : {kMinusOne, kSwap, kThreeCycle, kDiag2, kDiag3}) {
    const std::size_t n = g.rows(), m = fixed_dim(g);
    const auto kz = koszul_homology_dims(build_koszul(n, twisted_koszul_map(g), 4), 4);
    const auto hh = hh_twisted_dims(g, 3, 4);
    for (std::size_t D = 0; D <= 4; ++D) {
      for (std::size_t q = 0; q <= 3; ++q) {
        const std::size_t forms = q <= D ? form_space_dim(m, D - q, q) : 0;
        const std::string where = g.str() + " " + at(q, D);
        expect.equal(lookup(kz, q, D), forms, "Koszul " + where);
        expect.equal(lookup(hh, q, D), forms, "bar " + where);
      }
    }
  }
}

void chain_maps(Expect& expect) {
  for (const auto& g : {kMinusOne, kSwap, kDiag2, kThreeCycle}) {
    const std::size_t n = g.rows();
    const PolynomialBarComplex bar(g, 3);
    const KoszulComplex k = build_koszul(n, twisted_koszul_map(g), 3);
    const auto group = cyclic_group(g);
    const std::size_t m = bar.fixed_subspace().cols();
    for (std::size_t D = 0; D <= 3; ++D) {
      const std::string gd = g.str() + " D=" + std::to_string(D);
      for (std::size_t p = 1; p <= std::min(n, D); ++p)
        expect(bar.b(p, D) * bar.kappa(p, D) == bar.kappa(p - 1, D) * k.differential(p, D), "kappa " + gd);
      for (std::size_t q = 2; q <= 4; ++q) expect((bar.b(q - 1, D) * bar.b(q, D)).is_zero(), "b^2 " + gd);
      expect(bar.b_prime(1, D) * bar.contraction(0, D) ==
                 RationalMatrix::identity(bar.resolution_space(0, D).size()),
             "b's at P_0 " + gd);
      for (std::size_t q = 1; q <= 3; ++q) {
        const RationalMatrix lhs = bar.contraction(q - 1, D) * bar.b_prime(q, D) + bar.b_prime(q + 1, D) * bar.contraction(q, D);
        expect(lhs == RationalMatrix::identity(bar.resolution_space(q, D).size()), "sb' + b's " + gd);
      }
      for (std::size_t q = 0; q <= 2; ++q) {
        // the mixed complex lives on <g>-invariant chains
        std::vector<RationalMatrix> rep;
        for (const auto& h : group) rep.push_back(bar.diagonal_action(h, q, D));
        const RationalMatrix p = averaging_projector(rep);
        expect((bar.connes_B(q + 1, D) * bar.connes_B(q, D) * p).is_zero(), "B^2 " + gd);
        RationalMatrix anti = bar.b(q + 1, D) * bar.connes_B(q, D);
        if (q >= 1) anti += bar.connes_B(q - 1, D) * bar.b(q, D);
        expect((anti * p).is_zero(), "bB + Bb " + gd);
      }
      for (std::size_t q = 1; q <= 3; ++q) expect((bar.chi(q - 1, D) * bar.b(q, D)).is_zero(), "chi b " + gd);
      for (std::size_t q = 0; q + 1 <= D && q <= 2; ++q)
        expect(bar.chi(q + 1, D) * bar.connes_B(q, D) == de_rham_matrix(m, D - q, q) * bar.chi(q, D), "chi B " + gd);
    }
  }
}

void vanishing(Expect& expect) {
  const HomologyReport r = hp_report(close_group({MonomialElement({0}, {Rational(1, 2)})}));
  expect.equal(r.per_class.size(), 2, "classes");
  for (const auto& c : r.per_class) {
    if (c.representative == 0) continue;
    expect(std::holds_alternative<EmptyFixed>(c.fixed), "t -> -t has no fixed points");
    expect.equal(c.hp[0] + c.hp[1], 0, "nontrivial class contribution");
  }
  expect.equal(r.hp_totals[0], 1, "HP_0");
  expect.equal(r.hp_totals[1], 1, "HP_1");
}

void crossed_hh(Expect& expect) {
  const HomologyReport r = hh_graded_report(close_group({LinearElement{kSwap}}), 3, 4, true);
  expect.equal(r.per_class.size(), 2, "classes");
  expect.equal(lookup(r.per_class[0].table, 0, 2), 2, "identity class " + at(0, 2));
  for (std::size_t D = 1; D <= 4; ++D) expect.equal(lookup(r.per_class[1].table, 1, D), 1, "swap class " + at(1, D));
  for (const auto& c : r.per_class) {
    expect(c.oracle.has_value(), "oracle table present");
    if (c.oracle)
      for (const auto& [key, v] : c.table) expect.equal(lookup(*c.oracle, key.first, key.second), v, "oracle " + at(key.first, key.second));
  }
}

void orbifold_hp(Expect& expect) {
  const HomologyReport s2 = hp_report(symmetric_on_torus(2));
  expect.equal(s2.hp_totals[0], 2, "S_2 on T^2 HP_0");
  expect.equal(s2.hp_totals[1], 2, "S_2 on T^2 HP_1");

  const FiniteGroup s4 = symmetric_on_torus(4);
  const auto classes = conjugacy_classes(s4);
  const HomologyReport r = hp_report(s4);
  bool found = false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (monomial(s4.element(classes[i].representative)).perm.size() != 4) continue;
    bool is22 = false;
    for (auto e : classes[i].members) is22 = is22 || monomial(s4.element(e)).perm == std::vector<std::size_t>{1, 0, 3, 2};
    if (!is22) continue;
    found = true;
    const ClassReport& c = r.per_class[i];
    expect(fixed_dimension(c.fixed) == 2u, "sigma_(2,2) fixed torus has rank 2");
    const auto& tor = std::get<TorusFixed>(c.fixed);
    const auto action = centralizer_action_on_torus_h1(s4, c.representative, tor);
    expect(std::find(action.begin(), action.end(), kSwap) != action.end(), "centralizer swaps the two cycles");
    expect.equal(c.hp[0], 1, "sigma_(2,2) HP_0");
    expect.equal(c.hp[1], 1, "sigma_(2,2) HP_1");
  }
  expect(found, "sigma_(2,2) class present");
}

void weyl_theorem(Expect& expect) {
  const std::size_t want[] = {1, 2, 4, 7, 12};
  for (std::size_t n = 1; n <= 5; ++n) {
    const WeylReport w = hp_weyl_formula(n);
    expect.equal(w.hp0, want[n - 1], "n=" + std::to_string(n) + " HP_0");
    expect.equal(w.hp1, want[n - 1], "n=" + std::to_string(n) + " HP_1");
    std::size_t powers = 0, invariants = 0;
    for (const auto& c : w.per_lambda) {
      powers += std::size_t{1} << (c.t - 1);
      invariants += c.invariant_hp0;
    }
    expect.equal(powers, want[n - 1], "n=" + std::to_string(n) + " sum 2^(t-1)");
    expect.equal(invariants, want[n - 1], "n=" + std::to_string(n) + " exterior invariants");
  }
  for (std::size_t n = 1; n <= 4; ++n) expect(weyl_cross_check(n), "cross-check n=" + std::to_string(n));
}

void azumaya(Expect& expect) {
  const FinDimAlgebra a = matrix_algebra(2);
  const RationalMatrix c1 = inner_automorphism(a, {0, 1, 1, 0});
  const RationalMatrix c2 = inner_automorphism(a, {1, 0, 0, -1});
  auto klein = std::make_shared<const FiniteGroup>(close_group({AlgebraAutomorphism{c1}, AlgebraAutomorphism{c2}}));
  expect.equal(klein->size(), 4, "|(Z/2)^2|");
  const FindimHHResult r = findim_hh_dims(findim_crossed_product(a, klein), 2);
  expect(r.total == std::vector<std::size_t>{1, 0, 0}, "HH_0..2 = 1, 0, 0");
  for (const auto& c : r.per_class) {
    if (c.representative == 0) continue;
    expect(std::all_of(c.dims.begin(), c.dims.end(), [](std::size_t d) { return d == 0; }),
           "class " + c.description + " vanishes");
  }
}

struct Check {
  std::string id, title;
  double budget;
  void (*body)(Expect&);
};

const std::vector<Check>& criteria() {
  static const std::vector<Check> list{
      {"1", "Koszul resolution of the evaluation at 0", 1, koszul_resolution},
      {"2", "twisted HKR: Koszul = bar complex = forms on the fixed space", 60, twisted_hkr},
      {"3", "chain-map identities", 60, chain_maps},
      {"4", "vanishing on empty fixed sets", 0, vanishing},
      {"5", "crossed-product HH of S_2 on C^2", 0, crossed_hh},
      {"6", "orbifold HP on tori", 0, orbifold_hp},
      {"7", "affine Weyl group HP", 120, weyl_theorem},
      {"8", "M_2 x| (Z/2)^2 Hochschild homology", 120, azumaya},
  };
  return list;
}

CheckResult run_check(const Check& c) {
  CheckResult r;
  r.id = c.id;
  r.title = c.title;
  r.budget_seconds = c.budget;
  const auto start = std::chrono::steady_clock::now();
  Expect expect;
  try {
    c.body(expect);
    r.passed = expect.ok();
    r.detail = expect.summary();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += "; over the time budget";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Invariant suites

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> dist(-2, 2);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

RationalMatrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

void exactla_invariants(Expect& expect) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix m = random_matrix(rng, 1 + trial % 5, 1 + trial % 7);
    expect.equal(rank(m) + kernel_basis(m).size(), m.cols(), "rank + nullity");
  }
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix a = random_matrix(rng, 4, 3);
    const RationalMatrix b = RationalMatrix::from_rows(kernel_basis(a.transpose()));
    const std::size_t h = homology_dim(a, b);
    const RationalMatrix pu = random_invertible(rng, 3), pv = random_invertible(rng, 4), pw = random_invertible(rng, b.rows());
    expect.equal(homology_dim(pv * a * inverse(pu), pw * b * inverse(pv)), h, "homology under change of basis");
  }
  const std::vector<RationalMatrix> s3{RationalMatrix::identity(3), kThreeCycle, kThreeCycle * kThreeCycle,
                                       permutation_matrix({1, 0, 2}), permutation_matrix({1, 0, 2}) * kThreeCycle,
                                       kThreeCycle * permutation_matrix({1, 0, 2})};
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<RationalMatrix> ext;
    for (const auto& g : s3) ext.push_back(exterior_power(g, k));
    const RationalMatrix stacked = RationalMatrix::vstack(ext[1] - ext[0], ext[3] - ext[0]);
    expect.equal(invariant_dimension(ext), ext[0].cols() - rank(stacked), "invariants vs common kernel");
  }
}

void groups_invariants(Expect& expect) {
  for (const auto& g : {symmetric_on_torus(4), close_group({LinearElement{kThreeCycle}, LinearElement{permutation_matrix({1, 0, 2})}})}) {
    const auto classes = conjugacy_classes(g);
    std::size_t total = 0;
    for (const auto& c : classes) {
      total += c.members.size();
      expect(g.size() % c.members.size() == 0, "class size divides |G|");
      for (auto e : c.members) expect.equal(centralizer(g, e).size() * c.members.size(), g.size(), "orbit-stabilizer");
    }
    expect.equal(total, g.size(), "classes partition G");
  }
  auto t = iota_perm(4), c = iota_perm(4);
  std::swap(t[0], t[1]);
  for (std::size_t i = 0; i < 4; ++i) c[i] = (i + 1) % 4;
  const FiniteGroup other = close_group({perm_element(c), perm_element(t)});
  auto class_keys = [](const FiniteGroup& g) {
    std::set<std::set<std::string>> out;
    for (const auto& k : conjugacy_classes(g)) {
      std::set<std::string> s;
      for (auto m : k.members) s.insert(element_key(g.element(m)));
      out.insert(s);
    }
    return out;
  };
  expect(class_keys(other) == class_keys(symmetric_on_torus(4)), "classes independent of generator order");
}

void polyforms_invariants(Expect& expect) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t total = 1; total <= 5; ++total) {
      for (std::size_t q = 0; q <= std::min(m, total); ++q) {
        const RationalMatrix out = de_rham_matrix(m, total - q, q);
        const RationalMatrix in = q == 0 ? RationalMatrix(form_space_dim(m, total, 0), 0) : de_rham_matrix(m, total - q + 1, q - 1);
        expect.equal(homology_dim(in, out), 0, "Poincare exactness m=" + std::to_string(m));
      }
    }
  }
  const RationalMatrix t = permutation_matrix({1, 0, 2});
  const RationalMatrix f{{1, 0}, {2, 1}, {0, -1}};
  for (std::size_t c = 0; c <= 3; ++c) {
    for (std::size_t q = 0; q <= 3; ++q) {
      expect(action_on_forms(t * kThreeCycle, c, q) == action_on_forms(t, c, q) * action_on_forms(kThreeCycle, c, q),
             "action is a homomorphism");
      if (c >= 1 && q <= 1)
        expect(de_rham_matrix(2, c, q) * substitution_matrix(f, c, q) == substitution_matrix(f, c - 1, q + 1) * de_rham_matrix(3, c, q),
               "restriction commutes with d");
    }
  }
}

void koszul_invariants(Expect& expect) {
  for (const auto& g : {kMinusOne, kSwap, kDiag2, kThreeCycle, RationalMatrix{{0, -1}, {1, 0}}}) {
    const auto t = koszul_restriction_dims(g, 4);  // throws on disagreement
    expect(!t.empty(), "restriction table " + g.str());
  }
  const RationalMatrix f{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}};
  const RationalMatrix permuted{{0, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  expect(koszul_homology_dims(build_koszul(3, f, 4), 4) == koszul_homology_dims(build_koszul(3, permuted, 4), 4),
         "basis order independence");
  const KoszulComplex x = build_koszul(1, RationalMatrix{{1}}, 4), zero = build_koszul(1, RationalMatrix{{0}}, 4);
  expect(koszul_kunneth_check(x, zero, 4), "Kunneth");
}

void hochschild_invariants(Expect& expect) {
  for (const auto& g : {kMinusOne, kSwap, kDiag2, kThreeCycle}) {
    // b_g and B_g commute with the diagonal action of the centralizer
    const PolynomialBarComplex bar(g, 3);
    for (std::size_t D = 0; D <= 3; ++D) {
      for (std::size_t q = 0; q <= 2; ++q) {
        const RationalMatrix h = bar.diagonal_action(g, q, D), h1 = bar.diagonal_action(g, q + 1, D);
        expect(bar.connes_B(q, D) * h == h1 * bar.connes_B(q, D), "B_g equivariant " + g.str());
        expect(bar.b(q + 1, D) * h1 == h * bar.b(q + 1, D), "b_g equivariant " + g.str());
      }
    }
  }
  const auto hc = hc_twisted_dims(RationalMatrix{{1}}, 3, 4);
  // HC of Q[x]: Q[x] in n = 0, constants in even n >= 2
  for (std::size_t D = 0; D <= 4; ++D) {
    expect.equal(lookup(hc, 0, D), 1, "HC_0 of Q[x] " + at(0, D));
    expect.equal(lookup(hc, 1, D), 0, "HC_1 of Q[x] " + at(1, D));
    expect.equal(lookup(hc, 2, D), D == 0 ? 1 : 0, "HC_2 of Q[x] " + at(2, D));
  }
}

void findim_invariants(Expect& expect) {
  auto z2 = std::make_shared<const FiniteGroup>(close_group({LinearElement{kMinusOne}}));
  const FinDimAlgebra qz2 = findim_crossed_product(scalar_algebra(), z2, {RationalMatrix{{1}}, RationalMatrix{{1}}});
  expect(findim_hh_dims(qz2, 2).total == std::vector<std::size_t>{2, 0, 0}, "HH(Q[Z/2])");
  expect(findim_hh_dims(matrix_algebra(2), 2).total == std::vector<std::size_t>{1, 0, 0}, "HH(M_2) Morita invariance");
}

void crossprod_invariants(Expect& expect) {
  const FiniteGroup z4 = close_group({MonomialElement({1, 0}, {Rational(1, 4), 0})});
  for (const auto& c : hp_report(z4).per_class)
    if (std::holds_alternative<EmptyFixed>(c.fixed)) expect.equal(c.hp[0] + c.hp[1], 0, "empty fixed set");
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto t = hp_report(close_group({perm_element(iota_perm(r))}));
    expect.equal(t.hp_totals[0], std::size_t{1} << (r - 1), "H^even(T^r)");
    expect.equal(t.hp_totals[1], std::size_t{1} << (r - 1), "H^odd(T^r)");
    const auto c = hp_report(close_group({LinearElement{RationalMatrix::identity(r)}}));
    expect(c.hp_totals == std::array<std::size_t, 2>{1, 0}, "H^*(C^r)");
  }
  const FiniteGroup s3 = close_group({LinearElement{kThreeCycle}, LinearElement{permutation_matrix({1, 0, 2})}});
  hh_graded_report(s3, 2, 2, true);  // throws on oracle disagreement
  hc_graded_report(s3, 2, 2, true);
  hc_graded_report(close_group({LinearElement{kSwap}}), 3, 3, true);
  expect(true, "oracle agreement");
}

void weyl_invariants(Expect& expect) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> count = [&](std::size_t n, std::size_t k) -> std::size_t {
    if (n == 0) return 1;
    if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
    std::size_t s = 0;
    for (std::size_t p = 1; p <= std::min(n, k); ++p) s += count(n - p, p);
    return memo[{n, k}] = s;
  };
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ps = partitions(n);
    expect.equal(ps.size(), count(n, n), "partition count n=" + std::to_string(n));
    for (const auto& l : ps) {
      std::vector<std::size_t> type;
      for (const auto& c : permutation_cycles(sigma_lambda(l))) type.push_back(c.size());
      std::sort(type.rbegin(), type.rend());
      expect(type == l, "cycle type of sigma_lambda");
    }
    const WeylReport w = hp_weyl_formula(n);
    expect.equal(w.hp0, w.hp1, "HP_0 = HP_1");
  }
}

const std::vector<Check>& invariant_checks() {
  static const std::vector<Check> list{
      {"exactla/invariants", "rank-nullity, change of basis, invariants", 0, exactla_invariants},
      {"groups/invariants", "orbit-stabilizer, generator order", 0, groups_invariants},
      {"polyforms/invariants", "Poincare lemma, functoriality", 0, polyforms_invariants},
      {"koszul/invariants", "restriction, basis order, Kunneth", 0, koszul_invariants},
      {"hochschild/invariants", "equivariance, HC of a line", 0, hochschild_invariants},
      {"findim/invariants", "group algebra and Morita invariance", 0, findim_invariants},
      {"crossprod/invariants", "empty fixed sets, point classes, oracles", 0, crossprod_invariants},
      {"weyl/invariants", "partitions and cycle types", 0, weyl_invariants},
  };
  return list;
}

}  // namespace

CheckResult run_criterion(int k) {
  if (k < 1 || k > kCriterionCount) throw InvalidArgument("no acceptance criterion " + std::to_string(k));
  return run_check(criteria()[k - 1]);
}

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  for (const auto& c : criteria()) out.push_back(run_check(c));
  return out;
}

std::vector<CheckResult> run_invariant_suite() {
  std::vector<CheckResult> out;
  for (const auto& c : invariant_checks()) out.push_back(run_check(c));
  return out;
}

std::vector<CheckResult> run_selftest(const std::function<void(const CheckResult&)>& progress) {
  std::vector<CheckResult> out;
  for (const auto* list : {&criteria(), &invariant_checks()}) {
    for (const auto& c : *list) {
      out.push_back(run_check(c));
      if (progress) progress(out.back());
    }
  }
  return out;
}

std::string format_result(const CheckResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", r.seconds);
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << time;
  if (r.budget_seconds > 0) os << " of " << r.budget_seconds << "s";
  os << ") " << r.detail;
  return os.str();
}

}  // namespace orbhc
