#include "doctest.h"

#include <numeric>

#include "orbhc/crossprod.hpp"
#include "orbhc/errors.hpp"

using namespace orbhc;

namespace {

std::vector<std::size_t> iota_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

MonomialElement perm_only(std::vector<std::size_t> p) {
  const std::size_t n = p.size();
  return MonomialElement(std::move(p), RationalVector(n));
}

FiniteGroup sym_on_torus(std::size_t n) {
  auto t = iota_perm(n), c = iota_perm(n);
  if (n >= 2) std::swap(t[0], t[1]);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return close_group({perm_only(t), perm_only(c)});
}

std::size_t find_element(const FiniteGroup& g, const GroupElement& e) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (element_key(g.element(i)) == element_key(e)) return i;
  FAIL("element not in group");
  return 0;
}

const RationalMatrix swap2{{0, 1}, {1, 0}};

}  // namespace

TEST_CASE("fixed_set examples") {
  const auto id = fixed_set(perm_only(iota_perm(3)));
  REQUIRE(std::holds_alternative<TorusFixed>(id));
  CHECK(std::get<TorusFixed>(id).rank() == 3);

  const auto cyc = fixed_set(perm_only({1, 2, 0}));
  REQUIRE(std::holds_alternative<TorusFixed>(cyc));
  CHECK(std::get<TorusFixed>(cyc).rank() == 1);

  CHECK(std::holds_alternative<EmptyFixed>(fixed_set(MonomialElement({0}, {Rational(1, 2)}))));
  CHECK_FALSE(fixed_dimension(EmptyFixed{}).has_value());

  // a 2-cycle whose shifts cancel still has fixed points
  const auto cancel = fixed_set(MonomialElement({1, 0}, {Rational(1, 3), Rational(2, 3)}));
  CHECK(fixed_dimension(cancel) == 1u);

  const auto lin = fixed_set(LinearElement{swap2});
  REQUIRE(std::holds_alternative<LinearFixed>(lin));
  const RationalMatrix& b = std::get<LinearFixed>(lin).basis;
  REQUIRE(b.cols() == 1);
  CHECK(b(0, 0) == b(1, 0));
  CHECK(fixed_dimension(fixed_set(LinearElement{RationalMatrix{{-1}}})) == 0u);
}

TEST_CASE("centralizer action on H^1 of the fixed torus") {
  const FiniteGroup s2 = sym_on_torus(2);
  const auto id_fixed = std::get<TorusFixed>(fixed_set(s2.element(0)));
  const auto act = centralizer_action_on_torus_h1(s2, 0, id_fixed);
  REQUIRE(act.size() == 2);
  CHECK(act[1] == swap2);

  const std::size_t sw = find_element(s2, perm_only({1, 0}));
  const auto sw_fixed = std::get<TorusFixed>(fixed_set(s2.element(sw)));
  for (const auto& m : centralizer_action_on_torus_h1(s2, sw, sw_fixed)) CHECK(m == RationalMatrix::identity(1));

  const FiniteGroup s4 = sym_on_torus(4);
  const std::size_t g = find_element(s4, perm_only({1, 0, 3, 2}));
  const auto fixed = std::get<TorusFixed>(fixed_set(s4.element(g)));
  CHECK(fixed.rank() == 2);
  const auto cent = centralizer(s4, g);
  const auto mats = centralizer_action_on_torus_h1(s4, g, fixed);
  REQUIRE(mats.size() == cent.size());
  CHECK(cent.size() == 8);
  const std::size_t h = find_element(s4, perm_only({2, 3, 0, 1}));
  const auto pos = std::find(cent.begin(), cent.end(), h) - cent.begin();
  CHECK(mats[pos] == swap2);
  // closed under composition
  for (const auto& a : mats)
    for (const auto& b : mats) CHECK(std::find(mats.begin(), mats.end(), a * b) != mats.end());
}

TEST_CASE("torus_hp_contribution examples") {
  CHECK(torus_hp_contribution(1, {}, 0) == 1);
  CHECK(torus_hp_contribution(1, {}, 1) == 1);
  const std::vector<RationalMatrix> s2{RationalMatrix::identity(2), swap2};
  CHECK(torus_hp_contribution(2, s2, 0) == 1);
  CHECK(torus_hp_contribution(2, s2, 1) == 1);
  CHECK(torus_hp_contribution(0, {}, 0) == 1);
  CHECK(torus_hp_contribution(0, {}, 1) == 0);
  for (std::size_t r = 1; r <= 5; ++r) {
    CHECK(torus_hp_contribution(r, {}, 0) == (std::size_t{1} << (r - 1)));
    CHECK(torus_hp_contribution(r, {}, 1) == (std::size_t{1} << (r - 1)));
  }
}

TEST_CASE("hp_report examples") {
  const auto s2 = hp_report(sym_on_torus(2));
  CHECK(s2.hp_totals == std::array<std::size_t, 2>{2, 2});
  REQUIRE(s2.per_class.size() == 2);
  CHECK(s2.per_class[0].hp == std::array<std::size_t, 2>{1, 1});
  CHECK(s2.per_class[1].hp == std::array<std::size_t, 2>{1, 1});

  const auto neg = hp_report(close_group({MonomialElement({0}, {Rational(1, 2)})}));
  REQUIRE(neg.per_class.size() == 2);
  CHECK(neg.per_class[1].hp == std::array<std::size_t, 2>{0, 0});
  CHECK(std::holds_alternative<EmptyFixed>(neg.per_class[1].fixed));
  CHECK(neg.hp_totals == std::array<std::size_t, 2>{1, 1});

  const RationalMatrix c3{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const auto s3 = hp_report(close_group({LinearElement{c3}, LinearElement{RationalMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}}));
  CHECK(s3.per_class.size() == 3);
  CHECK(s3.hp_totals == std::array<std::size_t, 2>{3, 0});

  // trivial group: cohomology of the space itself
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto t = hp_report(close_group({perm_only(iota_perm(r))}));
    CHECK(t.hp_totals == std::array<std::size_t, 2>{std::size_t{1} << (r - 1), std::size_t{1} << (r - 1)});
    const auto c = hp_report(close_group({LinearElement{RationalMatrix::identity(r)}}));
    CHECK(c.hp_totals == std::array<std::size_t, 2>{1, 0});
  }
}

TEST_CASE("sigma_(2,2) class of S_4 on T^4 contributes (1, 1)") {
  const FiniteGroup s4 = sym_on_torus(4);
  const std::size_t g = find_element(s4, perm_only({1, 0, 3, 2}));
  const auto rep = hp_report(s4);
  CHECK(rep.per_class.size() == 5);
  bool seen = false;
  for (const auto& c : rep.per_class) {
    const auto cls = conjugacy_classes(s4);
    for (const auto& k : cls) {
      if (k.representative != c.representative) continue;
      if (std::find(k.members.begin(), k.members.end(), g) == k.members.end()) continue;
      seen = true;
      CHECK(fixed_dimension(c.fixed) == 2u);
      CHECK(c.hp == std::array<std::size_t, 2>{1, 1});
    }
  }
  CHECK(seen);
  CHECK(rep.hp_totals == std::array<std::size_t, 2>{7, 7});
}

TEST_CASE("hh_graded_report examples") {
  const auto line = hh_graded_report(close_group({LinearElement{RationalMatrix::identity(1)}}), 2, 4, true);
  for (std::size_t D = 0; D <= 4; ++D) {
    CHECK(line.totals.at({0, D}) == 1);
    CHECK(line.totals.at({1, D}) == (D >= 1 ? 1u : 0u));
    CHECK(line.totals.at({2, D}) == 0);
  }

  const auto s2 = hh_graded_report(close_group({LinearElement{swap2}}), 3, 4, true);
  REQUIRE(s2.per_class.size() == 2);
  CHECK(s2.per_class[0].table.at({0, 2}) == 2);
  for (std::size_t D = 1; D <= 4; ++D) CHECK(s2.per_class[1].table.at({1, D}) == 1);
  REQUIRE(s2.per_class[1].oracle.has_value());
  for (const auto& [key, v] : s2.per_class[1].table) CHECK(s2.per_class[1].oracle->at(key) == v);

  CHECK_THROWS_AS(hh_graded_report(sym_on_torus(2), 1, 1), InvalidArgument);
}

TEST_CASE("hh and hc oracles agree on S_3 and on -1") {
  const RationalMatrix c3{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const RationalMatrix t3{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const FiniteGroup s3 = close_group({LinearElement{c3}, LinearElement{t3}});
  CHECK_NOTHROW(hh_graded_report(s3, 2, 2, true));
  CHECK_NOTHROW(hc_graded_report(s3, 2, 2, true));

  const FiniteGroup neg = close_group({LinearElement{RationalMatrix{{-1}}}});
  const auto hc = hc_graded_report(neg, 3, 4, true);
  // identity class: HC of C[x] restricted to even functions; -1 class: a point
  REQUIRE(hc.per_class.size() == 2);
  CHECK(hc.per_class[1].table.at({0, 0}) == 1);
  CHECK(hc.per_class[1].table.at({2, 0}) == 1);
  CHECK(hc.per_class[1].table.at({1, 0}) == 0);
  for (std::size_t D = 1; D <= 4; ++D) CHECK(hc.per_class[1].table.at({0, D}) == 0);
  CHECK(hc.per_class[0].table.at({0, 2}) == 1);
  CHECK(hc.per_class[0].table.at({0, 1}) == 0);
  CHECK(hc.per_class[0].table.at({1, 2}) == 0);
}

TEST_CASE("classes with empty fixed set contribute nothing") {
  const FiniteGroup z4 = close_group({MonomialElement({1, 0}, {Rational(1, 4), 0})});
  const auto rep = hp_report(z4);
  for (const auto& c : rep.per_class) {
    if (std::holds_alternative<EmptyFixed>(c.fixed)) CHECK(c.hp == std::array<std::size_t, 2>{0, 0});
  }
  const auto cls = classes_report(z4);
  CHECK(cls.per_class.size() == z4.size());
  CHECK(cls.totals.empty());
}
