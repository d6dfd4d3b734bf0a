#include "doctest.h"

#include <set>

#include "orbhc/errors.hpp"
#include "orbhc/groups.hpp"
#include "orbhc/weyl.hpp"

using namespace orbhc;

namespace {

std::size_t partition_count(std::size_t n, std::size_t max_part) {
  if (n == 0) return 1;
  std::size_t total = 0;
  for (std::size_t p = 1; p <= std::min(n, max_part); ++p) total += partition_count(n - p, p);
  return total;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> out;
  for (const auto& c : permutation_cycles(p)) out.push_back(c.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(1) == std::vector<Partition>{{1}});
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto ps = partitions(n);
    CHECK(ps.size() == partition_count(n, n));
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i] > ps[i + 1]);
  }
  CHECK_THROWS_AS(partitions(0), InvalidArgument);
}

TEST_CASE("sigma_lambda and t_of_lambda") {
  CHECK(sigma_lambda({1, 1, 1}) == Permutation{0, 1, 2});
  CHECK(sigma_lambda({4}) == Permutation{1, 2, 3, 0});
  CHECK(sigma_lambda({2, 2}) == Permutation{1, 0, 3, 2});
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& l : partitions(n)) CHECK(cycle_type(sigma_lambda(l)) == l);
  CHECK(t_of_lambda({2, 1, 1}) == 2);
  CHECK(t_of_lambda({5}) == 1);
  CHECK(t_of_lambda({3, 2, 2, 1}) == 3);
  CHECK_THROWS_AS(sigma_lambda({1, 2}), InvalidArgument);
}

TEST_CASE("centralizer generators of sigma_lambda") {
  const Partition l{2, 2, 1};
  const auto sigma = sigma_lambda(l);
  std::vector<GroupElement> gens;
  for (const auto& p : cycle_generators(l)) gens.push_back(MonomialElement(p, RationalVector(5)));
  for (const auto& p : q_lambda_generators(l)) gens.push_back(MonomialElement(p, RationalVector(5)));
  CHECK(q_lambda_generators(l).size() == 1);
  const FiniteGroup c = close_group(gens);
  // |Z(sigma)| = prod_i i^{m_i} m_i! = (2^2 * 2!) * 1 = 8
  CHECK(c.size() == 8);
  const GroupElement s = MonomialElement(sigma, RationalVector(5));
  for (const auto& e : c.elements()) CHECK(element_key(compose(e, s)) == element_key(compose(s, e)));
}

TEST_CASE("hp_weyl_formula") {
  const std::vector<std::array<std::size_t, 2>> expected{{1, 1}, {2, 2}, {4, 4}, {7, 7}, {12, 12}};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto w = hp_weyl_formula(n);
    CHECK(w.hp0 == expected[n - 1][0]);
    CHECK(w.hp1 == expected[n - 1][1]);
    CHECK(w.per_lambda.size() == partitions(n).size());
    for (const auto& c : w.per_lambda) {
      CHECK(c.hp0 == (std::size_t{1} << (c.t - 1)));
      CHECK(c.invariant_hp0 == c.hp0);
      CHECK(c.invariant_hp1 == c.hp1);
    }
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto w = hp_weyl_formula(n);
    CHECK(w.hp0 == w.hp1);
  }
}

TEST_CASE("weyl_cross_check") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(weyl_cross_check(n));
  CHECK_THROWS_AS(weyl_cross_check(5), SizeLimitExceeded);
}
