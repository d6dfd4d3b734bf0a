#include "doctest.h"

#include <random>

#include "orbhc/errors.hpp"
#include "orbhc/exactla.hpp"

using namespace orbhc;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
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

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational(" 7 / 3 ") == Rational(7, 3));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(mod_one(Rational(-1, 3)) == Rational(2, 3));
  CHECK(mod_one(Rational(5, 2)) == Rational(1, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix{{1, 1}, {1, 1}}) == 1);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(rank(RationalMatrix::identity(n)) == n);
}

TEST_CASE("kernel_basis examples") {
  const auto k = kernel_basis(RationalMatrix{{1, 1}, {1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
  const auto k3 = kernel_basis(RationalMatrix{{1, -1, 0}, {0, 1, -1}});
  REQUIRE(k3.size() == 1);
  CHECK(k3[0] == RationalVector{1, 1, 1});
}

TEST_CASE("homology_dim examples") {
  CHECK(homology_dim(RationalMatrix(2, 0), RationalMatrix(0, 2)) == 2);
  CHECK(homology_dim(RationalMatrix::identity(2), RationalMatrix(0, 2)) == 0);
  CHECK(homology_dim(RationalMatrix{{1}, {1}}, RationalMatrix{{1, -1}}) == 0);
  CHECK_THROWS_AS(homology_dim(RationalMatrix{{1}, {0}}, RationalMatrix{{1, -1}}), CompositionNotZero);
}

TEST_CASE("invariant_dimension examples") {
  const std::vector<RationalMatrix> id{RationalMatrix::identity(3)};
  CHECK(invariant_dimension(id) == 3);
  const std::vector<RationalMatrix> pm{RationalMatrix::identity(2), RationalMatrix::identity(2) * Rational(-1)};
  CHECK(invariant_dimension(pm) == 0);
  const std::vector<RationalMatrix> sw{RationalMatrix::identity(2), RationalMatrix{{0, 1}, {1, 0}}};
  CHECK(invariant_dimension(sw) == 1);
  const std::vector<RationalMatrix> bad{RationalMatrix::identity(2), RationalMatrix{{1, 0}, {0, 0}}};
  CHECK_THROWS_AS(invariant_dimension(bad), NonIntegralTrace);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    RationalMatrix m = random_matrix(rng, r, c, -1, 1);
    CHECK(rank(m) + kernel_basis(m).size() == c);
    for (const auto& v : kernel_basis(m)) {
      const RationalVector z = m * v;
      for (const auto& e : z) CHECK(e == 0);
    }
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("homology_dim is invariant under change of basis") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // U --a--> V --b--> W with b a = 0: b kills the image of a
    const RationalMatrix a = random_matrix(rng, 4, 3, -1, 1);
    const auto ker_dir = kernel_basis(a.transpose());
    RationalMatrix b(ker_dir.size(), 4);
    for (std::size_t i = 0; i < ker_dir.size(); ++i)
      for (std::size_t j = 0; j < 4; ++j) b(i, j) = ker_dir[i][j];
    const std::size_t h = homology_dim(a, b);
    const RationalMatrix pu = random_invertible(rng, 3), pv = random_invertible(rng, 4),
                         pw = random_invertible(rng, b.rows());
    CHECK(homology_dim(pv * a * inverse(pu), pw * b * inverse(pv)) == h);
  }
}

TEST_CASE("invariant_dimension matches the common kernel") {
  // S_3 permuting coordinates of Q^3 and its action on Lambda^2
  const RationalMatrix t{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, c{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  std::vector<RationalMatrix> g{RationalMatrix::identity(3), t, c, c * c, t * c, c * t};
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<RationalMatrix> ext;
    for (const auto& m : g) ext.push_back(exterior_power(m, k));
    const RationalMatrix stacked = RationalMatrix::vstack(ext[1] - ext[0], ext[2] - ext[0]);
    CHECK(invariant_dimension(ext) == ext[0].cols() - rank(stacked));
  }
  const RationalMatrix p = averaging_projector(g);
  CHECK(p * p == p);
}

TEST_CASE("inverse, solve_in_span, exterior powers") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix m = random_invertible(rng, 4);
    CHECK((m * inverse(m)).is_identity());
    const RationalMatrix n = random_invertible(rng, 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(exterior_power(m * n, k) == exterior_power(m, k) * exterior_power(n, k));
    CHECK(exterior_power(m, 4)(0, 0) == exterior_power(m, 4).trace());
  }
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 1}, {1, 1}}), InvalidArgument);

  const RationalMatrix basis{{1, 0}, {1, 1}, {0, 1}};
  const RationalMatrix target{{2}, {5}, {3}};
  CHECK(solve_in_span(basis, target) == RationalMatrix{{2}, {3}});
  CHECK_THROWS_AS(solve_in_span(basis, RationalMatrix{{1}, {0}, {1}}), InvalidArgument);
  CHECK(column_space(RationalMatrix{{1, 2}, {2, 4}}).cols() == 1);
}

TEST_CASE("sparse rank agrees with dense rank") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix m = random_matrix(rng, 6, 7, -1, 1);
    const SparseMatrix s = SparseMatrix::from_dense(m);
    CHECK(sparse_rank(s) == rank(m));
    CHECK(s.to_dense() == m);
    const RationalMatrix n = random_matrix(rng, 7, 3, -1, 1);
    CHECK((s * SparseMatrix::from_dense(n)).to_dense() == m * n);
  }
}
