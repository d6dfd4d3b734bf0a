#include "doctest.h"

#include <vector>

#include "orbhc/errors.hpp"
#include "orbhc/hochschild.hpp"
#include "orbhc/koszul.hpp"
#include "orbhc/polyforms.hpp"

using namespace orbhc;

namespace {

const RationalMatrix kMinusOne{{-1}};
const RationalMatrix kId1{{1}};
const RationalMatrix kSwap{{0, 1}, {1, 0}};
const RationalMatrix kThreeCycle{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
const RationalMatrix kDiag{{-1, 0}, {0, 1}};
const RationalMatrix kRot4{{0, -1}, {1, 0}};

std::vector<RationalMatrix> sample_gs() { return {kId1, kMinusOne, kSwap, kDiag, kRot4, kThreeCycle}; }

std::size_t index_of(const TensorSpace& s, const Tensor& t) { return s.index(t).value(); }

std::uint32_t mono(const MonomialTable& table, Exponent e) {
  return static_cast<std::uint32_t>(table.id(e));
}

}  // namespace

TEST_CASE("tensor spaces respect reduced slots") {
  const MonomialTable table(1, 3);
  const TensorSpace bar(table, 2, 2, 1, 2);
  CHECK(bar.size() == 2);  // 1 (x) x^2, x (x) x
  CHECK(!bar.index(Tensor{mono(table, {2}), mono(table, {0})}).has_value());
  CHECK_THROWS_AS(TensorSpace(table, 3, 3, 1, 3, 2), SizeLimitExceeded);
}

TEST_CASE("b_g examples") {
  CHECK(b_twisted(kId1, 1, 1).is_zero());

  const PolynomialBarComplex bar(kMinusOne, 2);
  const auto& src = bar.bar_space(1, 2);
  const auto& dst = bar.bar_space(0, 2);
  const auto& t = bar.monomials();
  const RationalMatrix b = bar.b(1, 2);
  const std::size_t xx = index_of(src, {mono(t, {1}), mono(t, {1})});
  const std::size_t x2 = index_of(dst, {mono(t, {2})});
  CHECK(b(x2, xx) == -2);

  for (const auto& g : sample_gs()) {
    const RationalMatrix b0 = b_twisted(g, 0, 2);
    CHECK(b0.rows() == 0);
    CHECK(b0.is_zero());
  }
}

TEST_CASE("b'_g examples") {
  // q = 1: a_0 (x) a_1 -> a_0 g(a_1)
  const PolynomialBarComplex bar(kSwap, 2);
  const auto& t = bar.monomials();
  const RationalMatrix bp = bar.b_prime(1, 2);
  const auto& src = bar.resolution_space(1, 2);
  const auto& dst = bar.resolution_space(0, 2);
  const std::size_t col = index_of(src, {mono(t, {1, 0}), mono(t, {1, 0})});
  CHECK(bp(index_of(dst, {mono(t, {1, 1})}), col) == 1);
  CHECK(bp.column(col) == RationalMatrix::identity(dst.size()).column(index_of(dst, {mono(t, {1, 1})})));

  // g = 1: 1 (x) x (x) x -> x (x) x - 1 (x) x^2
  const PolynomialBarComplex plain(kId1, 2);
  const auto& u = plain.monomials();
  const RationalMatrix bp2 = plain.b_prime(2, 2);
  const std::size_t c = index_of(plain.resolution_space(2, 2), {mono(u, {0}), mono(u, {1}), mono(u, {1})});
  const auto& p1 = plain.resolution_space(1, 2);
  RationalVector want(p1.size());
  want[index_of(p1, {mono(u, {1}), mono(u, {1})})] = 1;
  want[index_of(p1, {mono(u, {0}), mono(u, {2})})] = -1;
  CHECK(bp2.column(c) == want);
}

TEST_CASE("b_g and b'_g square to zero and s_g contracts b'_g") {
  for (const auto& g : sample_gs()) {
    const PolynomialBarComplex bar(g, 3);
    for (std::size_t D = 0; D <= 3; ++D) {
      for (std::size_t q = 2; q <= 4; ++q) {
        CHECK((bar.b(q - 1, D) * bar.b(q, D)).is_zero());
        CHECK((bar.b_prime(q - 1, D) * bar.b_prime(q, D)).is_zero());
      }
      const RationalMatrix id0 = RationalMatrix::identity(bar.resolution_space(0, D).size());
      CHECK(bar.b_prime(1, D) * bar.contraction(0, D) == id0);
      for (std::size_t n = 1; n <= 3; ++n) {
        const RationalMatrix lhs =
            bar.contraction(n - 1, D) * bar.b_prime(n, D) + bar.b_prime(n + 1, D) * bar.contraction(n, D);
        CHECK(lhs == RationalMatrix::identity(bar.resolution_space(n, D).size()));
      }
    }
  }
}

TEST_CASE("the untwisted extra degeneracy only contracts b' for g = 1") {
  // s_g reduces to 1 (x) x when g = 1; for the swap it differs.
  const PolynomialBarComplex plain(RationalMatrix::identity(2), 2);
  const PolynomialBarComplex swap(kSwap, 2);
  CHECK(plain.contraction(1, 2) != swap.contraction(1, 2));
}

TEST_CASE("t_g and B_g examples") {
  const PolynomialBarComplex bar(kMinusOne, 2);
  const auto& t = bar.monomials();
  const auto& u = bar.unreduced_space(1, 1);
  const RationalMatrix cyc = bar.cyclic(1, 1);
  const std::size_t one_x = index_of(u, {mono(t, {0}), mono(t, {1})});
  const std::size_t x_one = index_of(u, {mono(t, {1}), mono(t, {0})});
  // t(1 (x) x) = -x (x) g^-1(1), and g . t(1 (x) x) = -g(x) (x) 1
  CHECK(cyc(x_one, one_x) == -1);
  CHECK(cyc(one_x, one_x) == 0);
  // t(x (x) 1) = -1 (x) g^-1(x) = 1 (x) x
  CHECK(cyc(one_x, x_one) == 1);

  // B(a) = 1 (x) a
  const PolynomialBarComplex line(kId1, 2);
  const RationalMatrix B0 = line.connes_B(0, 2);
  const auto& b1 = line.bar_space(1, 2);
  RationalVector want(b1.size());
  want[index_of(b1, {mono(t, {0}), mono(t, {2})})] = 1;
  CHECK(B0.column(0) == want);
  CHECK(line.connes_B(0, 0).is_zero());
}

TEST_CASE("t_g^{q+1} is the diagonal action of g^-1") {
  for (const auto& g : {kSwap, kMinusOne, kRot4}) {
    const PolynomialBarComplex bar(g, 3);
    const auto g_inv = monomial_action(bar.monomials(), inverse(g));
    for (std::size_t q = 0; q <= 2; ++q) {
      const auto& u = bar.unreduced_space(q, 3);
      RationalMatrix diag(u.size(), u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        std::vector<std::pair<Tensor, Rational>> terms{{Tensor{}, Rational(1)}};
        for (auto slot : u.at(i)) {
          std::vector<std::pair<Tensor, Rational>> next;
          for (const auto& [t, c] : terms)
            for (const auto& [id, a] : g_inv[slot]) {
              Tensor e = t;
              e.push_back(id);
              next.emplace_back(e, c * a);
            }
          terms = std::move(next);
        }
        for (const auto& [t, c] : terms) diag(*u.index(t), i) += c;
      }
      const RationalMatrix t = bar.cyclic(q, 3);
      RationalMatrix power = t;
      for (std::size_t k = 1; k <= q; ++k) power = t * power;
      CHECK(power == diag);
    }
  }
}

TEST_CASE("B_g equals s_g sum t_g^k computed on unreduced chains") {
  for (const auto& g : {kSwap, kMinusOne, kRot4}) {
    const PolynomialBarComplex bar(g, 3);
    for (std::size_t D = 0; D <= 3; ++D) {
      for (std::size_t q = 0; q + 1 <= D; ++q) {
        const auto& bq = bar.bar_space(q, D);
        const auto& uq = bar.unreduced_space(q, D);
        const auto& bq1 = bar.bar_space(q + 1, D);
        RationalMatrix incl(uq.size(), bq.size());
        for (std::size_t i = 0; i < bq.size(); ++i) incl(*uq.index(bq.at(i)), i) = 1;
        const auto& uq1 = bar.unreduced_space(q + 1, D);
        const auto g_inv = monomial_action(bar.monomials(), inverse(g));
        RationalMatrix s_then_project(bq1.size(), uq.size());
        for (std::size_t i = 0; i < uq.size(); ++i) {
          for (const auto& [id, c] : g_inv[uq.at(i)[0]]) {
            Tensor shifted{0, id};
            shifted.insert(shifted.end(), uq.at(i).begin() + 1, uq.at(i).end());
            if (const auto row = bq1.index(shifted)) s_then_project(*row, i) += c;
          }
        }
        const RationalMatrix t = bar.cyclic(q, D);
        RationalMatrix sum = RationalMatrix::identity(uq.size()), power = sum;
        for (std::size_t k = 1; k <= q; ++k) {
          power = t * power;
          sum += power;
        }
        CHECK(s_then_project * sum * incl == bar.connes_B(q, D));
      }
    }
  }
}

TEST_CASE("B_g and b_g form a mixed complex on <g>-invariants") {
  for (const auto& g : {kSwap, kMinusOne, kThreeCycle}) {
    const PolynomialBarComplex bar(g, 3);
    const auto group = cyclic_group(g);
    for (std::size_t D = 0; D <= 3; ++D) {
      for (std::size_t q = 0; q + 2 <= 4; ++q) {
        std::vector<RationalMatrix> rep;
        for (const auto& h : group) rep.push_back(bar.diagonal_action(h, q, D));
        const RationalMatrix p = averaging_projector(rep);
        // B and b commute with the diagonal action, so they preserve invariants.
        CHECK(bar.connes_B(q, D) * bar.diagonal_action(g, q, D) ==
              bar.diagonal_action(g, q + 1, D) * bar.connes_B(q, D));
        CHECK((bar.connes_B(q + 1, D) * bar.connes_B(q, D) * p).is_zero());
        if (q >= 1) {
          const RationalMatrix anti = bar.b(q + 1, D) * bar.connes_B(q, D) + bar.connes_B(q - 1, D) * bar.b(q, D);
          CHECK((anti * p).is_zero());
        } else {
          CHECK((bar.b(1, D) * bar.connes_B(0, D) * p).is_zero());
        }
      }
    }
  }
}

TEST_CASE("hh_twisted_dims examples") {
  const auto id = hh_twisted_dims(kId1, 3, 4);
  for (std::size_t D = 0; D <= 4; ++D) {
    CHECK(id.at({0, D}) == 1);
    CHECK(id.at({1, D}) == (D >= 1 ? 1u : 0u));
    CHECK(id.at({2, D}) == 0);
  }
  const auto minus = hh_twisted_dims(kMinusOne, 3, 4);
  for (std::size_t D = 0; D <= 4; ++D) {
    CHECK(minus.at({0, D}) == (D == 0 ? 1u : 0u));
    for (std::size_t q = 1; q <= 3; ++q) CHECK(minus.at({q, D}) == 0);
  }
  const auto swap = hh_twisted_dims(kSwap, 3, 4);
  for (std::size_t D = 0; D <= 4; ++D) {
    CHECK(swap.at({0, D}) == 1);
    CHECK(swap.at({1, D}) == (D >= 1 ? 1u : 0u));
    CHECK(swap.at({2, D}) == 0);
  }
}

TEST_CASE("hh_twisted_dims matches forms on the fixed subspace") {
  for (const auto& g : sample_gs()) {
    const std::size_t m = g.rows() - rank(g - RationalMatrix::identity(g.rows()));
    const std::size_t d_max = g.rows() == 3 ? 3 : 4;
    const auto dims = hh_twisted_dims(g, 3, d_max);
    for (std::size_t D = 0; D <= d_max; ++D)
      for (std::size_t q = 0; q <= 3; ++q)
        CHECK(dims.at({q, D}) == (q <= D ? form_space_dim(m, D - q, q) : 0u));
  }
}

TEST_CASE("kappa_E examples") {
  CHECK(kappa_E(kSwap, 0, 2) == RationalMatrix::identity(3));

  const PolynomialBarComplex bar(kSwap, 2);
  const auto& t = bar.monomials();
  const RationalMatrix k1 = bar.kappa(1, 1);
  // a = 1, e_0 -> 1 (x) x_0
  const auto& b11 = bar.bar_space(1, 1);
  CHECK(k1(index_of(b11, {mono(t, {0, 0}), mono(t, {1, 0})}), 0) == 1);
  CHECK(k1.column(0)[index_of(b11, {mono(t, {0, 0}), mono(t, {0, 1})})] == 0);

  const RationalMatrix k2 = bar.kappa(2, 2);
  const auto& b22 = bar.bar_space(2, 2);
  RationalVector want(b22.size());
  want[index_of(b22, {mono(t, {0, 0}), mono(t, {1, 0}), mono(t, {0, 1})})] = 1;
  want[index_of(b22, {mono(t, {0, 0}), mono(t, {0, 1}), mono(t, {1, 0})})] = -1;
  CHECK(k2.column(0) == want);
}

TEST_CASE("kappa_E is a chain map and a quasi-isomorphism") {
  for (const auto& g : sample_gs()) {
    const std::size_t n = g.rows();
    const std::size_t d_max = n == 3 ? 3 : 4;
    const PolynomialBarComplex bar(g, d_max);
    const KoszulComplex k = build_koszul(n, twisted_koszul_map(g), d_max);
    for (std::size_t D = 0; D <= d_max; ++D) {
      for (std::size_t p = 1; p <= std::min(n, D); ++p) {
        CHECK(bar.b(p, D) * bar.kappa(p, D) == bar.kappa(p - 1, D) * k.differential(p, D));
      }
    }
    const auto hh = hh_twisted_dims(g, 3, d_max);
    const auto kz = koszul_homology_dims(k, d_max);
    for (std::size_t D = 0; D <= d_max; ++D) {
      for (std::size_t q = 0; q <= 3; ++q) {
        const std::size_t kdim = q <= n ? kz.at({q, D}) : 0;
        CHECK(hh.at({q, D}) == kdim);
      }
    }
  }
}

TEST_CASE("chkr_chi examples") {
  // chi(a_0) = a_0 restricted
  const PolyForm w0 = chkr_chi(kSwap, 0, 1, RationalVector{1, 0});
  CHECK(w0.m == 1);
  CHECK(w0.coeffs == RationalVector{1});

  // swap: chi(x (x) y) = u du on the diagonal
  const PolynomialBarComplex bar(kSwap, 2);
  const auto& t = bar.monomials();
  const auto& b12 = bar.bar_space(1, 2);
  RationalVector chain(b12.size());
  chain[index_of(b12, {mono(t, {1, 0}), mono(t, {0, 1})})] = 1;
  const PolyForm w = chkr_chi(kSwap, 1, 2, chain);
  CHECK(w.m == 1);
  CHECK(w.c == 1);
  CHECK(w.q == 1);
  CHECK(w.terms() == FormTerms{{{Exponent{1}, Subset{0}}, Rational(1)}});
}

TEST_CASE("chi_g kills boundaries and intertwines B_g with d") {
  for (const auto& g : {kSwap, kMinusOne, kId1, kDiag, kThreeCycle}) {
    const PolynomialBarComplex bar(g, 3);
    const std::size_t m = bar.fixed_subspace().cols();
    for (std::size_t D = 0; D <= 3; ++D) {
      for (std::size_t q = 1; q <= 3; ++q) {
        const RationalMatrix boundary = bar.chi(q - 1, D) * bar.b(q, D);
        CHECK(boundary.is_zero());
      }
      for (std::size_t q = 0; q + 1 <= D; ++q) {
        CHECK(bar.chi(q + 1, D) * bar.connes_B(q, D) == de_rham_matrix(m, D - q, q) * bar.chi(q, D));
      }
    }
  }
}

TEST_CASE("hc_twisted_dims examples") {
  const auto id = hc_twisted_dims(kId1, 3, 4);
  for (std::size_t D = 0; D <= 4; ++D) {
    CHECK(id.at({0, D}) == 1);
    CHECK(id.at({1, D}) == 0);
    CHECK(id.at({2, D}) == (D == 0 ? 1u : 0u));
  }
  const auto minus = hc_twisted_dims(kMinusOne, 4, 4);
  for (std::size_t D = 0; D <= 4; ++D)
    for (std::size_t n = 0; n <= 4; ++n)
      CHECK(minus.at({n, D}) == (D == 0 && n % 2 == 0 ? 1u : 0u));
  for (const auto& g : {kSwap, kThreeCycle}) {
    const auto dims = hc_twisted_dims(g, 4, 2);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(dims.at({n, 0}) == (n % 2 == 0 ? 1u : 0u));
  }
}

TEST_CASE("invariant dims reject groups that do not commute with g") {
  CHECK_THROWS_AS(invariant_hh_dims(kSwap, {kDiag}, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(invariant_hc_dims(kSwap, {RationalMatrix::identity(2)}, 1, 1), InvalidArgument);
}

TEST_CASE("cyclic_group and order agree") {
  CHECK(cyclic_group(kRot4).size() == 4);
  CHECK(PolynomialBarComplex(kThreeCycle, 1).order() == 3);
}
