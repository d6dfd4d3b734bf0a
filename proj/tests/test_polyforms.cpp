#include "doctest.h"

#include "orbhc/exactla.hpp"
#include "orbhc/polyforms.hpp"

using namespace orbhc;

namespace {

PolyForm form(std::size_t m, std::size_t c, std::size_t q, std::initializer_list<std::pair<std::pair<Exponent, Subset>, long>> terms) {
  FormTerms t;
  for (const auto& [key, v] : terms) add_form_term(t, key.first, key.second, v);
  return PolyForm::from_terms(m, c, q, t);
}

}  // namespace

TEST_CASE("form_space_dim examples") {
  CHECK(form_space_dim(1, 0, 0) == 1);
  CHECK(form_space_dim(2, 2, 1) == 6);
  CHECK(form_space_dim(1, 3, 2) == 0);
  CHECK(form_space_dim(0, 0, 0) == 1);
  CHECK(form_space_dim(0, 1, 0) == 0);
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t c = 0; c <= 3; ++c)
      for (std::size_t q = 0; q <= 3; ++q) CHECK(GradedFormSpace(m, c, q).size() == form_space_dim(m, c, q));
}

TEST_CASE("de_rham_d examples") {
  CHECK(de_rham_d(form(1, 1, 0, {{{{1}, {}}, 1}})) == form(1, 0, 1, {{{{0}, {0}}, 1}}));
  CHECK(de_rham_d(form(2, 1, 1, {{{{1, 0}, {1}}, 1}})) == form(2, 0, 2, {{{{0, 0}, {0, 1}}, 1}}));
  const PolyForm dc = de_rham_d(form(2, 0, 0, {{{{0, 0}, {}}, 5}}));
  for (const auto& v : dc.coeffs) CHECK(v == 0);
}

TEST_CASE("d o d = 0 and Poincare exactness") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t total = 0; total <= 5; ++total) {
      for (std::size_t q = 0; q + 1 <= total && q + 2 <= m + 1; ++q) {
        if (total < q + 2) continue;
        CHECK((de_rham_matrix(m, total - q - 1, q + 1) * de_rham_matrix(m, total - q, q)).is_zero());
      }
      if (total == 0) continue;
      // the complex Omega^0_total -> Omega^1_{total-1} -> ... is exact
      for (std::size_t q = 0; q <= std::min(m, total); ++q) {
        const RationalMatrix d_out = de_rham_matrix(m, total - q, q);
        const RationalMatrix d_in = q == 0 ? RationalMatrix(form_space_dim(m, total, 0), 0)
                                           : de_rham_matrix(m, total - q + 1, q - 1);
        CHECK(homology_dim(d_in, d_out) == 0);
      }
    }
  }
}

TEST_CASE("restrict_form examples") {
  const RationalMatrix diagonal{{1}, {1}};
  CHECK(restrict_form(form(2, 1, 1, {{{{1, 0}, {1}}, 1}}), diagonal) == form(1, 1, 1, {{{{1}, {0}}, 1}}));
  const RationalMatrix y_axis{{0}, {1}};
  const PolyForm r = restrict_form(form(2, 0, 1, {{{{0, 0}, {0}}, 1}}), y_axis);
  for (const auto& v : r.coeffs) CHECK(v == 0);
  const PolyForm w = form(2, 2, 1, {{{{2, 0}, {1}}, 3}, {{{1, 1}, {0}}, -1}});
  CHECK(restrict_form(w, RationalMatrix::identity(2)) == w);
}

TEST_CASE("restriction commutes with d") {
  const RationalMatrix f{{1, 0}, {2, 1}, {0, -1}};
  for (std::size_t c = 1; c <= 3; ++c) {
    for (std::size_t q = 0; q <= 2; ++q) {
      const RationalMatrix lhs = de_rham_matrix(2, c, q) * substitution_matrix(f, c, q);
      const RationalMatrix rhs = substitution_matrix(f, c - 1, q + 1) * de_rham_matrix(3, c, q);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("action_on_forms examples") {
  CHECK(action_on_forms(RationalMatrix::identity(3), 2, 1).is_identity());
  CHECK(action_on_forms(RationalMatrix{{-1}}, 1, 0) == RationalMatrix{{-1}});
  CHECK(action_on_forms(RationalMatrix{{0, 1}, {1, 0}}, 0, 2) == RationalMatrix{{-1}});
}

TEST_CASE("action_on_forms is a homomorphism and commutes with d") {
  const RationalMatrix t{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, c{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const RationalMatrix g{{1, 1, 0}, {0, 1, 0}, {0, 0, -1}};
  for (std::size_t deg = 0; deg <= 3; ++deg) {
    for (std::size_t q = 0; q <= 3; ++q) {
      CHECK(action_on_forms(t * c, deg, q) == action_on_forms(t, deg, q) * action_on_forms(c, deg, q));
      CHECK(action_on_forms(g * t, deg, q) == action_on_forms(g, deg, q) * action_on_forms(t, deg, q));
      if (deg >= 1 && q < 3) {
        CHECK(de_rham_matrix(3, deg, q) * action_on_forms(g, deg, q) ==
              action_on_forms(g, deg - 1, q + 1) * de_rham_matrix(3, deg, q));
      }
    }
  }
}
