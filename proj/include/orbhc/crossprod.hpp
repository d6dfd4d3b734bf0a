#pragma once

// Homology of crossed products O[X] x| G, assembled class by class from
// fixed sets and centralizer actions. Two backends: X = C^n with a linear
// action, and X = (C^*)^n with permutation-with-translation maps.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbhc/exactla.hpp"
#include "orbhc/groups.hpp"
#include "orbhc/hochschild.hpp"
#include "orbhc/koszul.hpp"

namespace orbhc {

struct LinearFixed {
  RationalMatrix basis;  // n x m, columns span the fixed points
};

struct TorusFixed {
  std::vector<std::vector<std::size_t>> cycles;  // each starts at its representative
  std::size_t rank() const { return cycles.size(); }
};

struct EmptyFixed {};

using FixedSet = std::variant<LinearFixed, TorusFixed, EmptyFixed>;

FixedSet fixed_set(const GroupElement& g);
std::string describe_fixed_set(const FixedSet& f);
// Dimension of the fixed set; nullopt when empty.
std::optional<std::size_t> fixed_dimension(const FixedSet& f);

// Permutation action of the centralizer of gamma on the cycles of gamma,
// which is its action on H^1 of the fixed torus. One matrix per
// centralizer element, in centralizer order.
std::vector<RationalMatrix> centralizer_action_on_torus_h1(const FiniteGroup& group, std::size_t gamma,
                                                           const TorusFixed& fixed);

// sum over k = parity (mod 2) of dim (Lambda^k Q^r)^C. An empty action
// list means the trivial group.
std::size_t torus_hp_contribution(std::size_t r, const std::vector<RationalMatrix>& h1_action,
                                  std::size_t parity);

// Action of a centralizer element c on the fixed subspace F of gamma, in
// the coordinates of F's basis (points move by c^T).
RationalMatrix restricted_point_action(const RationalMatrix& c, const RationalMatrix& basis);

struct ClassReport {
  std::size_t representative = 0;
  std::size_t class_size = 0;
  std::size_t centralizer_size = 0;
  std::string element;
  FixedSet fixed;
  GradedTable table;                 // HH / HC: (q, D) -> dim
  std::array<std::size_t, 2> hp{};   // HP_0, HP_1
  std::optional<GradedTable> oracle;  // bar-complex cross-check, if requested
};

struct HomologyReport {
  std::string theory;  // "HH", "HC" or "HP"
  std::size_t q_max = 0, d_max = 0;
  std::vector<ClassReport> per_class;
  GradedTable totals;
  std::array<std::size_t, 2> hp_totals{};
};

// HP_0 / HP_1 per class: empty fixed set 0, linear fixed set (1, 0),
// fixed torus via torus_hp_contribution.
HomologyReport hp_report(const FiniteGroup& group);

// HH_q per class in internal degree D: invariants of the centralizer on
// Omega^q with coefficient degree D - q on the fixed subspace. With
// `oracle`, the table is recomputed from the twisted bar complex
// restricted to centralizer invariants; a mismatch throws
// InvariantViolation.
HomologyReport hh_graded_report(const FiniteGroup& group, std::size_t q_max, std::size_t d_max,
                                bool oracle = false, std::size_t block_limit = kDefaultBlockLimit);

// HC_n per class: (Omega^n / d Omega^{n-1})^C in degree D, plus the
// constants in even degrees n >= 2 at D = 0.
HomologyReport hc_graded_report(const FiniteGroup& group, std::size_t n_max, std::size_t d_max,
                                bool oracle = false, std::size_t block_limit = kDefaultBlockLimit);

// Conjugacy data only (fixed sets, sizes); tables left empty.
HomologyReport classes_report(const FiniteGroup& group);

}  // namespace orbhc
