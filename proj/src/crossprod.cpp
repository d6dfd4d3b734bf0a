#include "orbhc/crossprod.hpp"

#include <sstream>

#include "orbhc/errors.hpp"
#include "orbhc/hochschild.hpp"
#include "orbhc/polyforms.hpp"

namespace orbhc {

FixedSet fixed_set(const GroupElement& g) {
  if (const auto* lin = std::get_if<LinearElement>(&g)) {
    const std::size_t n = lin->matrix.rows();
    const RationalMatrix t = lin->matrix.transpose() - RationalMatrix::identity(n);
    return LinearFixed{RationalMatrix::from_columns(kernel_basis(t), n)};
  }
  if (const auto* mono = std::get_if<MonomialElement>(&g)) {
    TorusFixed fixed{permutation_cycles(mono->perm)};
    for (const auto& cycle : fixed.cycles) {
      Rational sum = 0;
      for (auto i : cycle) sum += mono->shift[i];
      if (sgn(mod_one(sum)) != 0) return EmptyFixed{};
    }
    return fixed;
  }
  throw InvalidArgument("fixed sets are defined for linear and torus actions only");
}

std::string describe_fixed_set(const FixedSet& f) {
  std::ostringstream os;
  if (const auto* lin = std::get_if<LinearFixed>(&f)) {
    os << "linear subspace of dimension " << lin->basis.cols();
  } else if (const auto* tor = std::get_if<TorusFixed>(&f)) {
    os << "torus of rank " << tor->rank() << ", cycles";
    for (const auto& c : tor->cycles) {
      os << " (";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ")";
    }
  } else {
    os << "empty";
  }
  return os.str();
}

std::optional<std::size_t> fixed_dimension(const FixedSet& f) {
  if (const auto* lin = std::get_if<LinearFixed>(&f)) return lin->basis.cols();
  if (const auto* tor = std::get_if<TorusFixed>(&f)) return tor->rank();
  return std::nullopt;
}

std::vector<RationalMatrix> centralizer_action_on_torus_h1(const FiniteGroup& group, std::size_t gamma,
                                                           const TorusFixed& fixed) {
  const std::size_t n = group.dimension();
  std::vector<std::size_t> cycle_of(n);
  for (std::size_t c = 0; c < fixed.cycles.size(); ++c)
    for (auto i : fixed.cycles[c]) cycle_of[i] = c;

  std::vector<RationalMatrix> out;
  for (auto c : centralizer(group, gamma)) {
    const MonomialElement& e = monomial(group.element(c));
    // On the fixed torus (c.t) at the representative of cycle k is a
    // constant times t at perm_c(rep), which lies in cycle sigma(k).
    std::vector<std::size_t> sigma(fixed.cycles.size());
    for (std::size_t k = 0; k < fixed.cycles.size(); ++k) sigma[k] = cycle_of[e.perm[fixed.cycles[k].front()]];
    out.push_back(permutation_matrix(sigma));
  }
  return out;
}

std::size_t torus_hp_contribution(std::size_t r, const std::vector<RationalMatrix>& h1_action,
                                  std::size_t parity) {
  std::vector<RationalMatrix> action = h1_action;
  if (action.empty()) action.push_back(RationalMatrix::identity(r));
  for (const auto& m : action) {
    if (m.rows() != r || m.cols() != r) throw InvalidArgument("H^1 action has the wrong size");
  }
  std::size_t total = 0;
  for (std::size_t k = parity % 2; k <= r; k += 2) {
    std::vector<RationalMatrix> ext;
    for (const auto& m : action) ext.push_back(exterior_power(m, k));
    total += invariant_dimension(ext);
  }
  return total;
}

RationalMatrix restricted_point_action(const RationalMatrix& c, const RationalMatrix& basis) {
  if (basis.cols() == 0) return RationalMatrix(0, 0);
  return solve_in_span(basis, c.transpose() * basis);
}

namespace {

struct ClassData {
  ConjugacyClass cls;
  std::vector<std::size_t> centralizer;
};

std::vector<ClassData> class_data(const FiniteGroup& group) {
  std::vector<ClassData> out;
  for (auto& cls : conjugacy_classes(group)) {
    auto cent = centralizer(group, cls.representative);
    out.push_back({std::move(cls), std::move(cent)});
  }
  return out;
}

ClassReport base_report(const FiniteGroup& group, const ClassData& d) {
  ClassReport r;
  r.representative = d.cls.representative;
  r.class_size = d.cls.members.size();
  r.centralizer_size = d.centralizer.size();
  r.element = describe(group.element(d.cls.representative));
  r.fixed = fixed_set(group.element(d.cls.representative));
  return r;
}

void require_linear(const FiniteGroup& group, const char* who) {
  if (!std::holds_alternative<LinearElement>(group.element(0))) {
    throw InvalidArgument(std::string(who) + " needs a linear action on C^n");
  }
}

// Matrices of the centralizer acting on Omega^q_c of the fixed subspace.
std::vector<RationalMatrix> forms_action(const std::vector<RationalMatrix>& restricted, std::size_t c,
                                         std::size_t q) {
  std::vector<RationalMatrix> out;
  for (const auto& r : restricted) out.push_back(action_on_forms(r.transpose(), c, q));
  return out;
}

std::vector<RationalMatrix> restricted_actions(const FiniteGroup& group, const ClassData& d,
                                               const RationalMatrix& basis) {
  std::vector<RationalMatrix> out;
  for (auto c : d.centralizer) out.push_back(restricted_point_action(linear_matrix(group.element(c)), basis));
  return out;
}

std::vector<RationalMatrix> centralizer_matrices(const FiniteGroup& group, const ClassData& d) {
  std::vector<RationalMatrix> out;
  for (auto c : d.centralizer) out.push_back(linear_matrix(group.element(c)));
  return out;
}

void compare_oracle(const GradedTable& formula, const GradedTable& oracle, const ClassReport& r,
                    const char* theory) {
  for (const auto& [key, value] : formula) {
    const auto it = oracle.find(key);
    const std::size_t other = it == oracle.end() ? 0 : it->second;
    if (other != value) {
      throw InvariantViolation(std::string(theory) + " of class " + std::to_string(r.representative) +
                               " at (" + std::to_string(key.first) + ", " + std::to_string(key.second) +
                               "): formula " + std::to_string(value) + ", bar complex " + std::to_string(other));
    }
  }
}

void add_totals(HomologyReport& report) {
  for (const auto& c : report.per_class) {
    for (const auto& [key, value] : c.table) report.totals[key] += value;
    report.hp_totals[0] += c.hp[0];
    report.hp_totals[1] += c.hp[1];
  }
}

}  // namespace

HomologyReport classes_report(const FiniteGroup& group) {
  HomologyReport report;
  report.theory = "classes";
  for (const auto& d : class_data(group)) report.per_class.push_back(base_report(group, d));
  return report;
}

HomologyReport hp_report(const FiniteGroup& group) {
  HomologyReport report;
  report.theory = "HP";
  for (const auto& d : class_data(group)) {
    ClassReport r = base_report(group, d);
    if (std::holds_alternative<LinearFixed>(r.fixed)) {
      r.hp = {1, 0};
    } else if (const auto* tor = std::get_if<TorusFixed>(&r.fixed)) {
      const auto action = centralizer_action_on_torus_h1(group, d.cls.representative, *tor);
      r.hp = {torus_hp_contribution(tor->rank(), action, 0), torus_hp_contribution(tor->rank(), action, 1)};
    }
    report.per_class.push_back(std::move(r));
  }
  add_totals(report);
  return report;
}

HomologyReport hh_graded_report(const FiniteGroup& group, std::size_t q_max, std::size_t d_max, bool oracle,
                                std::size_t block_limit) {
  require_linear(group, "hh_graded_report");
  HomologyReport report;
  report.theory = "HH";
  report.q_max = q_max;
  report.d_max = d_max;
  for (const auto& d : class_data(group)) {
    ClassReport r = base_report(group, d);
    const RationalMatrix& basis = std::get<LinearFixed>(r.fixed).basis;
    const auto restricted = restricted_actions(group, d, basis);
    for (std::size_t D = 0; D <= d_max; ++D) {
      for (std::size_t q = 0; q <= q_max; ++q) {
        r.table[{q, D}] = q <= D ? invariant_dimension(forms_action(restricted, D - q, q)) : 0;
      }
    }
    if (oracle) {
      r.oracle = invariant_hh_dims(linear_matrix(group.element(d.cls.representative)),
                                   centralizer_matrices(group, d), q_max, d_max, block_limit);
      compare_oracle(r.table, *r.oracle, r, "HH");
    }
    report.per_class.push_back(std::move(r));
  }
  add_totals(report);
  return report;
}

HomologyReport hc_graded_report(const FiniteGroup& group, std::size_t n_max, std::size_t d_max, bool oracle,
                                std::size_t block_limit) {
  require_linear(group, "hc_graded_report");
  HomologyReport report;
  report.theory = "HC";
  report.q_max = n_max;
  report.d_max = d_max;
  for (const auto& d : class_data(group)) {
    ClassReport r = base_report(group, d);
    const RationalMatrix& basis = std::get<LinearFixed>(r.fixed).basis;
    const std::size_t m = basis.cols();
    const auto restricted = restricted_actions(group, d, basis);
    for (std::size_t D = 0; D <= d_max; ++D) {
      for (std::size_t n = 0; n <= n_max; ++n) {
        std::size_t dim = 0;
        if (n <= D) {
          dim = invariant_dimension(forms_action(restricted, D - n, n));
          if (n >= 1) {
            // image of d from the invariant (n-1)-forms
            const RationalMatrix p = averaging_projector(forms_action(restricted, D - n + 1, n - 1));
            const RationalMatrix dm = de_rham_matrix(m, D - n + 1, n - 1);
            if (dm.rows() > 0 && p.cols() > 0) dim -= rank(dm * p);
          }
        }
        if (D == 0 && n >= 2 && n % 2 == 0) dim += 1;
        r.table[{n, D}] = dim;
      }
    }
    if (oracle) {
      r.oracle = invariant_hc_dims(linear_matrix(group.element(d.cls.representative)),
                                   centralizer_matrices(group, d), n_max, d_max, block_limit);
      compare_oracle(r.table, *r.oracle, r, "HC");
    }
    report.per_class.push_back(std::move(r));
  }
  add_totals(report);
  return report;
}

}  // namespace orbhc
