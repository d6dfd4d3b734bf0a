#include "orbhc/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "orbhc/errors.hpp"

namespace orbhc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_permutation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

std::string matrix_key(const RationalMatrix& m) {
  std::string key = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) key += m(i, j).get_str() + ",";
  return key;
}

}  // namespace

MonomialElement::MonomialElement(std::vector<std::size_t> p, RationalVector s)
    : perm(std::move(p)), shift(std::move(s)) {
  if (!is_permutation(perm)) throw InvalidArgument("monomial element: not a permutation");
  if (shift.empty()) shift.assign(perm.size(), Rational(0));
  if (shift.size() != perm.size()) throw InvalidArgument("monomial element: shift length mismatch");
  for (auto& q : shift) q = mod_one(q);
}

MonomialElement MonomialElement::from_exponent_matrix(const RationalMatrix& exponents,
                                                      RationalVector shift) {
  const std::size_t n = exponents.rows();
  if (exponents.cols() != n) throw InvalidArgument("exponent matrix must be square");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = exponents(i, j);
      if (sgn(a) == 0) continue;
      if (a == -1) {
        throw InvalidArgument("coordinate inversions t -> 1/t are not supported");
      }
      if (a != 1) throw InvalidArgument("exponent matrix must be a permutation matrix");
      perm[i] = j;
      ++hits;
    }
    if (hits != 1) throw InvalidArgument("exponent matrix must be a permutation matrix");
  }
  return MonomialElement(std::move(perm), std::move(shift));
}

std::size_t element_dimension(const GroupElement& g) {
  return std::visit(overloaded{
                        [](const LinearElement& e) { return e.matrix.rows(); },
                        [](const MonomialElement& e) { return e.perm.size(); },
                        [](const AlgebraAutomorphism& e) { return e.matrix.rows(); },
                    },
                    g);
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) throw InvalidArgument("compose: mixed element kinds");
  if (element_dimension(a) != element_dimension(b)) {
    throw InvalidArgument("compose: dimension mismatch");
  }
  if (const auto* la = std::get_if<LinearElement>(&a)) {
    return LinearElement{la->matrix * std::get<LinearElement>(b).matrix};
  }
  if (const auto* aa = std::get_if<AlgebraAutomorphism>(&a)) {
    return AlgebraAutomorphism{aa->matrix * std::get<AlgebraAutomorphism>(b).matrix};
  }
  const auto& g = std::get<MonomialElement>(a);
  const auto& h = std::get<MonomialElement>(b);
  const std::size_t n = g.perm.size();
  std::vector<std::size_t> perm(n);
  RationalVector shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = h.perm[g.perm[i]];
    shift[i] = g.shift[i] + h.shift[g.perm[i]];
  }
  return MonomialElement(std::move(perm), std::move(shift));
}

GroupElement identity_like(const GroupElement& g) {
  const std::size_t n = element_dimension(g);
  return std::visit(overloaded{
                        [n](const LinearElement&) -> GroupElement {
                          return LinearElement{RationalMatrix::identity(n)};
                        },
                        [n](const MonomialElement&) -> GroupElement {
                          std::vector<std::size_t> id(n);
                          std::iota(id.begin(), id.end(), 0);
                          return MonomialElement(std::move(id), RationalVector(n));
                        },
                        [n](const AlgebraAutomorphism&) -> GroupElement {
                          return AlgebraAutomorphism{RationalMatrix::identity(n)};
                        },
                    },
                    g);
}

std::string element_key(const GroupElement& g) {
  return std::visit(overloaded{
                        [](const LinearElement& e) { return "L" + matrix_key(e.matrix); },
                        [](const MonomialElement& e) {
                          std::string key = "M";
                          for (auto p : e.perm) key += std::to_string(p) + ",";
                          key += "|";
                          for (const auto& s : e.shift) key += s.get_str() + ",";
                          return key;
                        },
                        [](const AlgebraAutomorphism& e) { return "A" + matrix_key(e.matrix); },
                    },
                    g);
}

std::string describe(const GroupElement& g) {
  return std::visit(overloaded{
                        [](const LinearElement& e) { return e.matrix.str(); },
                        [](const MonomialElement& e) {
                          std::ostringstream os;
                          os << "perm=[";
                          for (std::size_t i = 0; i < e.perm.size(); ++i)
                            os << (i ? "," : "") << e.perm[i];
                          os << "] shift=[";
                          for (std::size_t i = 0; i < e.shift.size(); ++i)
                            os << (i ? "," : "") << e.shift[i].get_str();
                          os << "]";
                          return os.str();
                        },
                        [](const AlgebraAutomorphism& e) { return e.matrix.str(); },
                    },
                    g);
}

const RationalMatrix& linear_matrix(const GroupElement& g) {
  if (const auto* e = std::get_if<LinearElement>(&g)) return e->matrix;
  throw InvalidArgument("expected a linear group element");
}

const MonomialElement& monomial(const GroupElement& g) {
  if (const auto* e = std::get_if<MonomialElement>(&g)) return *e;
  throw InvalidArgument("expected a monomial torus element");
}

FiniteGroup close_group(const std::vector<GroupElement>& generators, std::size_t limit) {
  if (generators.empty()) throw InvalidArgument("close_group needs at least one generator");
  for (const auto& g : generators) {
    if (g.index() != generators.front().index() ||
        element_dimension(g) != element_dimension(generators.front())) {
      throw InvalidArgument("generators must share one action kind and dimension");
    }
    if (const auto* l = std::get_if<LinearElement>(&g); l && l->matrix.rows() != l->matrix.cols()) {
      throw InvalidArgument("linear generator is not square");
    }
  }

  FiniteGroup group;
  std::unordered_map<std::string, std::size_t> index;
  auto add = [&](GroupElement e) -> std::size_t {
    auto key = element_key(e);
    if (auto it = index.find(key); it != index.end()) return it->second;
    if (group.elements_.size() >= limit) {
      throw SizeLimitExceeded("group closure exceeded " + std::to_string(limit) +
                              " elements (infinite or too large group)");
    }
    index.emplace(std::move(key), group.elements_.size());
    group.elements_.push_back(std::move(e));
    return group.elements_.size() - 1;
  };

  add(identity_like(generators.front()));
  std::vector<std::size_t> gen_index;
  for (const auto& g : generators) gen_index.push_back(add(g));

  // Right multiplication by generators reaches the whole group because
  // every element of a finite group is a positive word in the generators.
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (auto gi : gen_index) {
      add(compose(group.elements_[head], group.elements_[gi]));
    }
  }

  const std::size_t n = group.elements_.size();
  group.table_.assign(n * n, 0);
  group.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto key = element_key(compose(group.elements_[a], group.elements_[b]));
      const auto it = index.find(key);
      if (it == index.end()) throw InvariantViolation("group closure is not closed");
      group.table_[a * n + b] = it->second;
      if (it->second == 0) group.inverse_[a] = b;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (group.inverse_[a] == n) throw InvariantViolation("element without inverse in closure");
  }
  return group;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.size();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    ConjugacyClass c{g, {}};
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t conj = group.multiply(group.multiply(x, g), group.inverse(x));
      if (!assigned[conj]) {
        assigned[conj] = true;
        c.members.push_back(conj);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<std::size_t> centralizer(const FiniteGroup& group, std::size_t g) {
  if (g >= group.size()) throw InvalidArgument("centralizer: element index out of range");
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < group.size(); ++x) {
    if (group.multiply(x, g) == group.multiply(g, x)) out.push_back(x);
  }
  return out;
}

RationalMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  if (!is_permutation(perm)) throw InvalidArgument("permutation_matrix: not a permutation");
  RationalMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = 1;
  return m;
}

std::vector<std::vector<std::size_t>> permutation_cycles(const std::vector<std::size_t>& perm) {
  if (!is_permutation(perm)) throw InvalidArgument("permutation_cycles: not a permutation");
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace orbhc
