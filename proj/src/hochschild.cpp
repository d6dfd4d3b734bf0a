#include "orbhc/hochschild.hpp"

#include <algorithm>
#include <numeric>

#include "orbhc/errors.hpp"

namespace orbhc {

namespace {

using Images = std::vector<std::vector<std::pair<std::uint32_t, Rational>>>;

enum SpaceKind { kBar = 0, kResolution = 1, kUnreduced = 2 };

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

// Sign of the permutation given as a list of images.
int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void check_square(const RationalMatrix& g, const char* who) {
  if (g.rows() != g.cols() || g.rows() == 0) {
    throw InvalidArgument(std::string(who) + ": g must be a non-empty square matrix");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

MonomialTable::MonomialTable(std::size_t m, std::size_t max_degree)
    : m_(m), max_degree_(max_degree), by_degree_(max_degree + 1) {
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (auto& e : monomials_of_degree(m, d)) {
      by_degree_[d].push_back(exps_.size());
      lookup_.emplace(e, exps_.size());
      exps_.push_back(std::move(e));
      degree_.push_back(d);
    }
  }
}

std::size_t MonomialTable::id(const Exponent& e) const {
  const auto it = lookup_.find(e);
  if (it == lookup_.end()) throw InvalidArgument("monomial outside the degree range of the table");
  return it->second;
}

std::size_t MonomialTable::product(std::size_t a, std::size_t b) const {
  Exponent e = exps_[a];
  for (std::size_t i = 0; i < m_; ++i) e[i] += exps_[b][i];
  return id(e);
}

TensorSpace::TensorSpace(const MonomialTable& table, std::size_t slots, std::size_t D,
                         std::size_t reduced_begin, std::size_t reduced_end, std::size_t limit)
    : table_(&table), slots_(slots), D_(D), reduced_begin_(reduced_begin), reduced_end_(reduced_end) {
  if (D > table.max_degree()) throw InvalidArgument("tensor degree exceeds the monomial table");
  auto min_deg = [&](std::size_t s) { return s >= reduced_begin_ && s < reduced_end_ ? 1u : 0u; };

  // Size first, so the guard fires before anything large is allocated.
  std::vector<std::size_t> composition(slots, 0);
  std::size_t total = 0;
  std::function<void(std::size_t, std::size_t, std::size_t)> count = [&](std::size_t s, std::size_t left,
                                                                         std::size_t prod) {
    if (s + 1 == slots) {
      if (left < min_deg(s)) return;
      total += prod * table.of_degree(left).size();
      return;
    }
    for (std::size_t d = min_deg(s); d <= left; ++d) count(s + 1, left - d, prod * table.of_degree(d).size());
  };
  if (slots > 0) count(0, D, 1);
  if (total > limit) {
    throw SizeLimitExceeded("bar block with " + std::to_string(slots) + " slots in degree " +
                            std::to_string(D) + " has " + std::to_string(total) +
                            " basis elements (limit " + std::to_string(limit) + ")");
  }
  tensors_.reserve(total);

  Tensor t(slots);
  std::function<void(std::size_t)> fill = [&](std::size_t s) {
    if (s == slots) {
      lookup_.emplace(t, tensors_.size());
      tensors_.push_back(t);
      return;
    }
    for (auto id : table.of_degree(composition[s])) {
      t[s] = static_cast<std::uint32_t>(id);
      fill(s + 1);
    }
  };
  std::function<void(std::size_t, std::size_t)> compose = [&](std::size_t s, std::size_t left) {
    if (s + 1 == slots) {
      if (left < min_deg(s)) return;
      composition[s] = left;
      fill(0);
      return;
    }
    for (std::size_t d = min_deg(s); d <= left; ++d) {
      composition[s] = d;
      compose(s + 1, left - d);
    }
  };
  if (slots > 0) compose(0, D);
}

std::optional<std::size_t> TensorSpace::index(const Tensor& t) const {
  for (std::size_t s = reduced_begin_; s < reduced_end_ && s < t.size(); ++s) {
    if (table_->degree(t[s]) == 0) return std::nullopt;
  }
  const auto it = lookup_.find(t);
  if (it == lookup_.end()) throw InvalidArgument("tensor does not belong to this block");
  return it->second;
}

// ---------------------------------------------------------------------------

Images monomial_action(const MonomialTable& table, const RationalMatrix& h) {
  const std::size_t n = table.variables();
  if (h.rows() != n || h.cols() != n) throw InvalidArgument("monomial_action: dimension mismatch");
  std::vector<Polynomial> linear(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n, 0);
      e[j] = 1;
      add_term(linear[i], e, h(j, i));
    }
  }
  Images out(table.count());
  for (std::size_t id = 0; id < table.count(); ++id) {
    Polynomial p{{Exponent(n, 0), Rational(1)}};
    const Exponent& e = table.exponent(id);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) p = multiply(p, linear[i]);
    for (const auto& [mono, c] : p) out[id].emplace_back(static_cast<std::uint32_t>(table.id(mono)), c);
  }
  return out;
}

PolynomialBarComplex::PolynomialBarComplex(RationalMatrix g, std::size_t d_max, std::size_t block_limit)
    : g_(std::move(g)), d_max_(d_max), block_limit_(block_limit), table_(g_.rows(), d_max) {
  check_square(g_, "PolynomialBarComplex");
  g_inv_ = inverse(g_);
  const RationalMatrix t = g_.transpose() - RationalMatrix::identity(g_.rows());
  fixed_ = RationalMatrix::from_columns(kernel_basis(t), g_.rows());
  g_images_ = monomial_action(table_, g_);
  g_inv_images_ = monomial_action(table_, g_inv_);
}

const TensorSpace& PolynomialBarComplex::space(int kind, std::size_t q, std::size_t D) const {
  const auto key = std::make_tuple(kind, q, D);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return *it->second;
  std::unique_ptr<TensorSpace> s;
  switch (kind) {
    case kBar:
      s = std::make_unique<TensorSpace>(table_, q + 1, D, 1, q + 1, block_limit_);
      break;
    case kResolution:
      // P_0 = A has one slot; P_n has n + 1 slots with the outer two unreduced.
      s = q == 0 ? std::make_unique<TensorSpace>(table_, 1, D, 1, 1, block_limit_)
                 : std::make_unique<TensorSpace>(table_, q + 1, D, 1, q, block_limit_);
      break;
    default:
      s = std::make_unique<TensorSpace>(table_, q + 1, D, 0, 0, block_limit_);
      break;
  }
  return *spaces_.emplace(key, std::move(s)).first->second;
}

const TensorSpace& PolynomialBarComplex::bar_space(std::size_t q, std::size_t D) const {
  return space(kBar, q, D);
}
const TensorSpace& PolynomialBarComplex::resolution_space(std::size_t n, std::size_t D) const {
  return space(kResolution, n, D);
}
const TensorSpace& PolynomialBarComplex::unreduced_space(std::size_t q, std::size_t D) const {
  return space(kUnreduced, q, D);
}

RationalMatrix PolynomialBarComplex::assemble(
    const TensorSpace& src, const TensorSpace& dst,
    const std::function<void(const Tensor&, Combination&)>& op) const {
  RationalMatrix m(dst.size(), src.size());
  Combination out;
  for (std::size_t col = 0; col < src.size(); ++col) {
    out.clear();
    op(src.at(col), out);
    for (const auto& [t, c] : out) {
      if (const auto row = dst.index(t)) m(*row, col) += c;
    }
  }
  return m;
}

void PolynomialBarComplex::apply_on_slots(const Tensor& t, const std::vector<std::size_t>& slots,
                                          const Images& images, const Rational& coef,
                                          Combination& out) const {
  Tensor cur = t;
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t k, const Rational& c) {
    if (k == slots.size()) {
      out.emplace_back(cur, c);
      return;
    }
    const std::size_t s = slots[k];
    for (const auto& [id, a] : images[t[s]]) {
      cur[s] = id;
      rec(k + 1, c * a);
    }
    cur[s] = t[s];
  };
  rec(0, coef);
}

RationalMatrix PolynomialBarComplex::b(std::size_t q, std::size_t D) const {
  const TensorSpace& src = bar_space(q, D);
  if (q == 0) return RationalMatrix(0, src.size());
  const TensorSpace& dst = bar_space(q - 1, D);
  return assemble(src, dst, [&](const Tensor& t, Combination& out) {
    for (const auto& [id, c] : g_images_[t[1]]) {
      Tensor r{static_cast<std::uint32_t>(table_.product(t[0], id))};
      r.insert(r.end(), t.begin() + 2, t.end());
      out.emplace_back(std::move(r), c);
    }
    for (std::size_t i = 1; i < q; ++i) {
      Tensor r(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
      r.push_back(static_cast<std::uint32_t>(table_.product(t[i], t[i + 1])));
      r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.end());
      out.emplace_back(std::move(r), i % 2 ? Rational(-1) : Rational(1));
    }
    Tensor r{static_cast<std::uint32_t>(table_.product(t[q], t[0]))};
    r.insert(r.end(), t.begin() + 1, t.end() - 1);
    out.emplace_back(std::move(r), q % 2 ? Rational(-1) : Rational(1));
  });
}

RationalMatrix PolynomialBarComplex::b_prime(std::size_t n, std::size_t D) const {
  const TensorSpace& src = resolution_space(n, D);
  if (n == 0) return RationalMatrix(0, src.size());
  const TensorSpace& dst = resolution_space(n - 1, D);
  return assemble(src, dst, [&](const Tensor& t, Combination& out) {
    for (const auto& [id, c] : g_images_[t[1]]) {
      Tensor r{static_cast<std::uint32_t>(table_.product(t[0], id))};
      r.insert(r.end(), t.begin() + 2, t.end());
      out.emplace_back(std::move(r), c);
    }
    for (std::size_t i = 1; i < n; ++i) {
      Tensor r(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
      r.push_back(static_cast<std::uint32_t>(table_.product(t[i], t[i + 1])));
      r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.end());
      out.emplace_back(std::move(r), i % 2 ? Rational(-1) : Rational(1));
    }
  });
}

RationalMatrix PolynomialBarComplex::contraction(std::size_t n, std::size_t D) const {
  const TensorSpace& src = resolution_space(n, D);
  const TensorSpace& dst = resolution_space(n + 1, D);
  return assemble(src, dst, [&](const Tensor& t, Combination& out) {
    for (const auto& [id, c] : g_inv_images_[t[0]]) {
      Tensor r{0, id};
      r.insert(r.end(), t.begin() + 1, t.end());
      out.emplace_back(std::move(r), c);
    }
  });
}

RationalMatrix PolynomialBarComplex::cyclic(std::size_t q, std::size_t D) const {
  const TensorSpace& u = unreduced_space(q, D);
  return assemble(u, u, [&](const Tensor& t, Combination& out) {
    if (q == 0) {
      apply_on_slots(t, {0}, g_inv_images_, Rational(1), out);
      return;
    }
    Tensor r(t.begin(), t.end() - 1);
    r.insert(r.begin(), t.back());
    apply_on_slots(r, {1}, g_inv_images_, q % 2 ? Rational(-1) : Rational(1), out);
  });
}

RationalMatrix PolynomialBarComplex::connes_B(std::size_t q, std::size_t D) const {
  const TensorSpace& src = bar_space(q, D);
  const TensorSpace& dst = bar_space(q + 1, D);
  return assemble(src, dst, [&](const Tensor& t, Combination& out) {
    // s_g t^k x = (-1)^{qk} 1 (x) g^-1(a_{q-k+1} .. a_q, a_0) (x) a_1 .. a_{q-k}
    for (std::size_t k = 0; k <= q; ++k) {
      Tensor r{0};
      r.insert(r.end(), t.end() - static_cast<std::ptrdiff_t>(k), t.end());
      r.insert(r.end(), t.begin(), t.end() - static_cast<std::ptrdiff_t>(k));
      std::vector<std::size_t> slots(k + 1);
      std::iota(slots.begin(), slots.end(), 1);
      apply_on_slots(r, slots, g_inv_images_, (q * k) % 2 ? Rational(-1) : Rational(1), out);
    }
  });
}

RationalMatrix PolynomialBarComplex::diagonal_action(const RationalMatrix& h, std::size_t q,
                                                     std::size_t D) const {
  const Images images = monomial_action(table_, h);
  const TensorSpace& s = bar_space(q, D);
  std::vector<std::size_t> slots(q + 1);
  std::iota(slots.begin(), slots.end(), 0);
  return assemble(s, s, [&](const Tensor& t, Combination& out) {
    apply_on_slots(t, slots, images, Rational(1), out);
  });
}

RationalMatrix PolynomialBarComplex::kappa(std::size_t p, std::size_t D) const {
  const std::size_t n = dimension();
  const TensorSpace& dst = bar_space(p, D);
  if (p > D) return RationalMatrix(dst.size(), 0);
  const MonomialBasis mons(n, D - p);
  const auto subsets = subsets_of_size(n, p);
  std::vector<std::uint32_t> var(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    var[i] = static_cast<std::uint32_t>(table_.id(e));
  }
  RationalMatrix m(dst.size(), mons.size() * subsets.size());
  std::vector<std::size_t> perm(p);
  for (std::size_t mi = 0; mi < mons.size(); ++mi) {
    for (std::size_t si = 0; si < subsets.size(); ++si) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Tensor t{static_cast<std::uint32_t>(table_.id(mons.at(mi)))};
        for (auto k : perm) t.push_back(var[subsets[si][k]]);
        m(*dst.index(t), mi * subsets.size() + si) += permutation_sign(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return m;
}

RationalMatrix PolynomialBarComplex::chi(std::size_t q, std::size_t D) const {
  const TensorSpace& src = bar_space(q, D);
  const std::size_t m = fixed_.cols();
  if (q > D) return RationalMatrix(0, src.size());
  const GradedFormSpace target(m, D - q, q);
  std::vector<Polynomial> restricted(table_.count());
  for (std::size_t id = 0; id < table_.count(); ++id) {
    restricted[id] = substitute_linear(Polynomial{{table_.exponent(id), Rational(1)}}, fixed_);
  }
  const Rational scale = Rational(1) / factorial(q);
  RationalMatrix out(target.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const Tensor& t = src.at(col);
    FormTerms w = polynomial_as_form(restricted[t[0]]);
    for (std::size_t i = 1; i <= q && !w.empty(); ++i) w = wedge(w, exterior_derivative(restricted[t[i]]));
    for (const auto& [key, c] : w) out(target.index(key.first, key.second), col) += c * scale;
  }
  return out;
}

std::size_t PolynomialBarComplex::order(std::size_t limit) const {
  RationalMatrix p = g_;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * g_;
  }
  throw SizeLimitExceeded("g has order larger than " + std::to_string(limit));
}

// ---------------------------------------------------------------------------

RationalMatrix b_twisted(const RationalMatrix& g, std::size_t q, std::size_t D) {
  check_square(g, "b_twisted");
  return PolynomialBarComplex(g, D).b(q, D);
}

RationalMatrix b_prime_twisted(const RationalMatrix& g, std::size_t n, std::size_t D) {
  check_square(g, "b_prime_twisted");
  return PolynomialBarComplex(g, D).b_prime(n, D);
}

RationalMatrix B_twisted(const RationalMatrix& g, std::size_t q, std::size_t D) {
  check_square(g, "B_twisted");
  return PolynomialBarComplex(g, D).connes_B(q, D);
}

RationalMatrix kappa_E(const RationalMatrix& g, std::size_t p, std::size_t D) {
  check_square(g, "kappa_E");
  return PolynomialBarComplex(g, D).kappa(p, D);
}

PolyForm chkr_chi(const RationalMatrix& g, std::size_t q, std::size_t D, const RationalVector& chain) {
  check_square(g, "chkr_chi");
  if (q > D) throw InvalidArgument("chkr_chi: q must not exceed D");
  const PolynomialBarComplex bar(g, D);
  const RationalMatrix x = bar.chi(q, D);
  if (chain.size() != x.cols()) throw InvalidArgument("chkr_chi: chain has the wrong length");
  return PolyForm{bar.fixed_subspace().cols(), D - q, q, x * chain};
}

std::vector<RationalMatrix> cyclic_group(const RationalMatrix& g, std::size_t limit) {
  check_square(g, "cyclic_group");
  std::vector<RationalMatrix> out{RationalMatrix::identity(g.rows())};
  RationalMatrix p = g;
  while (!p.is_identity()) {
    if (out.size() >= limit) throw SizeLimitExceeded("g has order larger than " + std::to_string(limit));
    out.push_back(p);
    p = p * g;
  }
  return out;
}

namespace {

// Homology data of the invariant subcomplex of one block: projector onto
// the invariants (empty group: the whole space).
RationalMatrix block_projector(const PolynomialBarComplex& bar, const std::vector<RationalMatrix>& group,
                               std::size_t q, std::size_t D) {
  const std::size_t dim = bar.bar_space(q, D).size();
  if (group.empty()) return RationalMatrix::identity(dim);
  std::vector<RationalMatrix> rep;
  rep.reserve(group.size());
  for (const auto& h : group) rep.push_back(bar.diagonal_action(h, q, D));
  return averaging_projector(rep);
}

void check_group(const RationalMatrix& g, const std::vector<RationalMatrix>& group, bool needs_g) {
  bool has_g = false;
  for (const auto& h : group) {
    if (h.rows() != g.rows() || h.cols() != g.cols()) {
      throw InvalidArgument("group element has the wrong dimension");
    }
    if (!(h * g == g * h)) throw InvalidArgument("group element does not commute with g");
    if (h == g) has_g = true;
  }
  if (needs_g && !group.empty() && !has_g) {
    throw InvalidArgument("the group must contain g to realize coinvariants as invariants");
  }
}

std::size_t projected_rank(const RationalMatrix& d, const RationalMatrix& p) {
  if (d.rows() == 0 || d.cols() == 0) return 0;
  return rank(d * p);
}

GradedTable hh_dims(const RationalMatrix& g, const std::vector<RationalMatrix>& group, std::size_t q_max,
                    std::size_t d_max, std::size_t block_limit) {
  check_square(g, "hh_twisted_dims");
  check_group(g, group, false);
  const PolynomialBarComplex bar(g, d_max, block_limit);
  GradedTable table;
  for (std::size_t D = 0; D <= d_max; ++D) {
    const std::size_t top = std::min(q_max + 1, D);
    std::vector<RationalMatrix> proj, diff;
    for (std::size_t q = 0; q <= top; ++q) {
      proj.push_back(block_projector(bar, group, q, D));
      diff.push_back(bar.b(q, D));
    }
    for (std::size_t q = 0; q <= q_max; ++q) {
      if (q > D) {
        table[{q, D}] = 0;
        continue;
      }
      if (q + 1 <= top && q >= 1 && !(diff[q] * diff[q + 1]).is_zero()) {
        throw CompositionNotZero("b_g o b_g != 0 at q=" + std::to_string(q + 1) + ", D=" + std::to_string(D));
      }
      const std::size_t invariants = static_cast<std::size_t>(proj[q].trace().get_num().get_ui());
      const std::size_t out_rank = projected_rank(diff[q], proj[q]);
      const std::size_t in_rank = q + 1 <= top ? projected_rank(diff[q + 1], proj[q + 1]) : 0;
      table[{q, D}] = invariants - out_rank - in_rank;
    }
  }
  return table;
}

// Total differential of the (b, B) bicomplex C_n = (+)_k X_{n-2k} in one
// internal degree, as a block matrix C_n -> C_{n-1}.
struct MixedBlocks {
  std::vector<std::size_t> dims;  // bar block sizes by q
  std::vector<RationalMatrix> b, B, proj;
};

std::vector<std::size_t> components(long n, std::size_t D) {
  std::vector<std::size_t> out;
  for (long m = n; m >= 0; m -= 2)
    if (static_cast<std::size_t>(m) <= D) out.push_back(static_cast<std::size_t>(m));
  return out;
}

std::size_t offset_of(const MixedBlocks& mb, const std::vector<std::size_t>& comps, std::size_t m) {
  std::size_t off = 0;
  for (auto c : comps) {
    if (c == m) return off;
    off += mb.dims[c];
  }
  return off;
}

RationalMatrix total_differential(const MixedBlocks& mb, long n, std::size_t D) {
  const auto src = components(n, D);
  const auto dst = n >= 1 ? components(n - 1, D) : std::vector<std::size_t>{};
  std::size_t rows = 0, cols = 0;
  for (auto m : dst) rows += mb.dims[m];
  for (auto m : src) cols += mb.dims[m];
  RationalMatrix t(rows, cols);
  auto place = [&](const RationalMatrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c)
        if (sgn(blk(r, c)) != 0) t(r0 + r, c0 + c) = blk(r, c);
  };
  for (auto m : src) {
    const std::size_t c0 = offset_of(mb, src, m);
    if (m >= 1 && std::find(dst.begin(), dst.end(), m - 1) != dst.end()) {
      place(mb.b[m], offset_of(mb, dst, m - 1), c0);
    }
    if (std::find(dst.begin(), dst.end(), m + 1) != dst.end()) {
      place(mb.B[m], offset_of(mb, dst, m + 1), c0);
    }
  }
  return t;
}

RationalMatrix total_projector(const MixedBlocks& mb, long n, std::size_t D) {
  const auto comps = components(n, D);
  std::size_t dim = 0;
  for (auto m : comps) dim += mb.dims[m];
  RationalMatrix p(dim, dim);
  std::size_t off = 0;
  for (auto m : comps) {
    const RationalMatrix& blk = mb.proj[m];
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c) p(off + r, off + c) = blk(r, c);
    off += mb.dims[m];
  }
  return p;
}

GradedTable hc_dims(const RationalMatrix& g, const std::vector<RationalMatrix>& group, std::size_t n_max,
                    std::size_t d_max, std::size_t block_limit) {
  check_square(g, "hc_twisted_dims");
  check_group(g, group, true);
  const PolynomialBarComplex bar(g, d_max, block_limit);
  GradedTable table;
  for (std::size_t D = 0; D <= d_max; ++D) {
    const std::size_t top = std::min(n_max + 1, D);
    MixedBlocks mb;
    for (std::size_t q = 0; q <= top; ++q) {
      mb.dims.push_back(bar.bar_space(q, D).size());
      mb.proj.push_back(block_projector(bar, group, q, D));
      mb.b.push_back(bar.b(q, D));
      mb.B.push_back(q + 1 <= top ? bar.connes_B(q, D) : RationalMatrix());
    }
    std::vector<RationalMatrix> totals, projs;
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
      totals.push_back(total_differential(mb, static_cast<long>(n), D));
      projs.push_back(total_projector(mb, static_cast<long>(n), D));
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      const RationalMatrix& lo = totals[n];
      const RationalMatrix& hi = totals[n + 1];
      if (lo.rows() > 0 && hi.cols() > 0 && !(lo * hi * projs[n + 1]).is_zero()) {
        throw CompositionNotZero("(b + B)^2 != 0 on invariants at n=" + std::to_string(n + 1) +
                                 ", D=" + std::to_string(D));
      }
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      const std::size_t invariants = static_cast<std::size_t>(projs[n].trace().get_num().get_ui());
      table[{n, D}] = invariants - projected_rank(totals[n], projs[n]) -
                      projected_rank(totals[n + 1], projs[n + 1]);
    }
  }
  return table;
}

}  // namespace

GradedTable hh_twisted_dims(const RationalMatrix& g, std::size_t q_max, std::size_t d_max) {
  return hh_dims(g, {}, q_max, d_max, kDefaultBlockLimit);
}

GradedTable hc_twisted_dims(const RationalMatrix& g, std::size_t n_max, std::size_t d_max) {
  check_square(g, "hc_twisted_dims");
  return hc_dims(g, cyclic_group(g), n_max, d_max, kDefaultBlockLimit);
}

GradedTable invariant_hh_dims(const RationalMatrix& g, const std::vector<RationalMatrix>& group,
                              std::size_t q_max, std::size_t d_max, std::size_t block_limit) {
  return hh_dims(g, group, q_max, d_max, block_limit);
}

GradedTable invariant_hc_dims(const RationalMatrix& g, const std::vector<RationalMatrix>& group,
                              std::size_t n_max, std::size_t d_max, std::size_t block_limit) {
  return hc_dims(g, group, n_max, d_max, block_limit);
}

}  // namespace orbhc
