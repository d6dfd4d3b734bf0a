#include "orbhc/findim.hpp"

#include <map>

#include "orbhc/errors.hpp"

namespace orbhc {

namespace {

RationalVector basis_vector(std::size_t d, std::size_t i) {
  RationalVector v(d);
  v[i] = 1;
  return v;
}

void axpy(RationalVector& out, const Rational& a, const SparseVector& v) {
  for (const auto& e : v) out[e.index] += a * e.value;
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(std::size_t dim, std::vector<SparseVector> products, RationalVector unit)
    : dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
  if (dim_ == 0) throw InvalidArgument("algebra must have positive dimension");
  if (products_.size() != dim_ * dim_ || unit_.size() != dim_) {
    throw InvalidArgument("structure constants do not match the dimension");
  }
  for (auto& v : products_) {
    for (const auto& e : v)
      if (e.index >= dim_) throw InvalidArgument("structure constant index out of range");
    SparseMatrix tmp(dim_, 1);
    for (const auto& e : v) tmp.add(e.index, 0, e.value);
    tmp.finalize();
    v = tmp.column(0);
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    const RationalVector e = basis_vector(dim_, i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e) {
      throw InvalidArgument("unit law fails for basis element " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        RationalVector left(dim_), right(dim_);
        for (const auto& e : product(i, j)) axpy(left, e.value, product(e.index, k));
        for (const auto& e : product(j, k)) axpy(right, e.value, product(i, e.index));
        if (left != right) {
          throw InvalidArgument("structure constants are not associative at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) + ")");
        }
      }
    }
  }
}

RationalVector FinDimAlgebra::multiply(const RationalVector& a, const RationalVector& b) const {
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      axpy(out, a[i] * b[j], product(i, j));
    }
  }
  return out;
}

void FinDimAlgebra::set_grading(std::shared_ptr<const FiniteGroup> group, std::vector<std::size_t> labels) {
  if (!group || labels.size() != dim_) throw InvalidArgument("grading needs one label per basis element");
  for (auto l : labels)
    if (l >= group->size()) throw InvalidArgument("grading label out of range");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::size_t want = group->multiply(labels[i], labels[j]);
      for (const auto& e : product(i, j)) {
        if (labels[e.index] != want) throw InvalidArgument("structure constants do not respect the grading");
      }
    }
  }
  group_ = std::move(group);
  labels_ = std::move(labels);
}

FinDimAlgebra scalar_algebra() {
  return FinDimAlgebra(1, {SparseVector{{0, Rational(1)}}}, RationalVector{Rational(1)});
}

FinDimAlgebra matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        products[(i * n + j) * d + (j * n + l)] = {{static_cast<std::uint32_t>(i * n + l), Rational(1)}};
  RationalVector unit(d);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return FinDimAlgebra(d, std::move(products), std::move(unit));
}

RationalMatrix inner_automorphism(const FinDimAlgebra& a, const RationalVector& u) {
  const std::size_t d = a.dimension();
  if (u.size() != d) throw InvalidArgument("inner_automorphism: element has the wrong length");
  RationalMatrix left(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const RationalVector col = a.multiply(u, basis_vector(d, j));
    for (std::size_t i = 0; i < d; ++i) left(i, j) = col[i];
  }
  if (rank(left) != d) throw InvalidArgument("inner_automorphism: element is not invertible");
  const RationalVector u_inv = inverse(left) * a.unit();
  RationalMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const RationalVector col = a.multiply(a.multiply(u, basis_vector(d, j)), u_inv);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

AlgebraAutomorphism make_automorphism(const FinDimAlgebra& a, const RationalMatrix& m) {
  const std::size_t d = a.dimension();
  if (m.rows() != d || m.cols() != d) throw NotAutomorphism("automorphism matrix has the wrong size");
  if (rank(m) != d) throw NotAutomorphism("automorphism matrix is singular");
  if (m * a.unit() != a.unit()) throw NotAutomorphism("map does not preserve the unit");
  std::vector<RationalVector> images;
  for (std::size_t j = 0; j < d; ++j) images.push_back(m.column(j));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      RationalVector lhs(d);
      for (const auto& e : a.product(i, j)) {
        for (std::size_t r = 0; r < d; ++r) lhs[r] += e.value * m(r, e.index);
      }
      if (lhs != a.multiply(images[i], images[j])) {
        throw NotAutomorphism("map is not multiplicative on (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
  return AlgebraAutomorphism{m};
}

FinDimAlgebra findim_crossed_product(const FinDimAlgebra& a, std::shared_ptr<const FiniteGroup> group) {
  if (!group) throw InvalidArgument("findim_crossed_product: missing group");
  std::vector<RationalMatrix> action;
  for (const auto& g : group->elements()) {
    if (!std::holds_alternative<AlgebraAutomorphism>(g)) {
      throw NotAutomorphism("crossed products need algebra automorphisms");
    }
    action.push_back(std::get<AlgebraAutomorphism>(g).matrix);
  }
  return findim_crossed_product(a, std::move(group), action);
}

FinDimAlgebra findim_crossed_product(const FinDimAlgebra& a, std::shared_ptr<const FiniteGroup> group,
                                     const std::vector<RationalMatrix>& action) {
  if (!group) throw InvalidArgument("findim_crossed_product: missing group");
  const std::size_t d = a.dimension(), n = group->size();
  if (action.size() != n) throw InvalidArgument("findim_crossed_product: one action matrix per element");
  std::vector<RationalMatrix> alpha;
  for (const auto& m : action) alpha.push_back(make_automorphism(a, m).matrix);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (!(alpha[g] * alpha[h] == alpha[group->multiply(g, h)])) {
        throw NotAutomorphism("action is not a group homomorphism");
      }
  const std::size_t D = d * n;
  std::vector<SparseVector> products(D * D);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = group->multiply(g, h);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          // (e_i g)(e_j h) = e_i alpha_g(e_j) gh
          RationalVector v(d);
          for (std::size_t l = 0; l < d; ++l) {
            if (sgn(alpha[g](l, j)) != 0) axpy(v, alpha[g](l, j), a.product(i, l));
          }
          SparseVector& out = products[(i + d * g) * D + (j + d * h)];
          for (std::size_t k = 0; k < d; ++k)
            if (sgn(v[k]) != 0) out.push_back({static_cast<std::uint32_t>(k + d * gh), v[k]});
        }
      }
    }
  }
  RationalVector unit(D);
  for (std::size_t i = 0; i < d; ++i) unit[i] = a.unit()[i];
  FinDimAlgebra out(D, std::move(products), std::move(unit));
  std::vector<std::size_t> labels(D);
  for (std::size_t k = 0; k < D; ++k) labels[k] = k / d;
  out.set_grading(std::move(group), std::move(labels));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Reduced bar complex B_q = A (x) (A / Q 1)^{(x) q}. The quotient drops the
// basis index p where the unit has its first non-zero coordinate.
class FindimBar {
 public:
  FindimBar(const FinDimAlgebra& a, std::size_t q_top) : a_(a), d_(a.dimension()) {
    p_ = 0;
    while (sgn(a.unit()[p_]) == 0) ++p_;
    for (std::size_t i = 0; i < d_; ++i) {
      if (i != p_) {
        red_.push_back(static_cast<std::uint32_t>(orig_.size()));
        orig_.push_back(i);
      } else {
        red_.push_back(UINT32_MAX);
      }
    }
    reduced_products_.resize(d_ * d_);
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = 0; j < d_; ++j) {
        RationalVector v(d_);
        axpy(v, 1, a.product(i, j));
        const Rational t = v[p_] / a.unit()[p_];
        SparseVector& out = reduced_products_[i * d_ + j];
        for (std::size_t k = 0; k < d_; ++k) {
          if (k == p_) continue;
          const Rational c = v[k] - t * a.unit()[k];
          if (sgn(c) != 0) out.push_back({red_[k], c});
        }
      }
    }
    sizes_.push_back(d_);
    for (std::size_t q = 1; q <= q_top; ++q) sizes_.push_back(sizes_.back() * (d_ - 1));

    std::size_t nclasses = 1;
    std::vector<std::size_t> class_of;
    if (a.graded()) {
      const auto classes = conjugacy_classes(a.grading_group());
      class_of.resize(a.grading_group().size());
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (auto m : classes[c].members) class_of[m] = c;
        class_reps_.push_back(classes[c].representative);
        class_sizes_.push_back(classes[c].members.size());
      }
      nclasses = classes.size();
    } else {
      class_reps_.push_back(0);
      class_sizes_.push_back(1);
    }

    members_.assign(q_top + 1, std::vector<std::vector<std::uint32_t>>(nclasses));
    local_.resize(q_top + 1);
    class_.resize(q_top + 1);
    std::vector<std::size_t> t;
    for (std::size_t q = 0; q <= q_top; ++q) {
      local_[q].resize(sizes_[q]);
      class_[q].resize(sizes_[q]);
      for (std::size_t g = 0; g < sizes_[q]; ++g) {
        decode(q, g, t);
        std::size_t c = 0;
        if (a.graded()) {
          std::size_t prod = a.label(t[0]);
          for (std::size_t s = 1; s <= q; ++s) prod = a.grading_group().multiply(prod, a.label(orig_[t[s]]));
          c = class_of[prod];
        }
        class_[q][g] = static_cast<std::uint32_t>(c);
        local_[q][g] = static_cast<std::uint32_t>(members_[q][c].size());
        members_[q][c].push_back(static_cast<std::uint32_t>(g));
      }
    }
  }

  std::size_t classes() const { return class_reps_.size(); }
  std::size_t representative(std::size_t c) const { return class_reps_[c]; }
  std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }
  std::size_t block_size(std::size_t q, std::size_t c) const { return members_[q][c].size(); }

  // b : B_q^c -> B_{q-1}^c.
  SparseMatrix differential(std::size_t q, std::size_t c) const {
    const auto& cols = members_[q][c];
    SparseMatrix m(members_[q - 1][c].size(), cols.size());
    std::vector<std::size_t> t, r;
    auto emit = [&](std::size_t col, const std::vector<std::size_t>& tensor, const Rational& coef) {
      const std::size_t g = encode(q - 1, tensor);
      if (class_[q - 1][g] != c) throw InvariantViolation("bar differential does not preserve the class grading");
      m.add(local_[q - 1][g], col, coef);
    };
    for (std::size_t col = 0; col < cols.size(); ++col) {
      decode(q, cols[col], t);
      // a_0 a_1 (x) a_2 ..
      for (const auto& e : a_.product(t[0], orig_[t[1]])) {
        r.assign(1, e.index);
        r.insert(r.end(), t.begin() + 2, t.end());
        emit(col, r, e.value);
      }
      for (std::size_t i = 1; i < q; ++i) {
        const Rational sign = i % 2 ? -1 : 1;
        for (const auto& e : reduced_products_[orig_[t[i]] * d_ + orig_[t[i + 1]]]) {
          r.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
          r.push_back(e.index);
          r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.end());
          emit(col, r, sign * e.value);
        }
      }
      const Rational sign = q % 2 ? -1 : 1;
      for (const auto& e : a_.product(orig_[t[q]], t[0])) {
        r.assign(1, e.index);
        r.insert(r.end(), t.begin() + 1, t.end() - 1);
        emit(col, r, sign * e.value);
      }
    }
    m.finalize();
    return m;
  }

 private:
  // Slot 0 holds an algebra index, slots >= 1 reduced indices.
  void decode(std::size_t q, std::size_t g, std::vector<std::size_t>& t) const {
    t.resize(q + 1);
    t[0] = g % d_;
    g /= d_;
    for (std::size_t s = 1; s <= q; ++s) {
      t[s] = g % (d_ - 1);
      g /= d_ - 1;
    }
  }
  std::size_t encode(std::size_t q, const std::vector<std::size_t>& t) const {
    std::size_t g = 0;
    for (std::size_t s = q; s >= 1; --s) g = g * (d_ - 1) + t[s];
    return g * d_ + t[0];
  }

  const FinDimAlgebra& a_;
  std::size_t d_, p_;
  std::vector<std::uint32_t> red_;
  std::vector<std::size_t> orig_;
  std::vector<SparseVector> reduced_products_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> class_reps_, class_sizes_;
  std::vector<std::vector<std::vector<std::uint32_t>>> members_;
  std::vector<std::vector<std::uint32_t>> local_, class_;
};

}  // namespace

FindimHHResult findim_hh_dims(const FinDimAlgebra& a, std::size_t q_max, std::size_t limit) {
  const std::size_t d = a.dimension();
  const std::size_t q_top = q_max + 1;
  // Guard on the largest block, d (d - 1)^{q_max + 1}.
  std::size_t size = d;
  for (std::size_t q = 1; q <= q_top; ++q) {
    if (d > 1 && size > limit / (d - 1) + 1) {
      size = limit + 1;
      break;
    }
    size *= d - 1;
  }
  if (size > limit) {
    throw SizeLimitExceeded("bar complex B_" + std::to_string(q_top) + " of a " + std::to_string(d) +
                            "-dimensional algebra exceeds " + std::to_string(limit) + " basis tensors");
  }

  const FindimBar bar(a, q_top);
  FindimHHResult result;
  result.total.assign(q_max + 1, 0);
  for (std::size_t c = 0; c < bar.classes(); ++c) {
    std::vector<SparseMatrix> diff;
    for (std::size_t q = 1; q <= q_top; ++q) diff.push_back(bar.differential(q, c));
    for (std::size_t q = 1; q < diff.size(); ++q) {
      if (!(diff[q - 1] * diff[q]).is_zero()) {
        throw CompositionNotZero("b o b != 0 on B_" + std::to_string(q + 1) + " of a finite-dimensional algebra");
      }
    }
    // rank_b[q] = rank of b : B_q -> B_{q-1}; rank_b[0] = 0.
    std::vector<std::size_t> rank_b(q_top + 1, 0);
    for (std::size_t q = 1; q <= q_top; ++q) {
      const std::size_t bound = bar.block_size(q - 1, c) - rank_b[q - 1];
      rank_b[q] = sparse_rank(diff[q - 1], bound);
    }
    FindimClassDims entry{bar.representative(c), "", {}};
    entry.description = a.graded() ? "class of element " + std::to_string(bar.representative(c)) + " (size " +
                                         std::to_string(bar.class_size(c)) + ")"
                                   : "all";
    for (std::size_t q = 0; q <= q_max; ++q) {
      const std::size_t dim = bar.block_size(q, c) - rank_b[q] - rank_b[q + 1];
      entry.dims.push_back(dim);
      result.total[q] += dim;
    }
    result.per_class.push_back(std::move(entry));
  }
  return result;
}

}  // namespace orbhc
