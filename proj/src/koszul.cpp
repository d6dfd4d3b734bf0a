#include "orbhc/koszul.hpp"

#include "orbhc/errors.hpp"
#include "orbhc/polyforms.hpp"

namespace orbhc {

KoszulComplex::KoszulComplex(std::size_t n, RationalMatrix f, std::size_t d_max)
    : n_(n), f_(std::move(f)), d_max_(d_max) {
  if (f_.cols() != n_) {
    throw InvalidArgument("Koszul map must have one column per ring variable (" +
                          std::to_string(n_) + "), got " + std::to_string(f_.cols()));
  }
  const std::size_t e = f_.rows();
  for (std::size_t D = 0; D <= d_max_; ++D) {
    for (std::size_t j = 0; j <= std::min(e, D); ++j) {
      const std::size_t src = block_dim(j, D);
      const std::size_t dst = j == 0 ? 0 : block_dim(j - 1, D);
      RationalMatrix d(dst, src);
      if (j > 0) {
        const MonomialBasis mons(n_, D - j);
        const MonomialBasis target_mons(n_, D - j + 1);
        const auto subsets = subsets_of_size(e, j);
        const auto target_subsets = subsets_of_size(e, j - 1);
        std::map<Subset, std::size_t> target_subset_index;
        for (std::size_t t = 0; t < target_subsets.size(); ++t) target_subset_index[target_subsets[t]] = t;
        for (std::size_t mi = 0; mi < mons.size(); ++mi) {
          for (std::size_t si = 0; si < subsets.size(); ++si) {
            const std::size_t col = mi * subsets.size() + si;
            const Subset& s = subsets[si];
            for (std::size_t k = 0; k < s.size(); ++k) {
              Subset rest = s;
              rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
              const Rational sign = k % 2 ? -1 : 1;
              for (std::size_t var = 0; var < n_; ++var) {
                const Rational& a = f_(s[k], var);
                if (sgn(a) == 0) continue;
                Exponent m = mons.at(mi);
                ++m[var];
                d(target_mons.index(m) * target_subsets.size() + target_subset_index.at(rest), col) +=
                    sign * a;
              }
            }
          }
        }
      }
      blocks_.emplace(std::make_pair(j, D), std::move(d));
    }
  }
}

std::size_t KoszulComplex::block_dim(std::size_t j, std::size_t D) const {
  if (j > D || j > exterior_dim()) return 0;
  return monomial_count(n_, D - j) * binomial(exterior_dim(), j);
}

RationalMatrix KoszulComplex::differential(std::size_t j, std::size_t D) const {
  const auto it = blocks_.find({j, D});
  if (it == blocks_.end()) {
    if (block_dim(j, D) == 0) return RationalMatrix(j == 0 ? 0 : block_dim(j - 1, D), 0);
    throw InvalidArgument("Koszul block (" + std::to_string(j) + ", " + std::to_string(D) +
                          ") was not assembled");
  }
  return it->second;
}

std::pair<Exponent, Subset> KoszulComplex::basis_element(std::size_t j, std::size_t D,
                                                         std::size_t i) const {
  const MonomialBasis mons(n_, D - j);
  const auto subsets = subsets_of_size(exterior_dim(), j);
  return {mons.at(i / subsets.size()), subsets[i % subsets.size()]};
}

std::size_t KoszulComplex::basis_index(std::size_t j, std::size_t D, const Exponent& m,
                                       const Subset& s) const {
  const MonomialBasis mons(n_, D - j);
  const auto subsets = subsets_of_size(exterior_dim(), j);
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    if (subsets[si] == s) return mons.index(m) * subsets.size() + si;
  }
  throw InvalidArgument("subset not in exterior basis");
}

namespace {

// Matrix with the right shape even when one side is an empty block.
RationalMatrix block_or_zero(const KoszulComplex& k, std::size_t j, std::size_t D) {
  const std::size_t src = k.block_dim(j, D);
  const std::size_t dst = j == 0 ? 0 : k.block_dim(j - 1, D);
  if (src == 0) return RationalMatrix(dst, 0);
  return k.differential(j, D);
}

}  // namespace

KoszulComplex build_koszul(std::size_t n, const RationalMatrix& f, std::size_t d_max) {
  KoszulComplex k(n, f, d_max);
  for (std::size_t D = 0; D <= d_max; ++D) {
    for (std::size_t j = 2; j <= std::min(k.exterior_dim(), D); ++j) {
      if (!(block_or_zero(k, j - 1, D) * block_or_zero(k, j, D)).is_zero()) {
        throw CompositionNotZero("Koszul differential squares to a non-zero map at (j=" +
                                 std::to_string(j) + ", D=" + std::to_string(D) + ")");
      }
    }
  }
  return k;
}

GradedTable koszul_homology_dims(const KoszulComplex& k, std::size_t d_max) {
  if (d_max > k.d_max()) throw InvalidArgument("Koszul complex was built with a smaller D_max");
  GradedTable table;
  for (std::size_t D = 0; D <= d_max; ++D) {
    for (std::size_t j = 0; j <= k.exterior_dim(); ++j) {
      table[{j, D}] = homology_dim(block_or_zero(k, j + 1, D), block_or_zero(k, j, D));
    }
  }
  return table;
}

GradedTable kunneth_convolution(const GradedTable& a, const GradedTable& b, std::size_t d_max) {
  GradedTable out;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      const std::size_t D = ka.second + kb.second;
      if (D > d_max) continue;
      out[{ka.first + kb.first, D}] += va * vb;
    }
  }
  return out;
}

bool koszul_kunneth_check(const KoszulComplex& k1, const KoszulComplex& k2, std::size_t d_max) {
  const std::size_t n = k1.ring_dim() + k2.ring_dim();
  const std::size_t e = k1.exterior_dim() + k2.exterior_dim();
  RationalMatrix f(e, n);
  for (std::size_t i = 0; i < k1.exterior_dim(); ++i)
    for (std::size_t v = 0; v < k1.ring_dim(); ++v) f(i, v) = k1.f()(i, v);
  for (std::size_t i = 0; i < k2.exterior_dim(); ++i)
    for (std::size_t v = 0; v < k2.ring_dim(); ++v)
      f(k1.exterior_dim() + i, k1.ring_dim() + v) = k2.f()(i, v);
  const KoszulComplex combined = build_koszul(n, f, d_max);

  const GradedTable expected =
      kunneth_convolution(koszul_homology_dims(k1, d_max), koszul_homology_dims(k2, d_max), d_max);
  const GradedTable actual = koszul_homology_dims(combined, d_max);
  for (std::size_t D = 0; D <= d_max; ++D) {
    for (std::size_t j = 0; j <= e; ++j) {
      const auto ie = expected.find({j, D});
      const std::size_t want = ie == expected.end() ? 0 : ie->second;
      if (actual.at({j, D}) != want) return false;
    }
  }
  return true;
}

RationalMatrix twisted_koszul_map(const RationalMatrix& g) {
  if (g.rows() != g.cols()) throw InvalidArgument("twisted_koszul_map: g must be square");
  return (g - RationalMatrix::identity(g.rows())).transpose();
}

GradedTable koszul_restriction_dims(const RationalMatrix& g, std::size_t d_max) {
  const std::size_t n = g.rows();
  const RationalMatrix h = g - RationalMatrix::identity(n);
  // g - 1 injective on E / ker(g - 1)  <=>  ker(g - 1) and im(g - 1) meet in 0
  //                                    <=>  rank (g - 1)^2 = rank (g - 1).
  if (rank(h * h) != rank(h)) {
    throw HypothesisViolated("g - 1 is not injective on E / ker(g - 1)");
  }
  const std::size_t m = n - rank(h);
  GradedTable expected;
  for (std::size_t D = 0; D <= d_max; ++D)
    for (std::size_t q = 0; q <= n; ++q)
      expected[{q, D}] = q <= D ? form_space_dim(m, D - q, q) : 0;

  const KoszulComplex k = build_koszul(n, twisted_koszul_map(g), d_max);
  if (koszul_homology_dims(k, d_max) != expected) {
    throw InvariantViolation("Koszul homology does not match forms on the fixed subspace");
  }
  return expected;
}

}  // namespace orbhc
