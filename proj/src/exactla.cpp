#include "orbhc/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orbhc/errors.hpp"

namespace orbhc {

Rational parse_rational(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw InvalidArgument("empty rational literal");
  const auto slash = cleaned.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string num = cleaned.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : cleaned.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational mod_one(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols);
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols,
                                            std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw InvalidArgument("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw InvalidArgument("matrix product shape mismatch: " + std::to_string(rows_) +
                          "x" + std::to_string(cols_) + " * " +
                          std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  RationalMatrix out(rows_, rhs.cols_);
  Rational tmp;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        out(i, j) += tmp;
      }
    }
  }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn((*this)(i, k)) != 0 && sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  RationalMatrix out = *this;
  out += rhs;
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("difference shape mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix out = *this;
  for (auto& q : out.data_) q *= s;
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_) throw InvalidArgument("hstack row mismatch");
  RationalMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.cols_) throw InvalidArgument("vstack column mismatch");
  RationalMatrix out(a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i) out(a.rows_ + i, j) = b(i, j);
  }
  return out;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational factor, tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), m(r, j).get_mpq_t());
        m(i, j) -= tmp;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  // Row-by-row insertion into a sparse echelon basis; every block we feed
  // in here is very sparse, so this beats dense elimination by far.
  const bool by_rows = m.rows() <= m.cols();
  const std::size_t count = by_rows ? m.rows() : m.cols();
  const std::size_t dim = by_rows ? m.cols() : m.rows();
  SparseEchelon echelon(dim);
  for (std::size_t k = 0; k < count && echelon.rank() < dim; ++k) {
    SparseVector v;
    for (std::size_t t = 0; t < dim; ++t) {
      const Rational& q = by_rows ? m(k, t) : m(t, k);
      if (sgn(q) != 0) v.push_back({static_cast<std::uint32_t>(t), q});
    }
    echelon.insert(std::move(v));
  }
  return echelon.rank();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) {
    throw InvalidArgument("homology_dim: d_in lands in dimension " +
                          std::to_string(d_in.rows()) + " but d_out starts from " +
                          std::to_string(d_out.cols()));
  }
  if (!(d_out * d_in).is_zero()) {
    throw CompositionNotZero("homology_dim: d_out * d_in != 0");
  }
  const std::size_t kernel = d_out.cols() - rank(d_out);
  return kernel - rank(d_in);
}

RationalMatrix averaging_projector(std::span<const RationalMatrix> representation) {
  if (representation.empty()) throw InvalidArgument("empty representation");
  const std::size_t n = representation.front().rows();
  RationalMatrix sum(n, n);
  for (const auto& g : representation) {
    if (g.rows() != n || g.cols() != n) throw InvalidArgument("representation shape mismatch");
    sum += g;
  }
  return sum * Rational(1, static_cast<long>(representation.size()));
}

std::size_t invariant_dimension(std::span<const RationalMatrix> representation) {
  if (representation.empty()) throw InvalidArgument("empty representation");
  Rational total = 0;
  for (const auto& g : representation) total += g.trace();
  total /= static_cast<long>(representation.size());
  if (total.get_den() != 1 || sgn(total) < 0) {
    throw NonIntegralTrace("averaging idempotent has trace " + total.get_str() +
                           "; the matrices do not form a group");
  }
  return total.get_num().get_ui();
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RowEchelon e = rref(RationalMatrix::hstack(m, RationalMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) {
    throw InvalidArgument("matrix is singular");
  }
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

RationalMatrix column_space(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  return m.select_columns(e.pivots);
}

RationalMatrix solve_in_span(const RationalMatrix& basis, const RationalMatrix& target) {
  if (basis.rows() != target.rows()) throw InvalidArgument("solve_in_span shape mismatch");
  const std::size_t k = basis.cols();
  const RowEchelon e = rref(RationalMatrix::hstack(basis, target));
  // Full column rank of basis means the first k pivots are 0..k-1 and the
  // system is consistent iff no pivot lands in the target block.
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= e.pivots.size() || e.pivots[i] != i) {
      throw InvalidArgument("solve_in_span: basis is rank deficient");
    }
  }
  if (e.pivots.size() > k) throw InvalidArgument("solve_in_span: target not in the span");
  RationalMatrix x(k, target.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) x(i, j) = e.reduced(i, k + j);
  return x;
}

namespace {

void subsets_rec(std::size_t n, std::size_t k, std::size_t start,
                 std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace

RationalMatrix exterior_power(const RationalMatrix& m, std::size_t k) {
  if (m.rows() != m.cols()) throw InvalidArgument("exterior_power of a non-square matrix");
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  subsets_rec(m.rows(), k, 0, cur, subsets);
  RationalMatrix out(subsets.size(), subsets.size());
  RationalMatrix minor(k, k);
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(subsets[a][i], subsets[b][j]);
      out(a, b) = k == 0 ? Rational(1) : determinant(minor);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= columns_.size()) throw InvalidArgument("sparse index out of range");
  if (sgn(value) == 0) return;
  columns_[c].push_back({static_cast<std::uint32_t>(r), value});
}

void SparseMatrix::finalize() {
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVector merged;
    for (auto& e : col) {
      if (!merged.empty() && merged.back().index == e.index) {
        merged.back().value += e.value;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const SparseEntry& e) { return sgn(e.value) == 0; });
    col = std::move(merged);
  }
}

RationalMatrix SparseMatrix::to_dense() const {
  RationalMatrix m(rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) m(e.index, c) += e.value;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) s.columns_[c].push_back({static_cast<std::uint32_t>(r), m(r, c)});
  return s;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols() != rhs.rows()) throw InvalidArgument("sparse product shape mismatch");
  SparseMatrix out(rows_, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c)
    for (const auto& e : rhs.columns_[c])
      for (const auto& f : columns_[e.index]) out.add(f.index, c, f.value * e.value);
  out.finalize();
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const SparseVector& v) { return v.empty(); });
}

bool SparseEchelon::insert(SparseVector v) {
  SparseVector scratch;
  Rational tmp;
  while (!v.empty()) {
    const std::uint32_t lead = v.front().index;
    auto& pivot = pivot_of_[lead];
    if (!pivot) {
      const Rational inv = 1 / v.front().value;
      for (auto& e : v) e.value *= inv;
      pivot = std::move(v);
      ++rank_;
      return true;
    }
    // v <- v - v[lead] * pivot; the pivot is normalized to lead 1.
    const Rational factor = v.front().value;
    scratch.clear();
    scratch.reserve(v.size() + pivot->size());
    std::size_t i = 1, j = 1;
    while (i < v.size() || j < pivot->size()) {
      if (j == pivot->size() || (i < v.size() && v[i].index < (*pivot)[j].index)) {
        scratch.push_back(std::move(v[i++]));
      } else {
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), (*pivot)[j].value.get_mpq_t());
        if (i < v.size() && v[i].index == (*pivot)[j].index) {
          v[i].value -= tmp;
          if (sgn(v[i].value) != 0) scratch.push_back(std::move(v[i]));
          ++i;
        } else {
          scratch.push_back({(*pivot)[j].index, -tmp});
        }
        ++j;
      }
    }
    std::swap(v, scratch);
  }
  return false;
}

std::size_t sparse_rank(const SparseMatrix& m, std::optional<std::size_t> stop_at) {
  SparseEchelon echelon(m.rows());
  const std::size_t cap = std::min(m.rows(), m.cols());
  const std::size_t limit = stop_at ? std::min(*stop_at, cap) : cap;
  for (std::size_t c = 0; c < m.cols() && echelon.rank() < limit; ++c) {
    echelon.insert(m.column(c));
  }
  return echelon.rank();
}

}  // namespace orbhc
