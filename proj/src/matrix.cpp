#include "bandq/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "bandq/error.hpp"

namespace bandq {

RationalMatrix::RationalMatrix(std::size_t order) : n_(order), data_(order * order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "matrix order must be >= 1");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

RationalMatrix RationalMatrix::identity(std::size_t order) {
  RationalMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::NonSquare, "matrix has no rows");
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) +
                                            " entries, expected " + std::to_string(n));
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<long>(i * n));
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<long>(i * n_),
                        data_.begin() + static_cast<long>((i + 1) * n_));
}

RationalVector RationalMatrix::diagonal() const {
  RationalVector d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator-() const { return scaled(Rational(-1)); }

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix r = *this;
  for (auto& v : r.data_) v *= c;
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "matrix product order mismatch");
  RationalMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += aik * rhs(k, j);
    }
  return r;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  RationalVector y(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j] != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

std::vector<std::size_t> mask_indices(IndexMask mask, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (IndexMask{1} << i)) idx.push_back(i);
  return idx;
}

std::vector<RationalVector> submatrix(const RationalMatrix& a,
                                      std::span<const std::size_t> rows,
                                      std::span<const std::size_t> cols) {
  std::vector<RationalVector> out(rows.size(), RationalVector(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = a(rows[i], cols[j]);
  return out;
}

RationalMatrix principal_submatrix(const RationalMatrix& a, std::span<const std::size_t> idx) {
  RationalMatrix m(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = a(idx[i], idx[j]);
  return m;
}

Rational determinant(const RationalMatrix& a) {
  const std::size_t n = a.order();
  RationalMatrix m = a;
  Rational prev = 1;
  int flips = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      ++flips;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Rational det = m(n - 1, n - 1);
  return flips % 2 ? Rational(-det) : det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.order();
  std::vector<RationalVector> aug(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
  return inv;
}

LinearSolve solve_linear(const RationalMatrix& m, std::span<const Rational> b) {
  const std::size_t n = m.order();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "rhs size mismatch");
  std::vector<RationalVector> aug(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n] = b[i];
  }
  auto pivots = rref(aug, n);
  LinearSolve out;
  out.singular = pivots.size() < n;
  for (std::size_t i = pivots.size(); i < n; ++i)
    if (aug[i][n] != 0) return out;  // inconsistent
  out.consistent = true;
  out.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug[r][n];
  return out;
}

std::vector<RationalVector> left_null_basis(const RationalMatrix& m) {
  // Null space of M^T.
  const std::size_t n = m.order();
  std::vector<RationalVector> rows(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(j, i);
  auto pivots = rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector y(n);
    y[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(y));
  }
  return basis;
}

SignPattern sign_pattern(const RationalMatrix& a) {
  SignPattern p;
  p.order = a.order();
  p.cells.reserve(p.order * p.order);
  for (std::size_t i = 0; i < p.order; ++i)
    for (std::size_t j = 0; j < p.order; ++j)
      p.cells.push_back(static_cast<Sign>(sgn(a(i, j))));
  return p;
}

bool Permutation::valid() const {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return !images.empty();
}

RationalMatrix Permutation::conjugate(const RationalMatrix& a) const {
  if (images.size() != a.order())
    throw Error(ErrorCode::DimensionMismatch, "permutation order mismatch");
  RationalMatrix b(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) b(i, j) = a(images[i], images[j]);
  return b;
}

RationalVector Permutation::apply(std::span<const Rational> v) const {
  if (images.size() != v.size())
    throw Error(ErrorCode::DimensionMismatch, "permutation order mismatch");
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[images[i]];
  return out;
}

}  // namespace bandq
