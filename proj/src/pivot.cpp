#include "bandq/pivot.hpp"

#include <algorithm>

#include "bandq/error.hpp"

namespace bandq {
namespace {

std::vector<RationalVector> block(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
  return submatrix(a, rows, cols);
}

RationalMatrix pivot_inverse(const BlockSplit& s) {
  if (s.pivot.size() == 1) {
    if (s.e[0][0] == 0) throw Error(ErrorCode::SingularPivot, "pivot entry is zero");
    return RationalMatrix{{1 / s.e[0][0]}};
  }
  auto inv = inverse(RationalMatrix::from_rows(s.e));
  if (!inv) throw Error(ErrorCode::SingularPivot, "pivot block is singular");
  return *inv;
}

// Rectangular product helpers over row vectors.
std::vector<RationalVector> mul(const std::vector<RationalVector>& x, const std::vector<RationalVector>& y,
                                std::size_t cols) {
  std::vector<RationalVector> out(x.size(), RationalVector(cols));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

std::vector<RationalVector> rows_of(const RationalMatrix& m) {
  std::vector<RationalVector> r;
  for (std::size_t i = 0; i < m.order(); ++i) r.push_back(m.row(i));
  return r;
}

}  // namespace

BlockSplit BlockSplit::of(const RationalMatrix& a, std::vector<std::size_t> pivot) {
  const std::size_t n = a.order();
  std::sort(pivot.begin(), pivot.end());
  pivot.erase(std::unique(pivot.begin(), pivot.end()), pivot.end());
  if (pivot.empty()) throw Error(ErrorCode::InvalidArgument, "empty pivot set");
  if (pivot.back() >= n) throw Error(ErrorCode::IndexOutOfRange, "pivot index out of range");
  BlockSplit s;
  s.pivot = std::move(pivot);
  for (std::size_t i = 0, p = 0; i < n; ++i) {
    if (p < s.pivot.size() && s.pivot[p] == i)
      ++p;
    else
      s.others.push_back(i);
  }
  s.b = block(a, s.others, s.others);
  s.c = block(a, s.others, s.pivot);
  s.d = block(a, s.pivot, s.others);
  s.e = block(a, s.pivot, s.pivot);
  return s;
}

RationalMatrix schur_complement(const RationalMatrix& a, std::vector<std::size_t> pivot) {
  auto s = BlockSplit::of(a, std::move(pivot));
  if (s.others.empty()) throw Error(ErrorCode::InvalidArgument, "pivot set covers every index");
  auto einv = rows_of(pivot_inverse(s));
  auto ced = mul(mul(s.c, einv, s.pivot.size()), s.d, s.others.size());
  RationalMatrix out(s.others.size());
  for (std::size_t i = 0; i < s.others.size(); ++i)
    for (std::size_t j = 0; j < s.others.size(); ++j) out(i, j) = s.b[i][j] - ced[i][j];
  return out;
}

RationalMatrix ppt(const RationalMatrix& a, std::vector<std::size_t> pivot) {
  auto s = BlockSplit::of(a, std::move(pivot));
  const std::size_t p = s.pivot.size(), m = s.others.size();
  auto einv = rows_of(pivot_inverse(s));
  auto ce = mul(s.c, einv, p);   // C E^{-1}
  auto ed = mul(einv, s.d, m);   // E^{-1} D
  auto ced = mul(ce, s.d, m);
  RationalMatrix out(a.order());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(s.others[i], s.others[j]) = s.b[i][j] - ced[i][j];
    for (std::size_t j = 0; j < p; ++j) out(s.others[i], s.pivot[j]) = ce[i][j];
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(s.pivot[i], s.others[j]) = -ed[i][j];
    for (std::size_t j = 0; j < p; ++j) out(s.pivot[i], s.pivot[j]) = einv[i][j];
  }
  return out;
}

}  // namespace bandq
