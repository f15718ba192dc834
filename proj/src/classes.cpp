#include "bandq/classes.hpp"

#include <string>

#include "bandq/error.hpp"
#include "bandq/lcp.hpp"
#include "bandq/simplex.hpp"
#include "kernels.hpp"

namespace bandq {
namespace {

long support_count(const RationalMatrix& a) { return 1L << a.order(); }

RationalVector block_row(const RationalMatrix& a, std::size_t r,
                         const std::vector<std::size_t>& cols, int scale = 1) {
  RationalVector out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out[j] = scale * a(r, cols[j]);
  return out;
}

RationalVector expand(const RationalVector& xi, const std::vector<std::size_t>& idx, std::size_t n) {
  RationalVector x(n);
  for (std::size_t j = 0; j < idx.size(); ++j) x[idx[j]] = xi[j];
  return x;
}

RationalVector one_based(const std::vector<std::size_t>& idx) {
  RationalVector v;
  for (auto i : idx) v.emplace_back(static_cast<long>(i + 1));
  return v;
}

struct Support {
  std::vector<std::size_t> rows, rest;
  Support(const RationalMatrix& a, long mask) {
    auto m = static_cast<IndexMask>(mask);
    const std::size_t n = a.order();
    rows = mask_indices(m, n);
    rest = mask_indices(~m & ((IndexMask{1} << n) - 1), n);
  }
};

// Nonzero x >= 0 supported in I with A_II x_I = 0 and A_{I^c I} x_I >= 0.
std::optional<RationalVector> r0_witness(const RationalMatrix& a, long mask) {
  Support s(a, mask);
  FeasibilitySystem sys(s.rows.size());
  sys.add_equality(RationalVector(s.rows.size(), Rational(1)), 1);
  for (auto r : s.rows) sys.add_equality(block_row(a, r, s.rows), 0);
  for (auto r : s.rest) sys.add_inequality(block_row(a, r, s.rows), 0);
  auto x = solve_feasibility(sys);
  if (!x) return std::nullopt;
  return expand(*x, s.rows, a.order());
}

ClassVerdict principal_minor_test(const RationalMatrix& a, Exec exec, bool strict) {
  check_enumeration_cap(a.order());
  auto hit = detail::first_hit<Rational>(1, support_count(a), exec, [&](long mask) -> std::optional<Rational> {
    auto idx = mask_indices(static_cast<IndexMask>(mask), a.order());
    Rational minor = determinant(principal_submatrix(a, idx));
    if (strict ? minor <= 0 : minor < 0) return minor;
    return std::nullopt;
  });
  const char* rule = strict ? "P" : "P0";
  if (!hit)
    return make_verdict(Answer::Yes, rule,
                        strict ? "all principal minors positive" : "all principal minors nonnegative");
  auto v = make_verdict(Answer::No, rule, strict ? "nonpositive principal minor" : "negative principal minor");
  v.certificate.vectors["index_set"] =
      one_based(mask_indices(static_cast<IndexMask>(hit->first), a.order()));
  v.certificate.scalars["minor"] = hit->second;
  return v;
}

}  // namespace

ClassVerdict is_R0(const RationalMatrix& a, Exec exec) {
  check_enumeration_cap(a.order());
  auto hit = detail::first_hit<RationalVector>(1, support_count(a), exec,
                                               [&](long mask) { return r0_witness(a, mask); });
  if (!hit) return make_verdict(Answer::Yes, "R0", "LCP(A,0) has only the zero solution");
  auto v = make_verdict(Answer::No, "R0", "nonzero solution of LCP(A,0)");
  v.certificate.vectors["x"] = std::move(hit->second);
  return v;
}

ClassVerdict is_Rd(const RationalMatrix& a, const RationalVector& d, Exec exec) {
  if (d.size() != a.order()) throw Error(ErrorCode::DimensionMismatch, "d length differs from matrix order");
  for (const auto& di : d)
    if (di <= 0) throw Error(ErrorCode::NotPositive, "d must be componentwise positive");
  auto r0 = is_R0(a, exec);
  if (!r0.yes()) {
    r0.certificate.rule = "R(d)";
    return r0;
  }
  auto hit = detail::first_hit<RationalVector>(1, support_count(a), exec, [&](long mask) -> std::optional<RationalVector> {
    Support s(a, mask);
    FeasibilitySystem sys(s.rows.size());
    for (auto r : s.rows) sys.add_equality(block_row(a, r, s.rows), -d[r]);
    for (auto r : s.rest) sys.add_inequality(block_row(a, r, s.rows), -d[r]);
    auto x = solve_feasibility(sys);
    if (!x) return std::nullopt;
    return expand(*x, s.rows, a.order());
  });
  ClassVerdict v = hit ? make_verdict(Answer::No, "R(d)", "nonzero solution of LCP(A,d)")
                       : make_verdict(Answer::Yes, "R(d)", "LCP(A,d) and LCP(A,0) have only the zero solution");
  v.certificate.vectors["d"] = d;
  if (hit) v.certificate.vectors["x"] = std::move(hit->second);
  return v;
}

ClassVerdict is_E0(const RationalMatrix& a, Exec exec) {
  check_enumeration_cap(a.order());
  // Not E0 iff some x_I >= 0 has A_II x_I <= -1 (homogeneous scaling of < 0).
  auto hit = detail::first_hit<RationalVector>(1, support_count(a), exec, [&](long mask) -> std::optional<RationalVector> {
    Support s(a, mask);
    FeasibilitySystem sys(s.rows.size());
    for (auto r : s.rows) sys.add_inequality(block_row(a, r, s.rows, -1), 1);
    auto x = solve_feasibility(sys);
    if (!x) return std::nullopt;
    return expand(*x, s.rows, a.order());
  });
  if (!hit) return make_verdict(Answer::Yes, "E0", "max over support of x_i (Ax)_i >= 0 for all 0 != x >= 0");
  auto v = make_verdict(Answer::No, "E0", "x_i (Ax)_i < 0 on the whole support of x");
  v.certificate.vectors["x"] = std::move(hit->second);
  return v;
}

ClassVerdict is_E(const RationalMatrix& a, Exec exec) {
  check_enumeration_cap(a.order());
  auto hit = detail::first_hit<RationalVector>(1, support_count(a), exec, [&](long mask) -> std::optional<RationalVector> {
    Support s(a, mask);
    FeasibilitySystem sys(s.rows.size());
    sys.add_equality(RationalVector(s.rows.size(), Rational(1)), 1);
    for (auto r : s.rows) sys.add_inequality(block_row(a, r, s.rows, -1), 0);
    auto x = solve_feasibility(sys);
    if (!x) return std::nullopt;
    return expand(*x, s.rows, a.order());
  });
  if (!hit) return make_verdict(Answer::Yes, "E", "max over support of x_i (Ax)_i > 0 for all 0 != x >= 0");
  auto v = make_verdict(Answer::No, "E", "x_i (Ax)_i <= 0 on the whole support of x");
  v.certificate.vectors["x"] = std::move(hit->second);
  return v;
}

ClassVerdict is_S(const RationalMatrix& a) {
  const std::size_t n = a.order();
  FeasibilitySystem sys(n);
  for (std::size_t r = 0; r < n; ++r) sys.add_inequality(a.row(r), 1);
  auto x = solve_feasibility(sys);
  if (!x) return make_verdict(Answer::No, "S", "no x >= 0 with Ax > 0");
  // Ax >= 1, so x + eps 1 is strictly positive with A(x + eps 1) > 0 once
  // eps * (max absolute row sum) < 1.
  Rational norm = 0;
  for (std::size_t r = 0; r < n; ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(a(r, j));
    if (s > norm) norm = s;
  }
  Rational eps = 1 / (2 * (norm + 1));
  for (auto& xi : *x) xi += eps;
  auto v = make_verdict(Answer::Yes, "S", "x > 0 with Ax > 0");
  v.certificate.vectors["x"] = std::move(*x);
  return v;
}

ClassVerdict is_P(const RationalMatrix& a, Exec exec) { return principal_minor_test(a, exec, true); }

ClassVerdict is_P0(const RationalMatrix& a, Exec exec) { return principal_minor_test(a, exec, false); }

ClassVerdict is_Z(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (i != j && a(i, j) > 0) {
        auto v = make_verdict(Answer::No, "Z", "positive off-diagonal entry");
        v.certificate.vectors["entry"] = {Rational(static_cast<long>(i + 1)),
                                          Rational(static_cast<long>(j + 1))};
        return v;
      }
  return make_verdict(Answer::Yes, "Z", "off-diagonal entries nonpositive");
}

ClassVerdict is_Rstar(const RationalMatrix& a, Exec exec) {
  auto r0 = is_R0(a, exec);
  if (!r0.yes()) {
    r0.certificate.rule = "R*";
    return r0;
  }
  auto e0 = is_E0(a, exec);
  e0.certificate.rule = "R*";
  if (e0.yes()) e0.certificate.condition = "R0 and E0";
  return e0;
}

}  // namespace bandq
