#include "bandq/lcp.hpp"

#include <cstdlib>
#include <string>

#include "bandq/error.hpp"
#include "bandq/simplex.hpp"

namespace bandq {
namespace {

struct Candidate {
  bool found = false;
  bool singular = false;
  RationalVector x;
};

// Candidate for a nonsingular support: x_I = -A_II^{-1} q_I, x_{I^c} = 0.
Candidate nonsingular_candidate(const RationalMatrix& a, const RationalVector& q,
                                const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& rest,
                                const RationalMatrix* inv) {
  Candidate c;
  const std::size_t n = a.order();
  RationalVector x(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < rows.size(); ++j) v -= (*inv)(i, j) * q[rows[j]];
    if (v < 0) return c;
    x[rows[i]] = v;
  }
  for (auto r : rest) {
    Rational w = q[r];
    for (auto j : rows) w += a(r, j) * x[j];
    if (w < 0) return c;
  }
  c.found = true;
  c.x = std::move(x);
  return c;
}

// Singular support: any x_I >= 0 with A_II x_I = -q_I, A_{I^c I} x_I + q_{I^c} >= 0.
Candidate singular_candidate(const RationalMatrix& a, const RationalVector& q,
                             const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& rest) {
  Candidate c;
  c.singular = true;
  FeasibilitySystem sys(rows.size());
  for (auto r : rows) {
    RationalVector coeffs(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) coeffs[j] = a(r, rows[j]);
    sys.add_equality(std::move(coeffs), -q[r]);
  }
  for (auto r : rest) {
    RationalVector coeffs(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) coeffs[j] = a(r, rows[j]);
    sys.add_inequality(std::move(coeffs), -q[r]);
  }
  auto sol = solve_feasibility(sys);
  if (!sol) return c;
  c.found = true;
  c.x.assign(a.order(), Rational(0));
  for (std::size_t j = 0; j < rows.size(); ++j) c.x[rows[j]] = (*sol)[j];
  return c;
}

Candidate empty_candidate(const RationalVector& q) {
  Candidate c;
  for (const auto& v : q)
    if (v < 0) return c;
  c.found = true;
  c.x.assign(q.size(), Rational(0));
  return c;
}

Candidate evaluate_support(const RationalMatrix& a, const RationalVector& q, IndexMask mask) {
  const std::size_t n = a.order();
  if (mask == 0) return empty_candidate(q);
  auto rows = mask_indices(mask, n);
  auto rest = mask_indices(~mask & ((IndexMask{1} << n) - 1), n);
  auto inv = inverse(principal_submatrix(a, rows));
  if (inv) return nonsingular_candidate(a, q, rows, rest, &*inv);
  return singular_candidate(a, q, rows, rest);
}

int support_sign(const RationalMatrix& a, IndexMask support) {
  if (support == 0) return 1;
  auto idx = mask_indices(support, a.order());
  return sgn(determinant(principal_submatrix(a, idx)));
}

LcpSolveResult collect(const RationalMatrix& a, const RationalVector& q,
                       std::vector<Candidate>& candidates) {
  LcpSolveResult result;
  const std::size_t n = a.order();
  for (auto& c : candidates) {
    if (!c.found) continue;
    if (c.singular) result.has_singular_family = true;
    bool duplicate = false;
    for (const auto& s : result.solutions)
      if (s.x == c.x) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    LcpSolution s;
    s.x = std::move(c.x);
    s.singular_family = c.singular;
    auto w = a * s.x;
    s.nondegenerate = true;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += q[i];
      if (s.x[i] > 0) s.support |= IndexMask{1} << i;
      if (s.x[i] + w[i] <= 0) s.nondegenerate = false;
    }
    s.support_det_sign = support_sign(a, s.support);
    result.solutions.push_back(std::move(s));
  }
  return result;
}

void check_instance(const RationalMatrix& a, const RationalVector& q) {
  if (q.size() != a.order())
    throw Error(ErrorCode::DimensionMismatch, "q length differs from matrix order");
  check_enumeration_cap(a.order());
}

}  // namespace

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("LCP_ENUM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v < 31) return static_cast<std::size_t>(v);
  }
  return 16;
}

void check_enumeration_cap(std::size_t n) {
  if (n > enumeration_cap())
    throw Error(ErrorCode::CapExceeded, "order " + std::to_string(n) +
                                            " exceeds the support enumeration cap " +
                                            std::to_string(enumeration_cap()));
}

LcpSolveResult solve_lcp(const LcpInstance& inst, Exec exec) {
  check_instance(inst.a, inst.q);
  const long total = 1L << inst.a.order();
  std::vector<Candidate> candidates(static_cast<std::size_t>(total));
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long mask = 0; mask < total; ++mask)
      candidates[static_cast<std::size_t>(mask)] =
          evaluate_support(inst.a, inst.q, static_cast<IndexMask>(mask));
  } else {
    for (long mask = 0; mask < total; ++mask)
      candidates[static_cast<std::size_t>(mask)] =
          evaluate_support(inst.a, inst.q, static_cast<IndexMask>(mask));
  }
  return collect(inst.a, inst.q, candidates);
}

bool is_lcp_solution(const RationalMatrix& a, const RationalVector& q, const RationalVector& x) {
  if (q.size() != a.order() || x.size() != a.order()) return false;
  auto w = a * x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    w[i] += q[i];
    if (x[i] < 0 || w[i] < 0 || x[i] * w[i] != 0) return false;
  }
  return true;
}

SupportTable::SupportTable(const RationalMatrix& a, Exec exec) : a_(a) {
  check_enumeration_cap(a.order());
  const std::size_t n = a.order();
  const long total = 1L << n;
  entries_.resize(static_cast<std::size_t>(total));
  auto build = [&](long m) {
    auto mask = static_cast<IndexMask>(m);
    Entry& e = entries_[static_cast<std::size_t>(m)];
    e.rows = mask_indices(mask, n);
    e.rest = mask_indices(~mask & ((IndexMask{1} << n) - 1), n);
    if (mask == 0) return;
    RationalMatrix sub = principal_submatrix(a_, e.rows);
    e.det_sign = sgn(determinant(sub));
    if (e.det_sign != 0) {
      e.inverse = inverse(sub);
    } else {
      e.left_null = left_null_basis(sub);
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long m = 0; m < total; ++m) build(m);
  } else {
    for (long m = 0; m < total; ++m) build(m);
  }
}

LcpSolveResult SupportTable::solve(const RationalVector& q) const {
  check_instance(a_, q);
  std::vector<Candidate> candidates(entries_.size());
  for (std::size_t m = 0; m < entries_.size(); ++m) {
    const Entry& e = entries_[m];
    if (m == 0) {
      candidates[m] = empty_candidate(q);
    } else if (e.inverse) {
      candidates[m] = nonsingular_candidate(a_, q, e.rows, e.rest, &*e.inverse);
    } else {
      candidates[m] = singular_candidate(a_, q, e.rows, e.rest);
    }
  }
  return collect(a_, q, candidates);
}

std::optional<RationalVector> SupportTable::find_solution(const RationalVector& q) const {
  check_instance(a_, q);
  if (auto c = empty_candidate(q); c.found) return c.x;
  for (std::size_t m = 1; m < entries_.size(); ++m) {
    const Entry& e = entries_[m];
    if (!e.inverse) continue;
    if (auto c = nonsingular_candidate(a_, q, e.rows, e.rest, &*e.inverse); c.found) return c.x;
  }
  for (std::size_t m = 1; m < entries_.size(); ++m) {
    const Entry& e = entries_[m];
    if (e.inverse) continue;
    if (auto c = singular_candidate(a_, q, e.rows, e.rest); c.found) return c.x;
  }
  return std::nullopt;
}

std::optional<int> SupportTable::signed_solution_count(const RationalVector& q) const {
  check_instance(a_, q);
  int total = 0;
  for (std::size_t m = 0; m < entries_.size(); ++m) {
    const Entry& e = entries_[m];
    if (m != 0 && !e.inverse) {
      for (const auto& y : e.left_null) {
        Rational s = 0;
        for (std::size_t j = 0; j < e.rows.size(); ++j) s += y[j] * q[e.rows[j]];
        if (s != 0) goto next_support;  // inconsistent
      }
      return std::nullopt;  // consistent singular system
    }
    {
      RationalVector x(a_.order());
      for (std::size_t i = 0; i < e.rows.size(); ++i) {
        Rational v = 0;
        for (std::size_t j = 0; j < e.rows.size(); ++j) v -= (*e.inverse)(i, j) * q[e.rows[j]];
        if (v < 0) goto next_support;
        if (v == 0) return std::nullopt;
        x[e.rows[i]] = v;
      }
      bool feasible = true, degenerate = false;
      for (auto r : e.rest) {
        Rational w = q[r];
        for (auto j : e.rows) w += a_(r, j) * x[j];
        if (w < 0) {
          feasible = false;
          break;
        }
        if (w == 0) degenerate = true;
      }
      if (!feasible) continue;
      if (degenerate) return std::nullopt;
      total += e.det_sign;
    }
  next_support:;
  }
  return total;
}

}  // namespace bandq
