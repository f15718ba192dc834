#include "bandq/oracle.hpp"

#include <random>

#include "bandq/classes.hpp"
#include "bandq/degree.hpp"
#include "bandq/error.hpp"
#include "bandq/lcp.hpp"
#include "bandq/structure.hpp"
#include "kernels.hpp"

namespace bandq {
namespace {

// Every vector in {-1, 0, 1}^n except those that are >= 0 (always solvable
// by x = 0). Scaling is irrelevant: LCP(A, tq) is solvable iff LCP(A, q) is.
void add_sign_corners(std::size_t n, std::vector<RationalVector>& probes) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    RationalVector q(n);
    bool has_negative = false;
    for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) {
      q[i] = static_cast<long>(c % 3) - 1;
      has_negative |= q[i] < 0;
    }
    if (has_negative) probes.push_back(std::move(q));
  }
}

// Points just outside each facet of every nonsingular complementary cone.
// The cone of support I is generated by -A e_i (i in I) and e_i (i not in I);
// the probe uses weight 1 on all generators but one, which gets -eps.
void add_facet_probes(const SupportTable& table, std::vector<RationalVector>& probes) {
  const RationalMatrix& a = table.matrix();
  const std::size_t n = a.order();
  const Rational eps(1, 64);
  auto generator = [&](IndexMask mask, std::size_t k) {
    RationalVector g(n);
    if (mask >> k & 1U) {
      for (std::size_t i = 0; i < n; ++i) g[i] = -a(i, k);
    } else {
      g[k] = 1;
    }
    return g;
  };
  for (IndexMask mask = 0; mask < (IndexMask{1} << n); ++mask) {
    if (table.det_sign(mask) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector q(n);
      for (std::size_t k = 0; k < n; ++k) {
        auto g = generator(mask, k);
        Rational w = k == j ? Rational(-eps) : Rational(1);
        for (std::size_t i = 0; i < n; ++i) q[i] += w * g[i];
      }
      probes.push_back(std::move(q));
    }
  }
}

void add_random_probes(std::size_t n, std::size_t count, std::uint64_t seed,
                       std::vector<RationalVector>& probes) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (std::size_t c = 0; c < count; ++c) {
    RationalVector q(n);
    for (auto& qi : q) {
      qi = Rational(num(rng), den(rng));
      qi.canonicalize();
    }
    probes.push_back(std::move(q));
  }
}

ClassVerdict unsolvable(RationalVector q, std::string condition) {
  auto v = make_verdict(Answer::No, "oracle", std::move(condition));
  v.certificate.vectors["q"] = std::move(q);
  return v;
}

}  // namespace

ClassVerdict q_oracle(const RationalMatrix& a, const OracleOptions& opts) {
  const std::size_t n = a.order();
  check_enumeration_cap(n);

  if (auto row = nonpositive_row(a)) {
    RationalVector q(n);
    q[*row] = -1;
    auto v = unsolvable(std::move(q), "nonpositive row");
    v.certificate.scalars["row"] = static_cast<long>(*row + 1);
    return v;
  }

  if (auto s = is_S(a); !s.yes())
    return unsolvable(RationalVector(n, Rational(-1)), "not an S-matrix");

  auto r0 = is_R0(a, opts.exec);
  if (r0.yes()) {
    if (is_E0(a, opts.exec).yes()) return make_verdict(Answer::Yes, "oracle", "R0 and E0");
    try {
      int deg = degree_unchecked(a, {opts.seed, 64, opts.exec});
      if (deg != 0) {
        auto v = make_verdict(Answer::Yes, "oracle", "R0 with nonzero degree");
        v.certificate.scalars["degree"] = deg;
        return v;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResampleBudgetExhausted) throw;
    }
  }

  SupportTable table(a, opts.exec);
  std::vector<RationalVector> probes;
  add_sign_corners(n, probes);
  add_facet_probes(table, probes);
  add_random_probes(n, opts.budget, opts.seed, probes);
  auto hit = detail::first_hit<RationalVector>(
      0, static_cast<long>(probes.size()), opts.exec,
      [&](long i) -> std::optional<RationalVector> {
        const auto& q = probes[static_cast<std::size_t>(i)];
        if (table.find_solution(q)) return std::nullopt;
        return q;
      });
  if (hit) return unsolvable(std::move(hit->second), "LCP(A, q) has no solution");

  auto v = make_verdict(Answer::Undecided, "oracle", "no unsolvable probe and no sufficient condition");
  v.certificate.scalars["probes"] = static_cast<long>(probes.size());
  v.certificate.notes["R0"] = answer_name(r0.answer);
  return v;
}

}  // namespace bandq
