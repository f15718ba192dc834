#include "bandq/generate.hpp"

#include <string>

#include "bandq/error.hpp"
#include "bandq/structure.hpp"

namespace bandq {
namespace {

struct Draw {
  std::mt19937_64& rng;
  int range;

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return uniform(0, 1) == 1; }
  long any() { return uniform(-range, range); }
  long positive() { return uniform(1, range); }
  long negative() { return -positive(); }
  long nonnegative() { return uniform(0, range); }
  // Zero with probability about 1/6, otherwise a signed nonzero value.
  long sparse() { return uniform(0, 5) == 0 ? 0 : (coin() ? positive() : negative()); }
};

void set_offdiag(RationalMatrix& a, std::size_t i, long v) { a(i, bdsw_offdiag_col(i, a.order())) = v; }

RationalMatrix triangular(std::size_t n, Draw& d) {
  RationalMatrix a(n);
  const bool lean_positive = d.coin();
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = lean_positive ? d.positive() : d.any();
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = d.any();
  }
  return d.coin() ? a : a.transpose();
}

RationalMatrix triangular_plus_row(std::size_t n, Draw& d) {
  RationalMatrix a(n);
  const bool lean_positive = d.coin();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a(i, i) = lean_positive ? d.positive() : d.any();
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = d.any();
  }
  for (std::size_t j = 0; j + 1 < n; ++j) a(n - 1, j) = d.nonnegative();
  a(n - 1, n - 1) = d.positive();
  return a;
}

RationalMatrix opposite_sign_bdsw(std::size_t n, Draw& d, int diag_sign) {
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    int s = diag_sign != 0 ? diag_sign : (d.coin() ? 1 : -1);
    a(i, i) = s * d.positive();
    set_offdiag(a, i, -s * d.positive());
  }
  return a;
}

bool type1_ok(const RationalMatrix& a, int which_case) {
  return !nonpositive_row(a) && !nonnegative_rows(a).empty() &&
         [&] {
           const std::size_t n = a.order();
           const int s1 = sgn(a(n - 1, 0)), sn = sgn(a(n - 1, n - 1));
           switch (which_case) {
             case 1: return s1 >= 0 && sn > 0;
             case 2: return s1 > 0 && sn == 0;
             case 3: return s1 < 0 && sn > 0;
             case 4: return s1 > 0 && sn < 0;
           }
           return false;
         }();
}

RationalMatrix type1_attempt(std::size_t n, int which_case, Draw& d) {
  RationalMatrix a(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a(i, i) = d.sparse();
    a(i, i + 1) = d.sparse();
  }
  switch (which_case) {
    case 1: a(n - 1, 0) = d.nonnegative(); a(n - 1, n - 1) = d.positive(); break;
    case 2: a(n - 1, 0) = d.positive(); a(n - 1, n - 1) = 0; break;
    case 3: a(n - 1, 0) = d.negative(); a(n - 1, n - 1) = d.positive(); break;
    case 4: a(n - 1, 0) = d.positive(); a(n - 1, n - 1) = d.negative(); break;
  }
  if (!d.coin()) return a;
  // Steer half the draws toward the sign conditions under which Q holds.
  const std::size_t k = static_cast<std::size_t>(d.uniform(0, static_cast<long>(n) - 2));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    switch (which_case) {
      case 1: a(i, i) = d.positive(); break;
      case 2: a(i, i) = d.positive(); a(i, i + 1) = d.negative(); break;
      case 3:
        a(i, i) = d.positive();
        if (i == k) a(i, i + 1) = d.nonnegative();
        break;
      default:
        if (i == k) {
          a(i, i) = d.nonnegative();
          a(i, i + 1) = d.nonnegative();
        }
        break;
    }
  }
  return a;
}

RationalMatrix type3_pattern_b(std::size_t n, Draw& d) {
  // Case 3 with a_kk = 0, a_k(k+1) > 0 and every other row (+, -).
  RationalMatrix a(n);
  const std::size_t k = static_cast<std::size_t>(d.uniform(0, static_cast<long>(n) - 2));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      a(i, i + 1) = d.positive();
    } else {
      a(i, i) = d.positive();
      set_offdiag(a, i, d.negative());
    }
  }
  return a;
}

}  // namespace

InstanceType parse_instance_type(std::string_view name) {
  if (name == "tri") return InstanceType::Triangular;
  if (name == "tri-plus-row") return InstanceType::TriangularPlusRow;
  if (name == "bdsw-1") return InstanceType::BdswType1;
  if (name == "bdsw-2") return InstanceType::BdswType2;
  if (name == "bdsw-3") return InstanceType::BdswType3;
  if (name == "bdsw-4") return InstanceType::BdswType4;
  if (name == "2x2") return InstanceType::TwoByTwo;
  throw Error(ErrorCode::InvalidArgument, "unknown instance type '" + std::string(name) + "'");
}

const char* instance_type_name(InstanceType t) noexcept {
  switch (t) {
    case InstanceType::Triangular: return "tri";
    case InstanceType::TriangularPlusRow: return "tri-plus-row";
    case InstanceType::BdswType1: return "bdsw-1";
    case InstanceType::BdswType2: return "bdsw-2";
    case InstanceType::BdswType3: return "bdsw-3";
    case InstanceType::BdswType4: return "bdsw-4";
    case InstanceType::TwoByTwo: return "2x2";
  }
  return "2x2";
}

RationalMatrix generate_bdsw_type1_case(std::size_t n, int which_case, int entry_range,
                                        std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Type I bdsw needs n >= 2");
  if (which_case < 1 || which_case > 4) throw Error(ErrorCode::InvalidArgument, "Type I case must be 1..4");
  if (entry_range < 1) throw Error(ErrorCode::InvalidArgument, "entry range must be positive");
  Draw d{rng, entry_range};
  if (which_case == 3 && d.uniform(0, 3) == 0) return type3_pattern_b(n, d);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto a = type1_attempt(n, which_case, d);
    if (type1_ok(a, which_case)) return a;
  }
  throw Error(ErrorCode::InvalidArgument, "could not sample a Type I instance");
}

RationalMatrix generate_one(InstanceType type, std::size_t n, int entry_range, std::mt19937_64& rng) {
  if (entry_range < 1) throw Error(ErrorCode::InvalidArgument, "entry range must be positive");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  Draw d{rng, entry_range};
  switch (type) {
    case InstanceType::Triangular:
      return triangular(n, d);
    case InstanceType::TriangularPlusRow:
      if (n < 2) throw Error(ErrorCode::InvalidArgument, "triangular-plus-row needs n >= 2");
      return triangular_plus_row(n, d);
    case InstanceType::BdswType1:
      return generate_bdsw_type1_case(n, static_cast<int>(d.uniform(1, 4)), entry_range, rng);
    case InstanceType::BdswType2:
    case InstanceType::BdswType3:
      if (n < 2) throw Error(ErrorCode::InvalidArgument, "bdsw types need n >= 2");
      return opposite_sign_bdsw(n, d, type == InstanceType::BdswType2 ? 1 : -1);
    case InstanceType::BdswType4:
      if (n < 2) throw Error(ErrorCode::InvalidArgument, "Type IV bdsw needs n >= 2");
      for (;;) {
        auto a = opposite_sign_bdsw(n, d, 0);
        std::size_t neg = 0;
        for (std::size_t i = 0; i < n; ++i) neg += a(i, i) < 0;
        if (neg >= 1 && neg < n) return a;
      }
    case InstanceType::TwoByTwo: {
      if (n != 2) throw Error(ErrorCode::InvalidArgument, "2x2 instances need n = 2");
      RationalMatrix a(2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) a(i, j) = d.any();
      return a;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown instance type");
}

std::vector<RationalMatrix> generate(const GenerateOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<RationalMatrix> out;
  out.reserve(opts.count);
  for (std::size_t c = 0; c < opts.count; ++c) out.push_back(generate_one(opts.type, opts.n, opts.entry_range, rng));
  return out;
}

}  // namespace bandq
