#include "bandq/classifier.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "bandq/error.hpp"

namespace bandq {
namespace {

ClassVerdict verdict(bool yes, const char* rule, std::string condition) {
  return make_verdict(yes ? Answer::Yes : Answer::No, rule, std::move(condition));
}

bool positive_diagonal(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    if (a(i, i) <= 0) return false;
  return true;
}

Rational checked_bdsw_det(const RationalMatrix& a) {
  Rational d = bdsw_determinant(a);
  if (d != determinant(a)) throw std::logic_error("bdsw determinant formula disagrees with elimination");
  return d;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::WrongStructure, what);
}

const Rational& offdiag(const RationalMatrix& a, std::size_t i) {
  return a(i, bdsw_offdiag_col(i, a.order()));
}

// Every row has diagonal and relevant off-diagonal entries of opposite
// nonzero signs.
bool opposite_sign_rows(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    if (sgn(a(i, i)) * sgn(offdiag(a, i)) != -1) return false;
  return true;
}

std::size_t negative_diagonal_count(const RationalMatrix& a) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.order(); ++i) k += a(i, i) < 0;
  return k;
}

ClassVerdict signed_det_verdict(const RationalMatrix& a, const char* rule, int exponent,
                                const std::string& label) {
  Rational det = checked_bdsw_det(a);
  Rational signed_det = exponent % 2 == 0 ? det : Rational(-det);
  auto v = verdict(signed_det > 0, rule, label + (signed_det > 0 ? " > 0" : " <= 0"));
  v.certificate.scalars["det"] = det;
  return v;
}

// 2x2 sign-pattern matcher. Symbols: '+', '-', '0', 'p' (>= 0), '*' (any).
bool matches(const RationalMatrix& a, const char* pattern) {
  for (std::size_t c = 0; c < 4; ++c) {
    const Rational& v = a(c / 2, c % 2);
    switch (pattern[c]) {
      case '+': if (v <= 0) return false; break;
      case '-': if (v >= 0) return false; break;
      case '0': if (v != 0) return false; break;
      case 'p': if (v < 0) return false; break;
      default: break;
    }
  }
  return true;
}

std::string pattern_label(const char* p) {
  auto sym = [](char c) -> std::string {
    switch (c) {
      case 'p': return "⊕";
      default: return std::string(1, c);
    }
  };
  return sym(p[0]) + " " + sym(p[1]) + " / " + sym(p[2]) + " " + sym(p[3]);
}

}  // namespace

ClassVerdict classify_triangular(const RationalMatrix& a) {
  require(is_upper_triangular(a) || is_lower_triangular(a), "matrix is not triangular");
  bool yes = positive_diagonal(a);
  auto v = verdict(yes, "T3.1", yes ? "positive diagonal" : "diagonal not positive");
  if (yes) v.certificate.notes["implies"] = "P, E, R*";
  return v;
}

ClassVerdict classify_triangular_plus_row(const RationalMatrix& a) {
  require(is_triangular_plus_row(a),
          "not an upper-triangular block with nonnegative last row and positive corner");
  bool yes = positive_diagonal(a);
  return verdict(yes, "T3.2", yes ? "positive diagonal" : "diagonal not positive");
}

int bdsw_type1_case(const RationalMatrix& a) {
  const std::size_t n = a.order();
  const int s1 = sgn(a(n - 1, 0)), sn = sgn(a(n - 1, n - 1));
  if (s1 >= 0 && sn > 0) return 1;
  if (s1 > 0 && sn == 0) return 2;
  if (s1 < 0 && sn > 0) return 3;
  if (s1 > 0 && sn < 0) return 4;
  return 0;
}

ClassVerdict classify_bdsw_type1(const RationalMatrix& a) {
  const std::size_t n = a.order();
  require(n >= 2 && is_bdsw_shape(a) && !nonpositive_row(a) && !nonnegative_rows(a).empty(),
          "not a Type I bdsw matrix");
  const int which = bdsw_type1_case(a);
  ClassVerdict v;
  switch (which) {
    case 1: {
      bool yes = positive_diagonal(a);
      v = verdict(yes, "T5.1", yes ? "positive diagonal" : "diagonal not positive");
      break;
    }
    case 2: {
      bool head = true, superdiag = true;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        head = head && a(i, i) > 0;
        superdiag = superdiag && a(i, i + 1) < 0;
      }
      bool yes = head && superdiag;
      v = verdict(yes, "T5.2",
                  yes ? "a_ii > 0 for i < n and negative superdiagonal"
                      : (head ? "superdiagonal not negative" : "a_ii not positive for some i < n"));
      if (yes && checked_bdsw_det(a) <= 0)
        throw std::logic_error("Case 2 Q-matrix with nonpositive determinant");
      break;
    }
    case 3: {
      if (positive_diagonal(a)) {
        v = verdict(true, "T5.3", "positive diagonal");
        break;
      }
      for (auto k : nonnegative_rows(a)) {
        if (k + 1 == n || a(k, k) != 0 || a(k, k + 1) <= 0) continue;
        bool rest = true;
        for (std::size_t i = 0; i < n && rest; ++i)
          if (i != k) rest = a(i, i) > 0 && offdiag(a, i) < 0;
        if (rest) {
          v = verdict(true, "T5.3", "a_kk = 0, a_k(k+1) > 0, a_ii > 0 and a_i(i+1) < 0 for i != k");
          v.certificate.scalars["k"] = static_cast<long>(k + 1);
          return v;
        }
      }
      v = verdict(false, "T5.3", "diagonal not positive and no admissible zero-diagonal row");
      break;
    }
    case 4:
      v = verdict(false, "T5.4", "a_n1 > 0 and a_nn < 0");
      break;
    default:
      throw Error(ErrorCode::WrongStructure, "last row outside the Type I cases");
  }
  v.certificate.scalars["case"] = which;
  return v;
}

ClassVerdict classify_bdsw_type2(const RationalMatrix& a) {
  require(a.order() >= 2 && is_bdsw_shape(a) && opposite_sign_rows(a) &&
              negative_diagonal_count(a) == 0,
          "not a Type II bdsw matrix");
  auto v = signed_det_verdict(a, "T6.1", 0, "det A");
  if (v.yes()) v.certificate.notes["implies"] = "P, R*";
  return v;
}

ClassVerdict classify_bdsw_type3(const RationalMatrix& a) {
  const std::size_t n = a.order();
  require(n >= 2 && is_bdsw_shape(a) && opposite_sign_rows(a) && negative_diagonal_count(a) == n,
          "not a Type III bdsw matrix");
  return signed_det_verdict(a, "T7.1", static_cast<int>(n + 1), "(-1)^(n+1) det A");
}

ClassVerdict classify_bdsw_type4(const RationalMatrix& a) {
  const std::size_t n = a.order();
  const std::size_t k = negative_diagonal_count(a);
  require(n >= 2 && is_bdsw_shape(a) && opposite_sign_rows(a) && k >= 1 && k < n,
          "not a Type IV bdsw matrix");
  auto v = signed_det_verdict(a, "T8.1", static_cast<int>(k + 1), "(-1)^(k+1) det A");
  v.certificate.scalars["k"] = static_cast<long>(k);
  return v;
}

ClassVerdict classify_2x2(const RationalMatrix& a) {
  if (a.order() != 2) throw Error(ErrorCode::WrongStructure, "matrix is not 2x2");
  static constexpr std::array<const char*, 4> unconditional{"+*p+", "+p*+", "0+-+", "+-+0"};
  static constexpr std::array<const char*, 3> positive_det{"+--+", "-+-+", "+-+-"};
  static constexpr const char* negative_det = "-++-";
  const Rational det = determinant(a);
  auto hit = [&](const char* kind, const char* p) {
    auto v = verdict(true, "T9.1", std::string("pattern ") + kind);
    v.certificate.notes["pattern"] = pattern_label(p);
    v.certificate.scalars["det"] = det;
    return v;
  };
  for (auto p : unconditional)
    if (matches(a, p)) return hit("i", p);
  if (det > 0)
    for (auto p : positive_det)
      if (matches(a, p)) return hit("ii", p);
  if (det < 0 && matches(a, negative_det)) return hit("iii", negative_det);
  auto v = verdict(false, "T9.1", "no admissible pattern");
  v.certificate.scalars["det"] = det;
  return v;
}

ClassVerdict classify_structural(const RationalMatrix& a) {
  const std::size_t n = a.order();
  if (auto row = nonpositive_row(a)) {
    auto v = verdict(false, "T2.2", "nonpositive row " + std::to_string(*row + 1));
    v.certificate.scalars["row"] = static_cast<long>(*row + 1);
    return v;
  }
  if (n == 1) return verdict(true, "T3.1", "positive 1x1 entry");
  if (n == 2) return classify_2x2(a);
  if (is_upper_triangular(a) || is_lower_triangular(a)) return classify_triangular(a);
  if (is_triangular_plus_row(a)) return classify_triangular_plus_row(a);
  if (is_bdsw_shape(a)) {
    if (!nonnegative_rows(a).empty()) return classify_bdsw_type1(a);
    if (opposite_sign_rows(a)) {
      const std::size_t k = negative_diagonal_count(a);
      if (k == 0) return classify_bdsw_type2(a);
      if (k == n) return classify_bdsw_type3(a);
      return classify_bdsw_type4(a);
    }
  }
  return make_verdict(Answer::Undecided, "none", "no structural characterization applies");
}

ClassVerdict classify(const RationalMatrix& a, const OracleOptions& fallback) {
  auto v = classify_structural(a);
  if (v.decided()) return v;
  return q_oracle(a, fallback);
}

}  // namespace bandq
