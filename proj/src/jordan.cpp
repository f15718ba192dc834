#include "bandq/jordan.hpp"

#include <cmath>
#include <string>

#include "bandq/error.hpp"
#include "bandq/lcp.hpp"

namespace bandq::jordan {
namespace {

const double kSqrt2 = std::sqrt(2.0);

void same_algebra(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (!(a == b)) throw Error(ErrorCode::AlgebraMismatch, algebra_name(a) + " vs " + algebra_name(b));
}

// Coordinate index of the (i, j) off-diagonal basis element, i < j.
std::size_t off_index(std::size_t m, std::size_t i, std::size_t j) {
  // Rows 0..i-1 contribute (m-1) + (m-2) + ... entries.
  return m + i * (2 * m - i - 1) / 2 + (j - i - 1);
}

JordanElement basis(const AlgebraSpec& spec, std::size_t k) {
  JordanElement e = zero(spec);
  e.coords[static_cast<Eigen::Index>(k)] = 1;
  return e;
}

Eigen::MatrixXd to_double(const RationalMatrix& a) {
  Eigen::MatrixXd m(a.order(), a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) m(i, j) = bandq::to_double(a(i, j));
  return m;
}

Eigen::VectorXd to_double(const RationalVector& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = bandq::to_double(v[i]);
  return out;
}

Eigen::VectorXd gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Eigen::VectorXd v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

AlgebraSpec AlgebraSpec::rn(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "algebra rank must be positive");
  return {AlgebraKind::Rn, n};
}

AlgebraSpec AlgebraSpec::sym(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "algebra rank must be positive");
  return {AlgebraKind::Sym, m};
}

std::size_t AlgebraSpec::dimension() const noexcept {
  return kind == AlgebraKind::Rn ? rank : rank * (rank + 1) / 2;
}

AlgebraSpec parse_algebra(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "algebra must look like rn:N or sym:M");
  auto kind = text.substr(0, colon);
  std::size_t size = 0;
  try {
    size = std::stoul(std::string(text.substr(colon + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad algebra size in '" + std::string(text) + "'");
  }
  if (kind == "rn") return AlgebraSpec::rn(size);
  if (kind == "sym") return AlgebraSpec::sym(size);
  throw Error(ErrorCode::ParseError, "unknown algebra kind '" + std::string(kind) + "'");
}

std::string algebra_name(const AlgebraSpec& spec) {
  return (spec.kind == AlgebraKind::Rn ? "rn:" : "sym:") + std::to_string(spec.rank);
}

JordanElement LinearTransform::operator()(const JordanElement& x) const {
  same_algebra(algebra, x.algebra);
  return {algebra, matrix * x.coords};
}

LinearTransform LinearTransform::compose(const LinearTransform& inner) const {
  same_algebra(algebra, inner.algebra);
  return {algebra, matrix * inner.matrix};
}

JordanElement zero(const AlgebraSpec& spec) {
  return {spec, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.dimension()))};
}

JordanElement unit(const AlgebraSpec& spec) {
  JordanElement e = zero(spec);
  e.coords.head(static_cast<Eigen::Index>(spec.rank)).setOnes();
  return e;
}

JordanElement from_symmetric(const Eigen::MatrixXd& x) {
  const auto m = static_cast<std::size_t>(x.rows());
  JordanElement e = zero(AlgebraSpec::sym(m));
  for (std::size_t i = 0; i < m; ++i) {
    e.coords[i] = x(i, i);
    for (std::size_t j = i + 1; j < m; ++j)
      e.coords[off_index(m, i, j)] = kSqrt2 * 0.5 * (x(i, j) + x(j, i));
  }
  return e;
}

Eigen::MatrixXd to_symmetric(const JordanElement& x) {
  if (x.algebra.kind != AlgebraKind::Sym)
    throw Error(ErrorCode::AlgebraMismatch, "element is not a symmetric matrix");
  const std::size_t m = x.algebra.rank;
  Eigen::MatrixXd out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    out(i, i) = x.coords[i];
    for (std::size_t j = i + 1; j < m; ++j) out(i, j) = out(j, i) = x.coords[off_index(m, i, j)] / kSqrt2;
  }
  return out;
}

JordanElement operator+(const JordanElement& x, const JordanElement& y) {
  same_algebra(x.algebra, y.algebra);
  return {x.algebra, x.coords + y.coords};
}

JordanElement operator-(const JordanElement& x, const JordanElement& y) {
  same_algebra(x.algebra, y.algebra);
  return {x.algebra, x.coords - y.coords};
}

JordanElement operator*(double c, const JordanElement& x) { return {x.algebra, c * x.coords}; }

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
  same_algebra(x.algebra, y.algebra);
  if (x.algebra.kind == AlgebraKind::Rn) return {x.algebra, x.coords.cwiseProduct(y.coords)};
  Eigen::MatrixXd a = to_symmetric(x), b = to_symmetric(y);
  return from_symmetric(0.5 * (a * b + b * a));
}

double trace_inner_product(const JordanElement& x, const JordanElement& y) {
  same_algebra(x.algebra, y.algebra);
  return x.coords.dot(y.coords);
}

double trace(const JordanElement& x) { return x.coords.head(static_cast<Eigen::Index>(x.algebra.rank)).sum(); }

Spectral spectral_decomposition(const JordanElement& x) {
  if (x.algebra.kind == AlgebraKind::Rn) return {x.coords, standard_frame(x.algebra)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_symmetric(x));
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::EigenSolverFailure, "symmetric eigensolver failed");
  return {solver.eigenvalues(), frame_from_orthogonal(solver.eigenvectors())};
}

Eigen::VectorXd eigenvalues(const JordanElement& x) {
  if (x.algebra.kind == AlgebraKind::Rn) return x.coords;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_symmetric(x), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::EigenSolverFailure, "symmetric eigensolver failed");
  return solver.eigenvalues();
}

double min_eigenvalue(const JordanElement& x) { return eigenvalues(x).minCoeff(); }
double max_eigenvalue(const JordanElement& x) { return eigenvalues(x).maxCoeff(); }

bool in_cone(const JordanElement& x, double tol) { return min_eigenvalue(x) >= -tol; }
bool in_interior(const JordanElement& x, double tol) { return min_eigenvalue(x) > tol; }

JordanElement element_sqrt(const JordanElement& x, double tol) {
  auto sp = spectral_decomposition(x);
  if (sp.eigenvalues.minCoeff() < -tol) throw Error(ErrorCode::DomainError, "square root of a non-cone element");
  return element_with_eigenvalues(sp.eigenvalues.cwiseMax(0.0).cwiseSqrt(), sp.frame);
}

JordanElement element_inverse(const JordanElement& x, double tol) {
  auto sp = spectral_decomposition(x);
  if (sp.eigenvalues.cwiseAbs().minCoeff() <= tol) throw Error(ErrorCode::DomainError, "element is not invertible");
  return element_with_eigenvalues(sp.eigenvalues.cwiseInverse(), sp.frame);
}

JordanFrame standard_frame(const AlgebraSpec& spec) {
  JordanFrame f{spec, {}};
  for (std::size_t i = 0; i < spec.rank; ++i) f.idempotents.push_back(basis(spec, i));
  return f;
}

JordanFrame frame_from_orthogonal(const Eigen::MatrixXd& q) {
  JordanFrame f{AlgebraSpec::sym(static_cast<std::size_t>(q.cols())), {}};
  for (Eigen::Index i = 0; i < q.cols(); ++i) f.idempotents.push_back(from_symmetric(q.col(i) * q.col(i).transpose()));
  return f;
}

JordanFrame random_frame(const AlgebraSpec& spec, std::mt19937_64& rng) {
  if (spec.kind == AlgebraKind::Rn) return standard_frame(spec);
  const auto m = static_cast<Eigen::Index>(spec.rank);
  Eigen::MatrixXd g(m, m);
  std::normal_distribution<double> dist;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) g(i, j) = dist(rng);
  Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
  return frame_from_orthogonal(q);
}

double frame_residual(const JordanFrame& frame) {
  double worst = 0;
  JordanElement sum = zero(frame.algebra);
  const auto& e = frame.idempotents;
  for (std::size_t i = 0; i < e.size(); ++i) {
    worst = std::max(worst, (jordan_product(e[i], e[i]) - e[i]).coords.norm());
    worst = std::max(worst, std::abs(trace_inner_product(e[i], unit(frame.algebra)) - 1));
    for (std::size_t j = i + 1; j < e.size(); ++j) worst = std::max(worst, jordan_product(e[i], e[j]).coords.norm());
    sum = sum + e[i];
  }
  worst = std::max(worst, (sum - unit(frame.algebra)).coords.norm());
  if (e.size() != frame.algebra.rank) worst = std::max(worst, 1.0);
  return worst;
}

JordanElement hat_vector(const Eigen::VectorXd& r, const JordanFrame& frame) {
  if (static_cast<std::size_t>(r.size()) != frame.idempotents.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from the frame size");
  JordanElement x = zero(frame.algebra);
  for (std::size_t i = 0; i < frame.idempotents.size(); ++i) x.coords += r[static_cast<Eigen::Index>(i)] * frame.idempotents[i].coords;
  return x;
}

Eigen::VectorXd bracket(const JordanElement& x, const JordanFrame& frame) {
  Eigen::VectorXd r(frame.idempotents.size());
  for (std::size_t i = 0; i < frame.idempotents.size(); ++i) r[static_cast<Eigen::Index>(i)] = trace_inner_product(x, frame.idempotents[i]);
  return r;
}

LinearTransform hat_transform(const Eigen::MatrixXd& a, const JordanFrame& frame) {
  const std::size_t n = frame.idempotents.size();
  if (static_cast<std::size_t>(a.rows()) != n || static_cast<std::size_t>(a.cols()) != n)
    throw Error(ErrorCode::DimensionMismatch, "matrix order differs from the algebra rank");
  Eigen::MatrixXd e(frame.algebra.dimension(), n);
  for (std::size_t i = 0; i < n; ++i) e.col(static_cast<Eigen::Index>(i)) = frame.idempotents[i].coords;
  return {frame.algebra, e * a * e.transpose()};
}

PeirceDecomposition peirce_decompose(const JordanElement& x, const JordanFrame& frame) {
  same_algebra(x.algebra, frame.algebra);
  if (frame_residual(frame) > 1e-8) throw Error(ErrorCode::InvalidArgument, "invalid Jordan frame");
  PeirceDecomposition p;
  p.diagonal = bracket(x, frame);
  const auto& e = frame.idempotents;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      p.off.emplace(std::pair{i, j}, 4.0 * jordan_product(e[i], jordan_product(e[j], x)));
  return p;
}

LinearTransform R_AB_transform(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const JordanFrame& frame) {
  const auto n = static_cast<Eigen::Index>(frame.idempotents.size());
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "matrix order differs from the algebra rank");
  if ((b - b.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1 + b.cwiseAbs().maxCoeff()))
    throw Error(ErrorCode::NotSymmetric, "B must be symmetric");
  const std::size_t dim = frame.algebra.dimension();
  LinearTransform t{frame.algebra, Eigen::MatrixXd::Zero(dim, dim)};
  for (std::size_t k = 0; k < dim; ++k) {
    auto p = peirce_decompose(basis(frame.algebra, k), frame);
    JordanElement image = hat_vector(a * p.diagonal, frame);
    for (const auto& [ij, part] : p.off) image = image + b(ij.first, ij.second) * part;
    t.matrix.col(static_cast<Eigen::Index>(k)) = image.coords;
  }
  return t;
}

LinearTransform rank_one(const JordanElement& a, const JordanElement& b) {
  same_algebra(a.algebra, b.algebra);
  return {a.algebra, a.coords * b.coords.transpose()};
}

LinearTransform multiplication(const JordanElement& c) {
  const std::size_t dim = c.algebra.dimension();
  LinearTransform t{c.algebra, Eigen::MatrixXd(dim, dim)};
  for (std::size_t k = 0; k < dim; ++k) t.matrix.col(static_cast<Eigen::Index>(k)) = jordan_product(c, basis(c.algebra, k)).coords;
  return t;
}

LinearTransform quadratic_representation(const JordanElement& c) {
  Eigen::MatrixXd lc = multiplication(c).matrix;
  Eigen::MatrixXd lc2 = multiplication(jordan_product(c, c)).matrix;
  return {c.algebra, 2.0 * lc * lc - lc2};
}

LinearTransform conjugate_transform(const LinearTransform& l, const LinearTransform& phi) {
  same_algebra(l.algebra, phi.algebra);
  return {l.algebra, phi.matrix.transpose() * l.matrix * phi.matrix};
}

LinearTransform identity_transform(const AlgebraSpec& spec) {
  const auto d = static_cast<Eigen::Index>(spec.dimension());
  return {spec, Eigen::MatrixXd::Identity(d, d)};
}

ScLcpSolutionCheck verify_sc_solution(const LinearTransform& l, const JordanElement& q, const JordanElement& x,
                                      double tol) {
  ScLcpSolutionCheck c;
  c.x = x;
  c.y = l(x) + q;
  c.min_eig_x = min_eigenvalue(c.x);
  c.min_eig_y = min_eigenvalue(c.y);
  c.inner = trace_inner_product(c.x, c.y);
  c.pass = c.min_eig_x >= -tol && c.min_eig_y >= -tol && std::abs(c.inner) <= tol;
  return c;
}

bool EmbedReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

EmbedReport embed_solve(const RationalMatrix& a, const RationalVector& q, const JordanFrame& frame, double tol) {
  if (a.order() != frame.idempotents.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix order differs from the algebra rank");
  auto result = solve_lcp({a, q}, Exec::Serial);
  EmbedReport report;
  auto ahat = hat_transform(to_double(a), frame);
  auto qhat = hat_vector(to_double(q), frame);
  for (const auto& s : result.solutions) {
    report.solutions.push_back(s.x);
    report.checks.push_back(verify_sc_solution(ahat, qhat, hat_vector(to_double(s.x), frame), tol));
  }
  report.solvable = !report.solutions.empty();
  return report;
}

ConstructedInstance construct_cone_solution(const RationalMatrix& a, const JordanFrame& frame, std::mt19937_64& rng) {
  const std::size_t n = a.order();
  if (n != frame.idempotents.size()) throw Error(ErrorCode::DimensionMismatch, "matrix order differs from the algebra rank");
  std::uniform_int_distribution<long> num(1, 9), den(1, 4), coin(0, 2);
  ConstructedInstance c;
  c.r.assign(n, Rational(0));
  c.w.assign(n, Rational(0));
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    switch (coin(rng)) {
      case 0: c.r[i] = v; support.push_back(i); break;
      case 1: c.w[i] = v; break;
      default: break;  // both zero: a degenerate component
    }
  }
  c.q = c.w;
  auto ar = a * c.r;
  for (std::size_t i = 0; i < n; ++i) c.q[i] -= ar[i];
  c.x = hat_vector(to_double(c.r), frame);
  if (support.size() >= 2 && frame.algebra.kind == AlgebraKind::Sym) {
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    auto z = random_element(frame.algebra, rng);
    JordanElement off = 4.0 * jordan_product(frame.idempotents[i], jordan_product(frame.idempotents[j], z));
    double norm = off.coords.norm();
    if (norm > 1e-6) {
      // Unit Peirce element f: the (i, j) block of x is [[r_i, t/sqrt2], [t/sqrt2, r_j]].
      double bound = std::sqrt(2.0 * bandq::to_double(c.r[i]) * bandq::to_double(c.r[j]));
      double t = 0.9 * bound * std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
      c.x = c.x + (t / norm) * off;
    }
  }
  return c;
}

RationalVector rational_bracket(const JordanElement& x, const JordanFrame& frame, long max_den) {
  Eigen::VectorXd r = bracket(x, frame);
  RationalVector out;
  for (double v : r) out.push_back(rationalize(v, max_den));
  return out;
}

ClassVerdict classify_rank_one_q(const JordanElement& a, const JordanElement& b, double tol) {
  same_algebra(a.algebra, b.algebra);
  enum class Status { Pos, Neg, Mixed, Unclear };
  auto status = [tol](const JordanElement& v) {
    Eigen::VectorXd l = eigenvalues(v);
    if (l.minCoeff() > tol) return Status::Pos;
    if (l.maxCoeff() < -tol) return Status::Neg;
    if (l.minCoeff() < -tol && l.maxCoeff() > tol) return Status::Mixed;
    return Status::Unclear;
  };
  Status sa = status(a), sb = status(b);
  ClassVerdict v;
  if ((sa == Status::Pos && sb == Status::Pos) || (sa == Status::Neg && sb == Status::Neg)) {
    v = make_verdict(Answer::Yes, "T10.8", sa == Status::Pos ? "a > 0 and b > 0" : "a < 0 and b < 0");
  } else if (sa == Status::Mixed || sb == Status::Mixed) {
    v = make_verdict(Answer::No, "T10.8", sa == Status::Mixed ? "a has eigenvalues of both signs"
                                                              : "b has eigenvalues of both signs");
  } else if ((sa == Status::Pos && sb == Status::Neg) || (sa == Status::Neg && sb == Status::Pos)) {
    v = make_verdict(Answer::No, "T10.8", "a and b definite with opposite signs");
  } else {
    v = make_verdict(Answer::Undecided, "T10.8", "an eigenvalue lies within the tolerance band");
  }
  v.certificate.notes["min_eig_a"] = std::to_string(min_eigenvalue(a));
  v.certificate.notes["min_eig_b"] = std::to_string(min_eigenvalue(b));
  return v;
}

JordanElement random_element(const AlgebraSpec& spec, std::mt19937_64& rng) {
  return {spec, gaussian(spec.dimension(), rng)};
}

JordanElement random_cone_element(const AlgebraSpec& spec, std::mt19937_64& rng) {
  auto z = random_element(spec, rng);
  auto x = jordan_product(z, z);
  double norm = x.coords.norm();
  return norm > 0 ? (1.0 / norm) * x : unit(spec);
}

JordanElement element_with_eigenvalues(const Eigen::VectorXd& lambda, const JordanFrame& frame) {
  return hat_vector(lambda, frame);
}

std::optional<JordanElement> strict_copositivity_sample(const LinearTransform& l, std::size_t samples,
                                                        std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto x = random_cone_element(l.algebra, rng);
    if (trace_inner_product(l(x), x) <= tol) return x;
  }
  return std::nullopt;
}

std::optional<JordanElement> cone_image_violation(const LinearTransform& l, std::size_t samples, std::uint64_t seed,
                                                  double tol) {
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto x = random_cone_element(l.algebra, rng);
    if (min_eigenvalue(l(x)) < -tol) return x;
  }
  return std::nullopt;
}

std::map<std::string, double> identity_residuals(const AlgebraSpec& spec, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<std::string, double> worst;
  auto record = [&](const char* name, double r) {
    double& w = worst[name];
    w = std::max(w, r);
  };
  const auto e = unit(spec);
  const std::size_t n = spec.rank;
  for (std::size_t s = 0; s < samples; ++s) {
    auto frame = s % 2 == 0 ? standard_frame(spec) : random_frame(spec, rng);
    auto x = random_element(spec, rng), y = random_element(spec, rng), z = random_element(spec, rng);
    auto x2 = jordan_product(x, x);
    record("commutativity", (jordan_product(x, y) - jordan_product(y, x)).coords.norm());
    record("jordan_identity",
           (jordan_product(x, jordan_product(x2, y)) - jordan_product(x2, jordan_product(x, y))).coords.norm());
    record("trace_compatibility",
           std::abs(trace_inner_product(jordan_product(x, y), z) - trace_inner_product(x, jordan_product(y, z))));
    record("unit", (jordan_product(x, e) - x).coords.norm());
    record("trace", std::abs(trace(x) - trace_inner_product(x, e)));

    auto sp = spectral_decomposition(x);
    record("spectral_reconstruction", (element_with_eigenvalues(sp.eigenvalues, sp.frame) - x).coords.norm());
    record("frame_validity", std::max(frame_residual(sp.frame), frame_residual(frame)));

    auto p = peirce_decompose(x, frame);
    JordanElement rebuilt = hat_vector(p.diagonal, frame);
    double off_overlap = 0;
    for (const auto& [ij, part] : p.off) {
      rebuilt = rebuilt + part;
      for (const auto& ek : frame.idempotents) off_overlap = std::max(off_overlap, std::abs(trace_inner_product(part, ek)));
    }
    record("peirce_reconstruction", (rebuilt - x).coords.norm());
    record("peirce_orthogonality", off_overlap);

    Eigen::VectorXd r = gaussian(n, rng), t = gaussian(n, rng);
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = std::normal_distribution<double>()(rng);
    auto ahat = hat_transform(a, frame);
    auto rhat = hat_vector(r, frame), that = hat_vector(t, frame);
    record("bracket_of_hat", (bracket(rhat, frame) - r).norm());
    record("hat_inner_product", std::abs(r.dot(t) - trace_inner_product(rhat, that)));
    record("hat_transform_on_hat", (ahat(rhat) - hat_vector(a * r, frame)).coords.norm());
    Eigen::VectorXd bx = bracket(x, frame);
    record("hat_quadratic_form", std::abs(trace_inner_product(ahat(x), x) - bx.dot(a * bx)));
    record("hat_transform_action", (ahat(x) - hat_vector(a * bx, frame)).coords.norm());
  }
  return worst;
}

nlohmann::json element_to_json(const JordanElement& x) {
  nlohmann::json alg = {{"kind", x.algebra.kind == AlgebraKind::Rn ? "rn" : "sym"}};
  alg[x.algebra.kind == AlgebraKind::Rn ? "n" : "m"] = x.algebra.rank;
  return {{"algebra", alg}, {"coords", std::vector<double>(x.coords.begin(), x.coords.end())}};
}

JordanElement element_from_json(const nlohmann::json& j) {
  try {
    const auto& alg = j.at("algebra");
    std::string kind = alg.at("kind");
    AlgebraSpec spec = kind == "rn"    ? AlgebraSpec::rn(alg.at("n").get<std::size_t>())
                       : kind == "sym" ? AlgebraSpec::sym(alg.at("m").get<std::size_t>())
                                       : throw Error(ErrorCode::ParseError, "unknown algebra kind " + kind);
    auto coords = j.at("coords").get<std::vector<double>>();
    if (coords.size() != spec.dimension())
      throw Error(ErrorCode::DimensionMismatch, "coordinate count differs from the algebra dimension");
    JordanElement x = zero(spec);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!std::isfinite(coords[i])) throw Error(ErrorCode::ParseError, "non-finite coordinate");
      x.coords[static_cast<Eigen::Index>(i)] = coords[i];
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace bandq::jordan
