#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "bandq/matrix.hpp"
#include "bandq/verdict.hpp"

namespace bandq::jordan {

// Two concrete algebras: R^n with the componentwise product, and real
// symmetric m x m matrices with X o Y = (XY + YX) / 2. Elements are stored
// in an orthonormal basis for the trace inner product; for Sym(m) the basis
// is E_11..E_mm followed by (E_ij + E_ji)/sqrt(2), i < j, lexicographic.

enum class AlgebraKind { Rn, Sym };

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::Rn;
  std::size_t rank = 1;

  static AlgebraSpec rn(std::size_t n);
  static AlgebraSpec sym(std::size_t m);
  std::size_t dimension() const noexcept;
  bool operator==(const AlgebraSpec&) const = default;
};

/// "rn:4" or "sym:3".
AlgebraSpec parse_algebra(std::string_view text);
std::string algebra_name(const AlgebraSpec& spec);

struct JordanElement {
  AlgebraSpec algebra;
  Eigen::VectorXd coords;
};

struct JordanFrame {
  AlgebraSpec algebra;
  std::vector<JordanElement> idempotents;
};

struct LinearTransform {
  AlgebraSpec algebra;
  Eigen::MatrixXd matrix;  // acts on coordinates

  JordanElement operator()(const JordanElement& x) const;
  LinearTransform compose(const LinearTransform& inner) const;  // this o inner
};

struct ScLcpSolutionCheck {
  JordanElement x, y;
  double min_eig_x = 0, min_eig_y = 0, inner = 0;
  bool pass = false;
};

// Elements.
JordanElement zero(const AlgebraSpec& spec);
JordanElement unit(const AlgebraSpec& spec);
JordanElement from_symmetric(const Eigen::MatrixXd& x);
Eigen::MatrixXd to_symmetric(const JordanElement& x);  // Sym only
JordanElement operator+(const JordanElement& x, const JordanElement& y);
JordanElement operator-(const JordanElement& x, const JordanElement& y);
JordanElement operator*(double c, const JordanElement& x);

JordanElement jordan_product(const JordanElement& x, const JordanElement& y);
double trace_inner_product(const JordanElement& x, const JordanElement& y);
double trace(const JordanElement& x);

struct Spectral {
  Eigen::VectorXd eigenvalues;
  JordanFrame frame;
};
Spectral spectral_decomposition(const JordanElement& x);
Eigen::VectorXd eigenvalues(const JordanElement& x);
double min_eigenvalue(const JordanElement& x);
double max_eigenvalue(const JordanElement& x);

bool in_cone(const JordanElement& x, double tol = 1e-9);
bool in_interior(const JordanElement& x, double tol = 1e-9);

/// Spectral square root and inverse; Error(DomainError) when an eigenvalue
/// is below -tol (sqrt) or within tol of zero (inverse).
JordanElement element_sqrt(const JordanElement& x, double tol = 1e-12);
JordanElement element_inverse(const JordanElement& x, double tol = 1e-12);

// Frames.
JordanFrame standard_frame(const AlgebraSpec& spec);
/// Sym(m): e_i = q_i q_i^T for the columns of an orthogonal q.
JordanFrame frame_from_orthogonal(const Eigen::MatrixXd& q);
/// Standard frame conjugated by a random orthogonal matrix (Sym); the
/// standard frame for R^n.
JordanFrame random_frame(const AlgebraSpec& spec, std::mt19937_64& rng);
/// Largest violation of idempotency, orthogonality, sum = e and trace 1.
double frame_residual(const JordanFrame& frame);

/// Sum of r_i e_i.
JordanElement hat_vector(const Eigen::VectorXd& r, const JordanFrame& frame);
/// (<x, e_1>, ..., <x, e_n>).
Eigen::VectorXd bracket(const JordanElement& x, const JordanFrame& frame);
/// x |-> hat(A [x]).
LinearTransform hat_transform(const Eigen::MatrixXd& a, const JordanFrame& frame);

struct PeirceDecomposition {
  Eigen::VectorXd diagonal;
  std::map<std::pair<std::size_t, std::size_t>, JordanElement> off;  // i < j
};
/// Throws Error(InvalidArgument) when the frame residual exceeds 1e-8.
PeirceDecomposition peirce_decompose(const JordanElement& x, const JordanFrame& frame);

/// x |-> sum_i (A [x])_i e_i + sum_{i<j} b_ij x_ij. Throws Error(NotSymmetric).
LinearTransform R_AB_transform(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                               const JordanFrame& frame);

/// x |-> <b, x> a.
LinearTransform rank_one(const JordanElement& a, const JordanElement& b);
/// x |-> c o x.
LinearTransform multiplication(const JordanElement& c);
/// x |-> 2 c o (c o x) - c^2 o x.
LinearTransform quadratic_representation(const JordanElement& c);
/// phi^T L phi.
LinearTransform conjugate_transform(const LinearTransform& l, const LinearTransform& phi);
LinearTransform identity_transform(const AlgebraSpec& spec);

/// x in V+, y = L(x) + q in V+, <x, y> = 0, each within tol.
ScLcpSolutionCheck verify_sc_solution(const LinearTransform& l, const JordanElement& q,
                                      const JordanElement& x, double tol = 1e-9);

struct EmbedReport {
  bool solvable = false;
  std::vector<RationalVector> solutions;    // enumerated LCP solutions r
  std::vector<ScLcpSolutionCheck> checks;   // one per solution, for x = hat(r)
  bool pass() const;
};
/// Solves LCP(A, q) exactly and checks that every solution embeds.
EmbedReport embed_solve(const RationalMatrix& a, const RationalVector& q,
                        const JordanFrame& frame, double tol = 1e-9);

/// Cone solution assembled from a complementary pair (r, w): q = w - A r,
/// x = hat(r) plus an off-diagonal Peirce part inside the PSD bound.
struct ConstructedInstance {
  RationalVector r, w, q;
  JordanElement x;
};
ConstructedInstance construct_cone_solution(const RationalMatrix& a, const JordanFrame& frame,
                                            std::mt19937_64& rng);

/// Rational vector nearest to bracket(x) with denominators up to max_den.
RationalVector rational_bracket(const JordanElement& x, const JordanFrame& frame,
                                long max_den = 1'000'000);

/// Q decision for a (x) b by eigenvalue signs: Yes when a, b > 0 or
/// a, b < 0; Undecided when an eigenvalue lies within tol of zero.
ClassVerdict classify_rank_one_q(const JordanElement& a, const JordanElement& b, double tol = 1e-9);

/// Squares of Gaussian elements, scaled to unit norm.
JordanElement random_element(const AlgebraSpec& spec, std::mt19937_64& rng);
JordanElement random_cone_element(const AlgebraSpec& spec, std::mt19937_64& rng);
/// Sum of lambda_i e_i.
JordanElement element_with_eigenvalues(const Eigen::VectorXd& lambda, const JordanFrame& frame);

/// First sampled x in V+ with <L(x), x> <= tol; the absence of a witness
/// is evidence only.
std::optional<JordanElement> strict_copositivity_sample(const LinearTransform& l, std::size_t samples,
                                                        std::uint64_t seed, double tol = 1e-12);
/// First sampled x in V+ with L(x) outside V+ (min eigenvalue below -tol).
std::optional<JordanElement> cone_image_violation(const LinearTransform& l, std::size_t samples,
                                                  std::uint64_t seed, double tol = 1e-9);

/// Largest residual per identity over random samples: algebra axioms,
/// frame validity of spectral decompositions, and the hat/bracket
/// identities. Frames alternate between standard and random.
std::map<std::string, double> identity_residuals(const AlgebraSpec& spec, std::size_t samples,
                                                 std::uint64_t seed);

nlohmann::json element_to_json(const JordanElement& x);
JordanElement element_from_json(const nlohmann::json& j);

}  // namespace bandq::jordan
