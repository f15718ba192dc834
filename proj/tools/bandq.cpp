// bandq: classify, verify, generate, degree and jordan subcommands.
//
// Exit codes: classify 0/1/2 for yes/no/undecided; verify 0 unless the
// classifier and the oracle contradict (1); degree 1 on NotR0; jordan 1 on
// a failed check. Parse errors 64, enumeration cap 65, other errors 70.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bandq/classes.hpp"
#include "bandq/classifier.hpp"
#include "bandq/degree.hpp"
#include "bandq/error.hpp"
#include "bandq/generate.hpp"
#include "bandq/io.hpp"
#include "bandq/jordan.hpp"
#include "bandq/oracle.hpp"
#include "bandq/structure.hpp"

using namespace bandq;
using nlohmann::json;

namespace {

constexpr int kExitParse = 64;
constexpr int kExitCap = 65;
constexpr int kExitOther = 70;

int exit_for(Answer a) { return a == Answer::Yes ? 0 : a == Answer::No ? 1 : 2; }

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string summary(const ClassVerdict& v) {
  // The row short-circuit is a precondition check, not a characterization; the
  // JSON form still carries its rule id.
  std::string rule = v.certificate.rule == "T2.2" ? "" : v.certificate.rule + " ";
  std::string out = std::string("Q: ") + answer_name(v.answer) + " (" + rule + v.certificate.condition;
  if (auto it = v.certificate.scalars.find("det"); it != v.certificate.scalars.end())
    out += ", det=" + to_string(it->second);
  if (auto it = v.certificate.vectors.find("q"); it != v.certificate.vectors.end())
    out += ", q=" + to_string(it->second);
  return out + ")";
}

struct Loaded {
  std::string hash;
  RationalMatrix a;
};

Loaded load(const std::string& path, MatrixFormat format) {
  std::string text = slurp(path);
  if (format == MatrixFormat::Auto) {
    auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string::npos && text[first] == '{' ? MatrixFormat::Json : MatrixFormat::Plain;
  }
  return {fnv1a(text), parse_matrix(text, format)};
}

RationalVector parse_vector(const std::string& text) {
  RationalVector v;
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::stringstream in(spaced);
  std::string item;
  while (in >> item) v.push_back(parse_rational(item));
  if (v.empty()) throw Error(ErrorCode::ParseError, "empty vector");
  return v;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::NonSquare:
      case ErrorCode::ZeroDenominator:
        return kExitParse;
      case ErrorCode::CapExceeded:
        return kExitCap;
      default:
        return kExitOther;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}

struct MatrixArgs {
  std::vector<std::string> files;
  std::string format = "auto";
  bool json_lines = false;
  bool timings = false;
  std::size_t budget = 4096;
  std::uint64_t seed = 1;
};

void add_matrix_args(CLI::App* cmd, MatrixArgs& args) {
  cmd->add_option("files", args.files, "matrix files")->required();
  cmd->add_option("--format", args.format, "json, plain or auto")->check(CLI::IsMember({"json", "plain", "auto"}));
  cmd->add_flag("--json", args.json_lines, "emit one JSON record per matrix");
  cmd->add_flag("--timings", args.timings, "include elapsed milliseconds in records");
  cmd->add_option("--budget", args.budget, "oracle random probes");
  cmd->add_option("--seed", args.seed, "oracle seed");
}

int cmd_classify(const MatrixArgs& args) {
  int code = 0;
  OracleOptions opts{args.budget, args.seed, Exec::Parallel};
  for (const auto& path : args.files) {
    auto t0 = std::chrono::steady_clock::now();
    auto in = load(path, parse_format_name(args.format));
    auto v = classify(in.a, opts);
    if (args.json_lines) {
      json rec = {{"file", path},
                  {"input_hash", in.hash},
                  {"structure", structure_tag_name(detect_structure(in.a).tag)},
                  {"verdict", to_json(v)}};
      if (args.timings) rec["elapsed_ms"] = ms_since(t0);
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << (args.files.size() > 1 ? path + ": " : "") << summary(v) << "\n";
    }
    code = std::max(code, exit_for(v.answer));
  }
  return code;
}

int cmd_verify(const MatrixArgs& args) {
  bool contradiction = false;
  OracleOptions opts{args.budget, args.seed, Exec::Parallel};
  for (const auto& path : args.files) {
    auto t0 = std::chrono::steady_clock::now();
    auto in = load(path, parse_format_name(args.format));
    auto structure = detect_structure(in.a);
    auto theorem = classify_structural(in.a);
    double classify_ms = ms_since(t0);
    auto oracle = q_oracle(in.a, opts);
    bool agree = !contradicts(theorem, oracle);
    contradiction |= !agree;
    if (args.json_lines) {
      json rec = {{"file", path},
                  {"input_hash", in.hash},
                  {"structure", structure_tag_name(structure.tag)},
                  {"classifier", to_json(theorem)},
                  {"oracle", to_json(oracle)},
                  {"agreement", agree}};
      if (args.timings) rec["timings_ms"] = {{"classifier", classify_ms}, {"total", ms_since(t0)}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << path << "  " << structure_tag_name(structure.tag) << "  classifier " << summary(theorem)
                << "  oracle " << summary(oracle) << "  " << (agree ? "agree" : "CONTRADICTION") << "\n";
    }
  }
  return contradiction ? 1 : 0;
}

struct GenerateArgs {
  std::string type = "2x2";
  std::size_t n = 2, count = 1;
  std::uint64_t seed = 1;
  int range = 5;
  std::string out_dir;
  std::string format = "plain";
};

int cmd_generate(const GenerateArgs& args) {
  GenerateOptions opts{parse_instance_type(args.type), args.n, args.count, args.seed, args.range};
  auto mats = generate(opts);
  if (args.out_dir.empty()) {
    for (const auto& a : mats) std::cout << matrix_to_json(a).dump() << "\n";
    return 0;
  }
  std::filesystem::create_directories(args.out_dir);
  const bool as_json = args.format == "json";
  for (std::size_t i = 0; i < mats.size(); ++i) {
    std::ostringstream name;
    name << args.type << "-n" << args.n << "-" << std::setw(6) << std::setfill('0') << i
         << (as_json ? ".json" : ".txt");
    std::ofstream f(std::filesystem::path(args.out_dir) / name.str(), std::ios::binary);
    f << (as_json ? matrix_to_json(mats[i]).dump() + "\n" : format_plain(mats[i]));
  }
  std::cout << "wrote " << mats.size() << " matrices to " << args.out_dir << "\n";
  return 0;
}

int cmd_degree(const std::string& path, const std::string& format, std::uint64_t seed) {
  auto in = load(path, parse_format_name(format));
  try {
    std::cout << degree(in.a, {seed, 64, Exec::Parallel}) << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotR0) throw;
    std::cerr << "NotR0: LCP(A, 0) has a nonzero solution\n";
    return 1;
  }
  return 0;
}

jordan::JordanElement parse_element(const std::string& text, const std::string& algebra,
                                    const jordan::JordanFrame* frame) {
  if (text.rfind("eigs:", 0) == 0) {
    std::vector<double> eigs;
    std::stringstream in(text.substr(5));
    std::string item;
    while (std::getline(in, item, ',')) eigs.push_back(std::stod(item));
    Eigen::VectorXd lambda = Eigen::Map<Eigen::VectorXd>(eigs.data(), static_cast<Eigen::Index>(eigs.size()));
    if (frame && frame->idempotents.size() == eigs.size()) return jordan::element_with_eigenvalues(lambda, *frame);
    auto spec = algebra.empty() ? jordan::AlgebraSpec::sym(eigs.size()) : jordan::parse_algebra(algebra);
    return jordan::element_with_eigenvalues(lambda, jordan::standard_frame(spec));
  }
  return jordan::element_from_json(json::parse(slurp(text)));
}

struct JordanArgs {
  std::string algebra = "sym:3";
  std::string rank_one_algebra;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string a, b;
  std::string frame = "standard";
  std::string matrix, q, format = "auto";
  std::size_t n = 0;
};

int cmd_identities(const JordanArgs& args) {
  auto spec = jordan::parse_algebra(args.algebra);
  auto res = jordan::identity_residuals(spec, args.samples, args.seed);
  bool ok = true;
  for (const auto& [name, r] : res) {
    bool pass = r < args.tol;
    ok &= pass;
    std::cout << std::left << std::setw(26) << name << std::scientific << std::setprecision(3) << r
              << (pass ? "  ok" : "  FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_rank_one(const JordanArgs& args) {
  std::mt19937_64 rng(args.seed);
  std::optional<jordan::JordanFrame> frame;
  auto a = parse_element(args.a, args.rank_one_algebra, nullptr);
  if (args.frame == "random") {
    frame = jordan::random_frame(a.algebra, rng);
    a = parse_element(args.a, "", &*frame);
  }
  auto b = parse_element(args.b, jordan::algebra_name(a.algebra), frame ? &*frame : nullptr);
  auto v = jordan::classify_rank_one_q(a, b, args.tol);
  auto l = jordan::rank_one(a, b);
  json rec = {{"algebra", jordan::algebra_name(a.algebra)}, {"verdict", to_json(v)}};
  bool consistent = true;
  if (v.yes()) {
    // Both signs agree, so <b, x> a lies in the interior for every nonzero x in the cone.
    std::mt19937_64 probe(args.seed + 1);
    double worst = 1e300;
    for (std::size_t s = 0; s < args.samples; ++s)
      worst = std::min(worst, jordan::min_eigenvalue(l(jordan::random_cone_element(a.algebra, probe))));
    consistent = worst > 0;
    rec["min_image_eigenvalue"] = worst;
  } else if (jordan::min_eigenvalue(a) < -args.tol && jordan::max_eigenvalue(a) > args.tol) {
    auto x = jordan::cone_image_violation(l, args.samples, args.seed, args.tol);
    consistent = x.has_value();
    if (x) rec["cone_violation_x"] = jordan::element_to_json(*x);
  }
  std::cout << rec.dump() << "\n";
  if (!consistent) return 1;
  return exit_for(v.answer);
}

int cmd_embed_check(const JordanArgs& args) {
  auto in = load(args.matrix, parse_format_name(args.format));
  auto q = parse_vector(args.q);
  const std::size_t n = args.n ? args.n : in.a.order();
  if (n != in.a.order() || q.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "matrix order, --n and q length must agree");
  std::mt19937_64 rng(args.seed);
  auto spec = jordan::AlgebraSpec::sym(n);
  auto frame = args.frame == "random" ? jordan::random_frame(spec, rng) : jordan::standard_frame(spec);
  auto report = jordan::embed_solve(in.a, q, frame, args.tol);
  json rec = {{"solvable", report.solvable}, {"pass", report.pass()}};
  auto sols = json::array();
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    const auto& c = report.checks[i];
    json r = {{"r", vector_to_json(report.solutions[i])},
              {"min_eig_x", c.min_eig_x},
              {"min_eig_y", c.min_eig_y},
              {"inner", c.inner},
              {"pass", c.pass}};
    sols.push_back(r);
  }
  rec["solutions"] = sols;
  if (!report.solvable) rec["note"] = "LCP(A, q) unsolvable; no frame-diagonal cone solution exists";
  std::cout << rec.dump() << "\n";
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-property classification of structured matrices with an exact LCP oracle"};
  app.require_subcommand(1);

  MatrixArgs classify_args, verify_args;
  add_matrix_args(app.add_subcommand("classify", "theorem-based Q verdict with certificate"), classify_args);
  add_matrix_args(app.add_subcommand("verify", "compare the classifier with the brute-force oracle"), verify_args);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "seeded structured instances");
  g->add_option("--type", gen.type, "tri, tri-plus-row, bdsw-1..4, 2x2")->required();
  g->add_option("--n", gen.n, "order");
  g->add_option("--count", gen.count, "number of matrices");
  g->add_option("--seed", gen.seed, "seed");
  g->add_option("--entry-range", gen.range, "entries in [-R, R]");
  g->add_option("--out", gen.out_dir, "directory for one file per matrix (default: JSON lines on stdout)");
  g->add_option("--out-format", gen.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  std::string degree_file, degree_format = "auto";
  std::uint64_t degree_seed = 1;
  auto* d = app.add_subcommand("degree", "LCP degree of an R0 matrix");
  d->add_option("file", degree_file)->required();
  d->add_option("--format", degree_format);
  d->add_option("--seed", degree_seed);

  JordanArgs jargs;
  auto* jd = app.add_subcommand("jordan", "Euclidean Jordan algebra checks");
  jd->require_subcommand(1);
  auto* ident = jd->add_subcommand("identities", "hat/bracket identities, axioms, frame validity");
  ident->add_option("--algebra", jargs.algebra, "rn:N or sym:M");
  ident->add_option("--samples", jargs.samples);
  ident->add_option("--seed", jargs.seed);
  ident->add_option("--tol", jargs.tol);
  auto* r1 = jd->add_subcommand("rank-one", "Q verdict for the transform x -> <b, x> a");
  r1->add_option("--a", jargs.a, "eigs:l1,l2,... or element JSON file")->required();
  r1->add_option("--b", jargs.b, "eigs:l1,l2,... or element JSON file")->required();
  r1->add_option("--algebra", jargs.rank_one_algebra, "algebra for eigs: (default sym:<count>)");
  r1->add_option("--frame", jargs.frame)->check(CLI::IsMember({"standard", "random"}));
  r1->add_option("--samples", jargs.samples);
  r1->add_option("--seed", jargs.seed);
  r1->add_option("--tol", jargs.tol);
  auto* em = jd->add_subcommand("embed-check", "embed every LCP solution into the symmetric cone problem");
  em->add_option("--matrix", jargs.matrix)->required();
  em->add_option("--q", jargs.q, "rationals separated by commas or spaces")->required();
  em->add_option("--n", jargs.n);
  em->add_option("--format", jargs.format);
  em->add_option("--frame", jargs.frame)->check(CLI::IsMember({"standard", "random"}));
  em->add_option("--seed", jargs.seed);
  em->add_option("--tol", jargs.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  if (app.got_subcommand("classify")) return run_guarded([&] { return cmd_classify(classify_args); });
  if (app.got_subcommand("verify")) return run_guarded([&] { return cmd_verify(verify_args); });
  if (app.got_subcommand("generate"))
    return run_guarded([&] {
      try {
        return cmd_generate(gen);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidArgument) throw;
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
      }
    });
  if (app.got_subcommand("degree")) return run_guarded([&] { return cmd_degree(degree_file, degree_format, degree_seed); });
  if (ident->parsed()) return run_guarded([&] { return cmd_identities(jargs); });
  if (r1->parsed()) return run_guarded([&] { return cmd_rank_one(jargs); });
  if (em->parsed()) return run_guarded([&] { return cmd_embed_check(jargs); });
  return kExitOther;
}
