#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "mtx_io.hpp"
#include "symlog/gen.hpp"
#include "symlog/rootlog.hpp"
#include "symlog/specfact.hpp"
#include "symlog/verify.hpp"

namespace symlog::cli {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ObstructionDetected: return kExitObstruction;
    case ErrorCode::MaxIterationsExceeded:
    case ErrorCode::SingularIteration:
    case ErrorCode::NoConvergence: return kExitConvergence;
    default: return kExitInvalid;
  }
}

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SYMLOG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("SYMLOG_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(6) << v;
  return ss.str();
}

// Flags shared by the commands that read a matrix.
struct MatrixArgs {
  std::string input;
  std::string cls = "a";
  double tol = 1e-6;
  std::optional<double> nudge;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string report;
  std::string format = "mtx";
  bool quiet = false;
  bool to_stdout = false;
};

// Ordered "key value" lines.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void add(const std::string& key, double value) { add(key, fmt(value)); }

  void flush(const std::string& path, bool quiet, std::ostream& err) const {
    std::ostringstream body;
    for (const auto& [k, v] : lines_) body << k << ' ' << v << '\n';
    if (!path.empty()) {
      std::ofstream f(path);
      if (!f) throw Error(ErrorCode::Io, "cannot write report '" + path + "'");
      f << body.str();
    } else if (!quiet) {
      err << body.str();
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

void add_common(CLI::App* cmd, MatrixArgs& a, bool with_output) {
  cmd->add_option("input", a.input, "Input matrix (.mtx)")->required();
  cmd->add_option("--class", a.cls, "Symmetry class: a, ai, aii, aiii")->capture_default_str();
  cmd->add_option("--tol", a.tol, "Input tolerance for unitarity and class defect")->capture_default_str();
  cmd->add_option("--nudge", a.nudge, "On convergence failure retry once on a perturbation of this size");
  cmd->add_option("--seed", a.seed, "Seed for --nudge (default SYMLOG_SEED or 1)");
  if (with_output) cmd->add_option("-o,--out", a.out, "Output matrix path");
  cmd->add_option("--report", a.report, "Write the residual report here instead of stderr");
  cmd->add_option("--format", a.format, "Matrix file format")->check(CLI::IsMember({"mtx"}))->capture_default_str();
  cmd->add_flag("--quiet", a.quiet, "Suppress the report on stderr");
  cmd->add_flag("--stdout", a.to_stdout, "Also write result matrices to stdout");
}

SymmetryClass class_of(const std::string& text) {
  const auto cls = parse_symmetry_class(text);
  if (!cls) throw Error(ErrorCode::InvalidArgument, "unknown class '" + text + "'");
  return *cls;
}

struct Loaded {
  CMatrix u;
  SymmetryClass cls;
  SymmetryContext ctx;
};

Loaded load(const MatrixArgs& a) {
  const SymmetryClass cls = class_of(a.cls);
  CMatrix u = io::read_mtx(a.input);
  SymmetryContext ctx(u.rows());
  ctx.check(u, cls, "input");
  return {std::move(u), cls, std::move(ctx)};
}

void emit_matrix(const MatrixArgs& a, const std::string& path, const CMatrix& m, std::ostream& out) {
  if (!path.empty()) io::write_mtx(path, m);
  if (a.to_stdout) io::write_mtx(out, m);
}

// Runs `body` on the input; on a convergence failure with --nudge set, runs it
// once more on a class-preserving perturbation of the input.
template <typename Body>
auto with_nudge(const MatrixArgs& a, const Loaded& in, Report& report, Body body) {
  try {
    return body(in.u);
  } catch (const Error& e) {
    if (!a.nudge || exit_code_for(e.code()) != kExitConvergence) throw;
    report.add("nudged", *a.nudge);
    return body(nudge(in.u, in.cls, in.ctx, *a.nudge, a.seed.value_or(default_seed())));
  }
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void input_residuals(const Loaded& in, Report& report) {
  const ResidualReport r = residual(in.u, in.cls, in.ctx);
  report.add("input_unitarity_err", r.unitarity);
  report.add("input_symmetry_err", r.symmetry);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure-preserving square roots, logarithms and diagonalization of unitary matrices", "symlog"};
  app.require_subcommand(1);

  MatrixArgs sqrt_args, log_args, diag_args, index_args, check_args;
  auto* sqrt_cmd = app.add_subcommand("sqrt", "Principal square root");
  add_common(sqrt_cmd, sqrt_args, true);

  auto* log_cmd = app.add_subcommand("log", "Anti-Hermitian principal logarithm");
  add_common(log_cmd, log_args, true);
  std::optional<double> period;
  int roots = 5;
  int order = 7;
  log_cmd->add_option("--period", period, "Write the Floquet Hamiltonian (i/T) log U for this period instead");
  log_cmd->add_option("--roots", roots, "Number of square roots before the Pade step")->capture_default_str();
  log_cmd->add_option("--order", order, "Pade order")->capture_default_str();

  auto* diag_cmd = app.add_subcommand("diag", "Structured diagonalization U = Q D Q^H");
  add_common(diag_cmd, diag_args, false);
  std::string out_q, out_d;
  diag_cmd->add_option("--out-q", out_q, "Eigenvector matrix output path");
  diag_cmd->add_option("--out-d", out_d, "Diagonal eigenvalue matrix output path");

  auto* index_cmd = app.add_subcommand("index", "Chiral index of a class AIII unitary");
  add_common(index_cmd, index_args, false);

  auto* check_cmd = app.add_subcommand("check", "Residual report of a matrix for a class");
  add_common(check_cmd, check_args, false);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a structured unitary with a gap at -1");
  std::string gen_class = "a";
  long gen_size = 0;
  double gen_gap = 1e-2;
  int gen_pinned = 4;
  std::optional<std::uint64_t> gen_seed;
  bool gen_squared = false;
  bool gen_obstructed = false;
  std::string gen_out, gen_report;
  bool gen_quiet = false, gen_stdout = false;
  std::string gen_format = "mtx";
  gen_cmd->add_option("--class", gen_class, "Symmetry class")->capture_default_str();
  gen_cmd->add_option("--size", gen_size, "Dimension")->required();
  gen_cmd->add_option("--gap", gen_gap, "Arc distance from -1 to the spectrum")->capture_default_str();
  auto* pinned_opt =
      gen_cmd->add_option("--pinned", gen_pinned, "Eigenvalues placed exactly at the gap (default min(4, n))");
  gen_cmd->add_option("--seed", gen_seed, "Seed (default SYMLOG_SEED or 1)");
  gen_cmd->add_flag("--squared-root", gen_squared, "Form the square root first and square it");
  gen_cmd->add_flag("--obstructed", gen_obstructed, "Class AIII unitary with nonzero index");
  gen_cmd->add_option("-o,--out", gen_out, "Output matrix path");
  gen_cmd->add_option("--report", gen_report, "Report path");
  gen_cmd->add_option("--format", gen_format, "Matrix file format")->check(CLI::IsMember({"mtx"}));
  gen_cmd->add_flag("--quiet", gen_quiet, "Suppress the report on stderr");
  gen_cmd->add_flag("--stdout", gen_stdout, "Write the matrix to stdout");

  auto* bench_cmd = app.add_subcommand("bench", "Gap sweep benchmark, CSV output");
  std::vector<std::string> bench_classes{"a"};
  std::vector<long> bench_sizes{50};
  std::vector<double> bench_gaps{1e-2};
  std::vector<std::string> bench_ops{"sqrt", "log", "diag"};
  bench::BenchConfig bench_cfg;
  std::optional<std::uint64_t> bench_seed;
  std::string bench_out;
  bool bench_no_baseline = false;
  bool bench_stdout = false;
  bench_cmd->add_option("--classes", bench_classes, "Classes, comma separated")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--sizes", bench_sizes, "Dimensions, comma separated")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--gaps", bench_gaps, "Gaps at -1, comma separated")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--ops", bench_ops, "Subset of sqrt,log,diag")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--trials", bench_cfg.trials, "Trials per grid point")->capture_default_str();
  bench_cmd->add_option("--pinned", bench_cfg.pinned, "Eigenvalues pinned at the gap")->capture_default_str();
  bench_cmd->add_option("--threads", bench_cfg.threads, "Worker threads")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "Master seed (default SYMLOG_SEED or 1)");
  bench_cmd->add_option("--out", bench_out, "CSV output path");
  bench_cmd->add_flag("--no-baseline", bench_no_baseline, "Skip the generic comparator");
  bench_cmd->add_flag("--stdout", bench_stdout, "Write the CSV to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  MatrixArgs* active = nullptr;
  std::string report_path;
  bool quiet = false;
  Report report;
  try {
    if (sqrt_cmd->parsed()) {
      active = &sqrt_args;
      const Loaded in = load(sqrt_args);
      input_residuals(in, report);
      SqrtOptions opts;
      opts.input_tol = sqrt_args.tol;
      const auto t0 = std::chrono::steady_clock::now();
      const CMatrix v = with_nudge(sqrt_args, in, report,
                                   [&](const CMatrix& u) { return sqrt_structured(u, in.cls, in.ctx, opts); });
      report.add("wall_seconds", elapsed(t0));
      report.add("backward_err", linalg::spectral_norm(v * v - in.u));
      report.add("unitarity_err", linalg::unitarity_defect(v));
      report.add("symmetry_err", unitary_symmetry_defect(v, in.cls, in.ctx));
      emit_matrix(sqrt_args, sqrt_args.out, v, out);
    } else if (log_cmd->parsed()) {
      active = &log_args;
      const Loaded in = load(log_args);
      input_residuals(in, report);
      LogOptions opts;
      opts.root_count = roots;
      opts.pade_order = order;
      opts.sqrt.input_tol = log_args.tol;
      const auto t0 = std::chrono::steady_clock::now();
      const StructuredLog log = with_nudge(log_args, in, report,
                                           [&](const CMatrix& u) { return log_structured(u, in.cls, in.ctx, opts); });
      report.add("wall_seconds", elapsed(t0));
      report.add("backward_err", linalg::spectral_norm(verify::expm_antihermitian(log.h_anti) - in.u));
      report.add("unitarity_err", verify::antihermitian_defect(log.h_anti));
      report.add("symmetry_err", log_symmetry_defect(log.h_anti, in.cls, in.ctx));
      if (period) {
        if (!(*period > 0.0)) throw Error(ErrorCode::InvalidArgument, "--period must be positive");
        const CMatrix hf = Complex(0.0, 1.0 / *period) * log.h_anti;
        CMatrix herm = 0.5 * (hf + hf.adjoint());
        if (in.cls == SymmetryClass::SymmetricAI) herm = herm.real().cast<Complex>();
        report.add("period", *period);
        emit_matrix(log_args, log_args.out, herm, out);
      } else {
        emit_matrix(log_args, log_args.out, log.h_anti, out);
      }
    } else if (diag_cmd->parsed()) {
      active = &diag_args;
      const Loaded in = load(diag_args);
      input_residuals(in, report);
      LogOptions opts;
      opts.sqrt.input_tol = diag_args.tol;
      const auto t0 = std::chrono::steady_clock::now();
      const DiagResult res = with_nudge(diag_args, in, report,
                                        [&](const CMatrix& u) { return diag_structured(u, in.cls, in.ctx, opts); });
      report.add("wall_seconds", elapsed(t0));
      report.add("eigresidual", verify::eigen_residual(in.u, res));
      report.add("orth_err", linalg::unitarity_defect(res.q));
      if (in.cls == SymmetryClass::SymmetricAI) report.add("realness_err", verify::max_imag(res.q));
      if (in.cls == SymmetryClass::ChiralAIII) {
        const verify::PairingDefect p = verify::aiii_pairing_defect(res);
        report.add("pairing_err", std::max(p.vectors, p.phases));
      }
      const Eigen::VectorXcd d = (Complex(0.0, 1.0) * res.phases.cast<Complex>()).array().exp();
      emit_matrix(diag_args, out_q, res.q, out);
      emit_matrix(diag_args, out_d, CMatrix(d.asDiagonal()), out);
    } else if (index_cmd->parsed()) {
      active = &index_args;
      const Loaded in = load(index_args);
      input_residuals(in, report);
      const int index = aiii_index(in.u, in.ctx, IndexOptions{.residual_tol = index_args.tol});
      report.add("index", std::to_string(index));
      out << "index " << index << '\n';
    } else if (check_cmd->parsed()) {
      active = &check_args;
      const Loaded in = load(check_args);
      const ResidualReport r = residual(in.u, in.cls, in.ctx);
      report.add("unitarity_err", r.unitarity);
      report.add("symmetry_err", r.symmetry);
      if (in.cls == SymmetryClass::ChiralAIII) {
        try {
          report.add("index", std::to_string(aiii_index(in.u, in.ctx, IndexOptions{.residual_tol = check_args.tol})));
        } catch (const Error& e) {
          report.add("index", std::string(to_string(e.code())));
        }
      }
      const bool ok = r.unitarity <= check_args.tol && r.symmetry <= check_args.tol;
      report.add("within_tol", ok ? "1" : "0");
    } else if (gen_cmd->parsed()) {
      report_path = gen_report;
      quiet = gen_quiet;
      if (gen_size <= 0) throw Error(ErrorCode::InvalidArgument, "--size must be positive");
      // The default pin count shrinks to fit small matrices.
      if (pinned_opt->count() == 0) gen_pinned = static_cast<int>(std::min<long>(gen_pinned, gen_size - gen_size % 2));
      const SymmetryClass cls = gen_obstructed ? SymmetryClass::ChiralAIII : class_of(gen_class);
      const std::uint64_t seed = gen_seed.value_or(default_seed());
      const CMatrix u = gen_obstructed ? aiii_obstructed_unitary(gen_size, seed)
                                       : random_gapped_unitary(cls, gen_size, GapSpec{gen_gap, gen_pinned}, seed,
                                                               gen_squared);
      const SymmetryContext ctx(gen_size);
      const ResidualReport r = residual(u, cls, ctx);
      report.add("unitarity_err", r.unitarity);
      report.add("symmetry_err", r.symmetry);
      report.add("gap", verify::arc_gap_at_minus_one(u));
      report.add("seed", std::to_string(seed));
      if (!gen_out.empty()) io::write_mtx(gen_out, u);
      if (gen_stdout) io::write_mtx(out, u);
    } else if (bench_cmd->parsed()) {
      bench_cfg.classes.clear();
      for (const auto& c : bench_classes) bench_cfg.classes.push_back(class_of(c));
      bench_cfg.sizes = bench_sizes;
      bench_cfg.gaps = bench_gaps;
      bench_cfg.seed = bench_seed.value_or(default_seed());
      bench_cfg.baseline = !bench_no_baseline;
      bench_cfg.run_sqrt = bench_cfg.run_log = bench_cfg.run_diag = false;
      for (const auto& op : bench_ops) {
        if (op == "sqrt") bench_cfg.run_sqrt = true;
        else if (op == "log") bench_cfg.run_log = true;
        else if (op == "diag") bench_cfg.run_diag = true;
        else throw Error(ErrorCode::InvalidArgument, "unknown op '" + op + "'");
      }
      if (bench_out.empty() && !bench_stdout) throw Error(ErrorCode::InvalidArgument, "bench needs --out or --stdout");
      int errors = 0;
      if (!bench_out.empty()) {
        std::ofstream csv(bench_out);
        if (!csv) throw Error(ErrorCode::Io, "cannot open '" + bench_out + "'");
        errors = bench::run_bench(bench_cfg, csv);
      } else {
        errors = bench::run_bench(bench_cfg, out);
      }
      err << "bench finished; error rows " << errors << '\n';
    }
    if (active != nullptr) {
      report_path = active->report;
      quiet = active->quiet;
    }
    report.flush(report_path, quiet, err);
    return kExitOk;
  } catch (const Error& e) {
    if (active != nullptr) {
      report_path = active->report;
      quiet = active->quiet;
    }
    const int code = exit_code_for(e.code());
    report.add("error_code", std::string(to_string(e.code())));
    report.add("exit_code", std::to_string(code));
    err << "symlog: " << e.what() << '\n';
    try {
      report.flush(report_path, quiet, err);
    } catch (const Error&) {
    }
    return code;
  } catch (const std::exception& e) {
    err << "symlog: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace symlog::cli
