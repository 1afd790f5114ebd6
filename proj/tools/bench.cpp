#include "bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include <unsupported/Eigen/MatrixFunctions>

#include "symlog/error.hpp"
#include "symlog/gen.hpp"
#include "symlog/rng.hpp"
#include "symlog/rootlog.hpp"
#include "symlog/specfact.hpp"
#include "symlog/verify.hpp"

namespace symlog::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

struct Task {
  SymmetryClass cls;
  long n;
  double gap;
  int trial;
  std::uint64_t index;
};

class RowWriter {
 public:
  explicit RowWriter(std::ostream& out) : out_(out) {}

  void write(const BenchRow& row) {
    // NaN or negative would break the "finite and >= 0" contract; such values
    // are reported as +inf so the row still parses.
    BenchRow r = row;
    if (!(r.value >= 0.0)) r.value = std::numeric_limits<double>::infinity();
    const std::string line = format_row(r);
    std::lock_guard lock(mutex_);
    out_ << line << '\n';
    out_.flush();
  }

 private:
  std::ostream& out_;
  std::mutex mutex_;
};

double offcircle(const Eigen::VectorXcd& eigenvalues) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) worst = std::max(worst, std::abs(std::abs(eigenvalues(i)) - 1.0));
  return worst;
}

// Max |Im| of the basis after rotating each column so its largest entry is real.
double realness_of_basis(const CMatrix& q) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Eigen::Index k = 0;
    q.col(j).cwiseAbs().maxCoeff(&k);
    const Complex pivot = q(k, j);
    const Complex phase = std::abs(pivot) > 0 ? std::conj(pivot) / std::abs(pivot) : Complex(1.0);
    worst = std::max(worst, (phase * q.col(j)).imag().cwiseAbs().maxCoeff());
  }
  return worst;
}

void run_task(const Task& t, const BenchConfig& cfg, RowWriter& writer, std::atomic<int>& errors) {
  const SymmetryContext ctx(t.n);
  auto emit = [&](const std::string& metric, double value) {
    writer.write({t.cls, t.n, t.gap, t.trial, metric, value});
  };
  auto guarded = [&](const std::string& prefix, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      ++errors;
      emit(prefix + ".error_code", static_cast<double>(static_cast<int>(e.code())));
    } catch (const std::exception&) {
      ++errors;
      emit(prefix + ".error_code", static_cast<double>(static_cast<int>(ErrorCode::InvalidArgument)));
    }
  };

  SpectralConstruction construction;
  CMatrix u;
  guarded("gen.structured", [&] {
    construction = random_gapped_construction(t.cls, t.n, GapSpec{t.gap, cfg.pinned}, stream_seed(cfg.seed, t.index));
    const CMatrix root = construction.principal_sqrt();
    u = root * root;
    if (t.cls != SymmetryClass::GenericA) u = enforce_unitary_symmetry(u, t.cls, ctx);
  });
  if (u.size() == 0) return;

  if (cfg.run_sqrt) {
    const CMatrix v_true = construction.principal_sqrt();
    guarded("sqrt.structured", [&] {
      const auto t0 = Clock::now();
      const CMatrix v = sqrt_structured(u, t.cls, ctx);
      const double wall = seconds_since(t0);
      emit("sqrt.structured.backward_err", linalg::spectral_norm(v * v - u));
      emit("sqrt.structured.forward_err", linalg::spectral_norm(v - v_true));
      emit("sqrt.structured.unitarity_err", linalg::unitarity_defect(v));
      emit("sqrt.structured.symmetry_err", unitary_symmetry_defect(v, t.cls, ctx));
      emit("sqrt.structured.wall_seconds", wall);
    });
    if (cfg.baseline) {
      guarded("sqrt.baseline", [&] {
        const auto t0 = Clock::now();
        const CMatrix v = u.sqrt();
        const double wall = seconds_since(t0);
        emit("sqrt.baseline.backward_err", linalg::spectral_norm(v * v - u));
        emit("sqrt.baseline.forward_err", linalg::spectral_norm(v - v_true));
        emit("sqrt.baseline.unitarity_err", linalg::unitarity_defect(v));
        emit("sqrt.baseline.symmetry_err", unitary_symmetry_defect(v, t.cls, ctx));
        emit("sqrt.baseline.wall_seconds", wall);
      });
    }
  }

  if (cfg.run_log || cfg.run_diag) {
    const CMatrix l_true = construction.principal_log();
    StructuredLog log;
    double log_wall = 0.0;
    guarded("log.structured", [&] {
      const auto t0 = Clock::now();
      log = log_structured(u, t.cls, ctx);
      log_wall = seconds_since(t0);
      if (!cfg.run_log) return;
      emit("log.structured.backward_err", linalg::spectral_norm(verify::expm_antihermitian(log.h_anti) - u));
      emit("log.structured.forward_err", linalg::spectral_norm(log.h_anti - l_true));
      emit("log.structured.unitarity_err", verify::antihermitian_defect(log.h_anti));
      emit("log.structured.symmetry_err", log_symmetry_defect(log.h_anti, t.cls, ctx));
      emit("log.structured.wall_seconds", log_wall);
    });
    if (cfg.run_log && cfg.baseline) {
      guarded("log.baseline", [&] {
        const auto t0 = Clock::now();
        const CMatrix l = u.log();
        const double wall = seconds_since(t0);
        const CMatrix back = l.exp();
        emit("log.baseline.backward_err", linalg::spectral_norm(back - u));
        emit("log.baseline.forward_err", linalg::spectral_norm(l - l_true));
        emit("log.baseline.unitarity_err", verify::antihermitian_defect(l));
        emit("log.baseline.symmetry_err", log_symmetry_defect(l, t.cls, ctx));
        emit("log.baseline.wall_seconds", wall);
      });
    }

    if (cfg.run_diag && log.h_anti.size() != 0 && t.cls != SymmetryClass::SelfDualAII) {
      guarded("diag.structured", [&] {
        const auto t0 = Clock::now();
        const DiagResult res = diagonalize_log(log, ctx);
        const double wall = log_wall + seconds_since(t0);
        const Eigen::VectorXcd d = (Complex(0.0, 1.0) * res.phases.cast<Complex>()).array().exp();
        emit("diag.structured.eigresidual", verify::eigen_residual(u, res));
        emit("diag.structured.orth_err", linalg::unitarity_defect(res.q));
        emit("diag.structured.offcircle_err", offcircle(d));
        emit("diag.structured.forward_err", verify::phase_multiset_distance(res.phases, construction.eigenphases()));
        if (t.cls == SymmetryClass::SymmetricAI) emit("diag.structured.realness_err", verify::max_imag(res.q));
        if (t.cls == SymmetryClass::ChiralAIII) {
          const verify::PairingDefect p = verify::aiii_pairing_defect(res);
          emit("diag.structured.pairing_err", std::max(p.vectors, p.phases));
        }
        emit("diag.structured.wall_seconds", wall);
      });
    }
    if (cfg.run_diag && cfg.baseline) {
      guarded("diag.baseline", [&] {
        const auto t0 = Clock::now();
        Eigen::ComplexEigenSolver<CMatrix> solver(u, true);
        const double wall = seconds_since(t0);
        if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "ComplexEigenSolver");
        const CMatrix& q = solver.eigenvectors();
        const Eigen::VectorXcd& lambda = solver.eigenvalues();
        RVector phases(lambda.size());
        for (Eigen::Index i = 0; i < lambda.size(); ++i) phases(i) = std::arg(lambda(i));
        emit("diag.baseline.eigresidual", linalg::spectral_norm(u * q - q * lambda.asDiagonal()));
        emit("diag.baseline.orth_err", linalg::unitarity_defect(q));
        emit("diag.baseline.offcircle_err", offcircle(lambda));
        emit("diag.baseline.forward_err", verify::phase_multiset_distance(phases, construction.eigenphases()));
        if (t.cls == SymmetryClass::SymmetricAI) emit("diag.baseline.realness_err", realness_of_basis(q));
        emit("diag.baseline.wall_seconds", wall);
      });
    }
  }
}

}  // namespace

std::string baseline_name() {
  return "Eigen " + std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
         std::to_string(EIGEN_MINOR_VERSION) + " (MatrixFunctions sqrt/log/exp, ComplexEigenSolver)";
}

std::string format_row(const BenchRow& row) {
  return std::string(to_string(row.cls)) + "," + std::to_string(row.n) + "," + shortest(row.gap) + "," +
         std::to_string(row.trial) + "," + row.metric + "," + shortest(row.value);
}

int run_bench(const BenchConfig& config, std::ostream& out) {
  if (config.trials < 1) throw Error(ErrorCode::InvalidArgument, "bench: trials must be >= 1");
  for (long n : config.sizes)
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "bench: sizes must be positive");
  for (double g : config.gaps)
    if (!(g > 0.0 && g < std::numbers::pi)) throw Error(ErrorCode::InvalidArgument, "bench: gaps must lie in (0, pi)");

  std::vector<Task> tasks;
  std::uint64_t index = 0;
  for (SymmetryClass cls : config.classes)
    for (long n : config.sizes)
      for (double gap : config.gaps)
        for (int trial = 0; trial < config.trials; ++trial) tasks.push_back({cls, n, gap, trial, index++});

  out << "# symlog bench; seed=" << config.seed << "; baseline=" << baseline_name() << '\n';
  out << "class,n,gap,trial,metric,value\n";
  out.flush();

  RowWriter writer(out);
  std::atomic<int> errors{0};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(tasks[i], config, writer, errors);
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return errors.load();
}

}  // namespace symlog::bench
