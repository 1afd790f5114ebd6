#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symlog/symmetry.hpp"

namespace symlog::bench {

/// Metric names written to the last component of the CSV metric column.
inline constexpr const char* kMetricNames[] = {
    "backward_err", "forward_err", "unitarity_err", "symmetry_err", "eigresidual",
    "orth_err",     "offcircle_err", "realness_err", "pairing_err",  "wall_seconds",
};

struct BenchConfig {
  std::vector<SymmetryClass> classes{SymmetryClass::GenericA};
  std::vector<long> sizes{50};
  std::vector<double> gaps{1e-2};
  int trials = 1;
  int pinned = 4;
  std::uint64_t seed = 1;
  bool run_sqrt = true;
  bool run_log = true;
  bool run_diag = true;
  bool baseline = true;
  int threads = 1;
};

struct BenchRow {
  SymmetryClass cls;
  long n;
  double gap;
  int trial;
  std::string metric;  // "<op>.<impl>.<name>"
  double value;
};

/// Label of the generic comparator, e.g. "Eigen 3.4.0 ...".
std::string baseline_name();

/// Runs the grid and streams CSV to `out`: one "# ..." comment line naming the
/// comparator, the header "class,n,gap,trial,metric,value", then one row per
/// measurement, flushed as written. Failures become "<op>.<impl>.error_code"
/// rows holding the numeric ErrorCode; the sweep continues.
/// Returns the number of error rows.
int run_bench(const BenchConfig& config, std::ostream& out);

/// Formats one row without the trailing newline.
std::string format_row(const BenchRow& row);

}  // namespace symlog::bench
