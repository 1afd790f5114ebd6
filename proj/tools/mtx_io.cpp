#include "mtx_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "symlog/error.hpp"

namespace symlog::io {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Io, "mtx: " + what); }

double parse_double(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail("bad number '" + token + "'");
  return value;
}

// Next non-comment, non-blank line.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

CMatrix read_mtx(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail("empty input");
  std::istringstream banner(line);
  std::string tag, object, layout, field, symmetry;
  banner >> tag >> object >> layout >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lowercase(object) != "matrix") fail("missing %%MatrixMarket matrix banner");
  layout = lowercase(layout);
  field = lowercase(field);
  symmetry = lowercase(symmetry);
  if (layout != "array" && layout != "coordinate") fail("unsupported layout '" + layout + "'");
  if (field != "real" && field != "complex" && field != "double") fail("unsupported field '" + field + "'");
  if (symmetry != "general") fail("unsupported symmetry '" + symmetry + "'");
  const bool complex_field = field == "complex";

  if (!next_data_line(in, line)) fail("missing size line");
  std::istringstream size_line(line);
  long rows = 0, cols = 0, entries = 0;
  size_line >> rows >> cols;
  if (layout == "coordinate") size_line >> entries;
  if (!size_line || rows <= 0 || cols <= 0) fail("bad size line '" + line + "'");
  if (rows != cols) fail("matrix is not square");

  CMatrix m = CMatrix::Zero(rows, cols);
  auto read_value = [&](std::istringstream& ss) {
    std::string re, im;
    ss >> re;
    if (complex_field) ss >> im;
    if (!ss) fail("truncated entry");
    const double r = parse_double(re);
    const double i = complex_field ? parse_double(im) : 0.0;
    if (!std::isfinite(r) || !std::isfinite(i)) fail("non-finite entry");
    return Complex(r, i);
  };

  if (layout == "array") {
    for (long j = 0; j < cols; ++j)
      for (long i = 0; i < rows; ++i) {
        if (!next_data_line(in, line)) fail("expected " + std::to_string(rows * cols) + " entries");
        std::istringstream ss(line);
        m(i, j) = read_value(ss);
      }
  } else {
    for (long k = 0; k < entries; ++k) {
      if (!next_data_line(in, line)) fail("expected " + std::to_string(entries) + " entries");
      std::istringstream ss(line);
      long i = 0, j = 0;
      ss >> i >> j;
      if (!ss || i < 1 || j < 1 || i > rows || j > cols) fail("bad coordinate in '" + line + "'");
      m(i - 1, j - 1) = read_value(ss);
    }
  }
  return m;
}

CMatrix read_mtx(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  return read_mtx(in);
}

void write_mtx(std::ostream& out, const CMatrix& m) {
  out << "%%MatrixMarket matrix array complex general\n";
  out << m.rows() << ' ' << m.cols() << '\n';
  char buf[64];
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", m(i, j).real(), m(i, j).imag());
      out << buf;
    }
  if (!out) fail("write failed");
}

void write_mtx(const std::string& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) fail("cannot open '" + path + "' for writing");
  write_mtx(out, m);
  out.flush();
  if (!out) fail("write to '" + path + "' failed");
}

}  // namespace symlog::io
