#pragma once

#include <iosfwd>
#include <string>

#include "symlog/linalg.hpp"

namespace symlog::io {

/// Reads a square matrix in Matrix Market format. Accepts the array and
/// coordinate layouts with field real or complex and symmetry general.
/// Throws Error(Io) on malformed input.
CMatrix read_mtx(std::istream& in);
CMatrix read_mtx(const std::string& path);

/// Writes `m` as "%%MatrixMarket matrix array complex general", column-major,
/// one "re im" pair per line with 17 significant digits, which reads back
/// bit-exactly.
void write_mtx(std::ostream& out, const CMatrix& m);
void write_mtx(const std::string& path, const CMatrix& m);

}  // namespace symlog::io
