#pragma once
#include <string>
#include <vector>

#include "irbp/sparse.hpp"

namespace irbp {

// MatrixMarket coordinate/real. Writing always emits "general"; reading also
// accepts "symmetric" (mirrored on read). Values round-trip at 17 significant
// digits. Malformed input throws std::runtime_error naming the file.
void write_matrix_market(const std::string& path, const SparseMatrix& A);
SparseMatrix read_matrix_market(const std::string& path);

// Plain text vectors: one value per line, blank lines and '#' comments
// ignored.
void write_vector_file(const std::string& path, const std::vector<double>& v);
std::vector<double> read_vector_file(const std::string& path);

} // namespace irbp
