#include "irbp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace irbp {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

} // namespace

void write_matrix_market(const std::string& path, const SparseMatrix& A) {
  std::ofstream out(path);
  if (!out) fail(path, "cannot open for writing");
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << A.rows << ' ' << A.cols << ' ' << A.nnz() << '\n';
  char buf[64];
  for (int j = 0; j < A.cols; ++j)
    for (int k = A.col_ptr[j]; k < A.col_ptr[j + 1]; ++k) {
      std::snprintf(buf, sizeof buf, "%d %d %.17g\n", A.row_idx[k] + 1, j + 1, A.val[k]);
      out << buf;
    }
  if (!out) fail(path, "write error");
}

SparseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open");
  std::string line;
  if (!std::getline(in, line)) fail(path, "empty file");
  std::istringstream hdr(line);
  std::string banner, object, format, field, symmetry;
  hdr >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix")
    fail(path, "not a MatrixMarket matrix");
  if (lower(format) != "coordinate" || lower(field) != "real")
    fail(path, "only coordinate real supported");
  bool symmetric = lower(symmetry) == "symmetric";
  if (!symmetric && lower(symmetry) != "general") fail(path, "unsupported symmetry");

  do {
    if (!std::getline(in, line)) fail(path, "missing size line");
  } while (line.empty() || line[0] == '%');
  long rows, cols, nnz;
  if (std::sscanf(line.c_str(), "%ld %ld %ld", &rows, &cols, &nnz) != 3 || rows < 0 || cols < 0 ||
      nnz < 0)
    fail(path, "bad size line");

  std::vector<std::tuple<int, int, double>> trips;
  trips.reserve(static_cast<std::size_t>(nnz));
  long seen = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    long r, c;
    double v;
    if (std::sscanf(line.c_str(), "%ld %ld %lg", &r, &c, &v) != 3) fail(path, "bad entry line");
    if (r < 1 || r > rows || c < 1 || c > cols) fail(path, "entry index out of range");
    trips.emplace_back(static_cast<int>(r - 1), static_cast<int>(c - 1), v);
    if (symmetric && r != c) trips.emplace_back(static_cast<int>(c - 1), static_cast<int>(r - 1), v);
    ++seen;
  }
  if (seen != nnz) fail(path, "entry count does not match header");
  return SparseMatrix::from_triplets(static_cast<int>(rows), static_cast<int>(cols),
                                     std::move(trips));
}

void write_vector_file(const std::string& path, const std::vector<double>& v) {
  std::ofstream out(path);
  if (!out) fail(path, "cannot open for writing");
  char buf[48];
  for (double x : v) {
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    out << buf;
  }
  if (!out) fail(path, "write error");
}

std::vector<double> read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open");
  std::vector<double> v;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    double x;
    if (ls >> x) {
      v.push_back(x);
      std::string rest;
      if (ls >> rest) fail(path, "more than one value on a line");
    } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      fail(path, "unparseable line");
    }
  }
  return v;
}

} // namespace irbp
