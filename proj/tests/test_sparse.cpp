#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irbp/io.hpp"
#include "irbp/sparse.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace irbp;

namespace {

std::string tmp_path(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "irbp_sparse_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

} // namespace

TEST_CASE("from_triplets sorts, sums duplicates, and bounds-checks") {
  auto A = SparseMatrix::from_triplets(3, 2, {{2, 1, 5.0}, {0, 0, 1.0}, {2, 1, -2.0}, {1, 0, 3.0}});
  CHECK(A.rows == 3);
  CHECK(A.cols == 2);
  CHECK(A.nnz() == 3);
  CHECK(A.col_ptr == std::vector<int>{0, 2, 3});
  CHECK(A.row_idx == std::vector<int>{0, 1, 2});
  CHECK(A.val[2] == doctest::Approx(3.0));
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1.0}}), std::out_of_range);
}

TEST_CASE("push_column builds incrementally") {
  SparseMatrix A;
  A.rows = 4;
  A.push_column({3, 0}, {7.0, 1.0});
  A.push_column({}, {});
  A.push_column({2}, {-1.0});
  CHECK(A.cols == 3);
  CHECK(A.col_ptr == std::vector<int>{0, 2, 2, 3});
  CHECK(A.row_idx == std::vector<int>{0, 3, 2});
  CHECK(A.val == std::vector<double>{1.0, 7.0, -1.0});
}

TEST_CASE("gaxpy, col_dot, residual_inf agree with dense arithmetic") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int m = 13, n = 9;
  std::vector<std::tuple<int, int, double>> trips;
  std::vector<std::vector<double>> D(m, std::vector<double>(n, 0.0));
  for (int t = 0; t < 40; ++t) {
    int r = int(rng() % m), c = int(rng() % n);
    double v = u(rng);
    trips.emplace_back(r, c, v);
    D[r][c] += v;
  }
  auto A = SparseMatrix::from_triplets(m, n, trips);
  std::vector<double> x(n), y(m, 0.0), yd(m, 0.0);
  for (auto& v : x) v = u(rng);
  gaxpy(A, x.data(), y.data());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) yd[i] += D[i][j] * x[j];
  for (int i = 0; i < m; ++i) CHECK(y[i] == doctest::Approx(yd[i]));
  for (int j = 0; j < n; ++j) {
    double d = 0.0;
    for (int i = 0; i < m; ++i) d += D[i][j] * y[i];
    CHECK(col_dot(A, j, y.data()) == doctest::Approx(d));
  }
  CHECK(residual_inf(A, x.data(), y.data()) == doctest::Approx(0.0));
  y[3] += 0.5;
  CHECK(residual_inf(A, x.data(), y.data()) == doctest::Approx(0.5));
}

TEST_CASE("hcat concatenates columns") {
  auto L = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {1, 1, 2.0}});
  auto R = SparseMatrix::from_triplets(2, 1, {{0, 0, 3.0}});
  auto A = hcat(L, R);
  CHECK(A.cols == 3);
  CHECK(A.col_ptr == std::vector<int>{0, 1, 2, 3});
  CHECK(A.row_idx == std::vector<int>{0, 1, 0});
  CHECK(A.val == std::vector<double>{1.0, 2.0, 3.0});
  auto bad = SparseMatrix::from_triplets(3, 1, {});
  CHECK_THROWS(hcat(L, bad));
}

TEST_CASE("matrix market round-trip is value-exact") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::tuple<int, int, double>> trips;
  for (int t = 0; t < 60; ++t) trips.emplace_back(int(rng() % 11), int(rng() % 7), u(rng) * 1e3);
  auto A = SparseMatrix::from_triplets(11, 7, trips);
  auto path = tmp_path("rt.mtx");
  write_matrix_market(path, A);
  auto B = read_matrix_market(path);
  CHECK(B.rows == A.rows);
  CHECK(B.cols == A.cols);
  REQUIRE(B.nnz() == A.nnz());
  // 17 significant digits uniquely identify a double
  for (int k = 0; k < A.nnz(); ++k) CHECK(B.val[k] == A.val[k]);
  CHECK(B.row_idx == A.row_idx);
  CHECK(B.col_ptr == A.col_ptr);
}

TEST_CASE("matrix market symmetric input is mirrored") {
  auto path = tmp_path("sym.mtx");
  std::ofstream(path) << "%%MatrixMarket matrix coordinate real symmetric\n"
                         "% comment\n"
                         "2 2 2\n"
                         "1 1 1.5\n"
                         "2 1 -3\n";
  auto A = read_matrix_market(path);
  CHECK(A.nnz() == 3);
  CHECK(A.val[0] == 1.5);
  CHECK(A.val[1] == -3.0);
  CHECK(A.row_idx == std::vector<int>{0, 1, 0});
}

TEST_CASE("matrix market rejects malformed input") {
  auto bad1 = tmp_path("bad1.mtx");
  std::ofstream(bad1) << "%%MatrixMarket matrix array real general\n1 1\n1\n";
  CHECK_THROWS_AS(read_matrix_market(bad1), std::runtime_error);
  auto bad2 = tmp_path("bad2.mtx");
  std::ofstream(bad2) << "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n";
  CHECK_THROWS_AS(read_matrix_market(bad2), std::runtime_error);
  auto bad3 = tmp_path("bad3.mtx");
  std::ofstream(bad3) << "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n";
  CHECK_THROWS_AS(read_matrix_market(bad3), std::runtime_error);
  CHECK_THROWS_AS(read_matrix_market(tmp_path("missing.mtx")), std::runtime_error);
}

TEST_CASE("vector file round-trip with comments") {
  auto path = tmp_path("v.txt");
  std::vector<double> v{1.0, -2.5, 3.25e-17, 0.1};
  write_vector_file(path, v);
  auto w = read_vector_file(path);
  REQUIRE(w.size() == v.size());
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(w[i] == v[i]);

  auto path2 = tmp_path("v2.txt");
  std::ofstream(path2) << "# rhs\n\n 1.5 # inline\n-2\n";
  auto u = read_vector_file(path2);
  REQUIRE(u.size() == 2);
  CHECK(u[0] == 1.5);
  CHECK(u[1] == -2.0);

  auto bad = tmp_path("vbad.txt");
  std::ofstream(bad) << "1.0 2.0\n";
  CHECK_THROWS_AS(read_vector_file(bad), std::runtime_error);
}
