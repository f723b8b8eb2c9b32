#include "irbp/kernels.hpp"

#include <cmath>

namespace irbp::kernels {
namespace {

double dot_s(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_s(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double nrm2sq_s(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double asum_s(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

void scale_s(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

std::size_t amax_s(const double* x, std::size_t n) {
  std::size_t best = 0;
  double bv = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fabs(x[i]);
    if (v > bv) { bv = v; best = i; }
  }
  return best;
}

} // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar", dot_s, axpy_s, nrm2sq_s, asum_s, scale_s, amax_s};
  return b;
}

} // namespace irbp::kernels
