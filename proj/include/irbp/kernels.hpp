#pragma once
#include <cstddef>
#include <string_view>

namespace irbp::kernels {

// Dense vector primitives over contiguous doubles. Two implementations:
// a scalar reference and a SIMD variant compiled per-arch, selected once at
// runtime from CPU features. amax returns the FIRST index attaining the
// maximum absolute value regardless of backend; callers rely on that for
// deterministic pivoting.
struct Backend {
  std::string_view name;
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*nrm2sq)(const double*, std::size_t);
  double (*asum)(const double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  std::size_t (*amax)(const double*, std::size_t);
};

const Backend& scalar_backend();
const Backend& active_backend();
// Tests pin a specific backend; nullptr restores automatic selection.
void force_backend(const Backend* b);

double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double nrm2sq(const double* x, std::size_t n);
double asum(const double* x, std::size_t n);
void scale(double a, double* x, std::size_t n);
std::size_t amax(const double* x, std::size_t n);

} // namespace irbp::kernels
