#include "irbp/kernels.hpp"

#include <arm_neon.h>
#include <cmath>

namespace irbp::kernels {
namespace {

double dot_v(const double* x, const double* y, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) a0 = vfmaq_f64(a0, vld1q_f64(x + i), vld1q_f64(y + i));
  double acc = vaddvq_f64(a0);
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_v(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

double nrm2sq_v(const double* x, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    a0 = vfmaq_f64(a0, v, v);
  }
  double acc = vaddvq_f64(a0);
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double asum_v(const double* x, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) a0 = vaddq_f64(a0, vabsq_f64(vld1q_f64(x + i)));
  double acc = vaddvq_f64(a0);
  for (; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

void scale_v(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

std::size_t amax_v(const double* x, std::size_t n) {
  float64x2_t vm = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vm = vmaxq_f64(vm, vabsq_f64(vld1q_f64(x + i)));
  double bv = vmaxvq_f64(vm);
  for (; i < n; ++i) {
    double v = std::fabs(x[i]);
    bv = bv > v ? bv : v;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (std::fabs(x[j]) == bv) return j;
  return 0;
}

} // namespace

const Backend& neon_backend() {
  static const Backend b{"neon", dot_v, axpy_v, nrm2sq_v, asum_v, scale_v, amax_v};
  return b;
}

} // namespace irbp::kernels
