#include "irbp/kernels.hpp"

#include <atomic>

namespace irbp::kernels {

#if IRBP_HAVE_AVX2_TU
const Backend& avx2_backend();
#endif
#if IRBP_HAVE_NEON_TU
const Backend& neon_backend();
#endif

namespace {

const Backend* detect() {
#if IRBP_HAVE_AVX2_TU
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return &avx2_backend();
#endif
#if IRBP_HAVE_NEON_TU
  return &neon_backend();
#endif
  return &scalar_backend();
}

std::atomic<const Backend*> forced{nullptr};

} // namespace

const Backend& active_backend() {
  if (const Backend* f = forced.load(std::memory_order_relaxed)) return *f;
  static const Backend* picked = detect();
  return *picked;
}

void force_backend(const Backend* b) { forced.store(b, std::memory_order_relaxed); }

double dot(const double* x, const double* y, std::size_t n) { return active_backend().dot(x, y, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { active_backend().axpy(a, x, y, n); }
double nrm2sq(const double* x, std::size_t n) { return active_backend().nrm2sq(x, n); }
double asum(const double* x, std::size_t n) { return active_backend().asum(x, n); }
void scale(double a, double* x, std::size_t n) { active_backend().scale(a, x, n); }
std::size_t amax(const double* x, std::size_t n) { return active_backend().amax(x, n); }

} // namespace irbp::kernels
