#include "mpl/kernels.hpp"

#include <cassert>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace mpl::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * x[i] * y[i];
  return acc;
}

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

}  // namespace scalar

#if defined(MPL_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n);
double sum(const double* x, std::size_t n);
}  // namespace avx2
#endif

bool avx2_available() {
#if defined(MPL_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

struct Vtable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*weighted_dot)(const double*, const double*, const double*,
                         std::size_t);
  double (*sum)(const double*, std::size_t);
};

constexpr Vtable kScalar{scalar::dot, scalar::axpy, scalar::weighted_dot,
                         scalar::sum};
#if defined(MPL_HAVE_AVX2)
constexpr Vtable kAvx2{avx2::dot, avx2::axpy, avx2::weighted_dot, avx2::sum};
#endif

Backend detect_backend() {
  if (const char* env = std::getenv("MPL_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!avx2_available())
        throw std::runtime_error("MPL_SIMD=avx2 but AVX2/FMA not available");
      return Backend::Avx2;
    }
    // anything else (incl. "auto") falls through to detection
  }
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

struct State {
  Backend backend;
  const Vtable* vt;
  State() { set(detect_backend()); }
  void set(Backend b) {
    backend = b;
#if defined(MPL_HAVE_AVX2)
    vt = (b == Backend::Avx2) ? &kAvx2 : &kScalar;
#else
    vt = &kScalar;
#endif
  }
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Backend active_backend() { return state().backend; }

void force_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available())
    throw std::runtime_error("AVX2 backend requested but not available");
  state().set(b);
}

void reset_backend() { state().set(detect_backend()); }

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  return state().vt->dot(x.data(), y.data(), x.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  state().vt->axpy(a, x.data(), y.data(), x.size());
}

double weighted_dot(std::span<const double> w, std::span<const double> x,
                    std::span<const double> y) {
  assert(w.size() == x.size() && x.size() == y.size());
  return state().vt->weighted_dot(w.data(), x.data(), y.data(), x.size());
}

double sum(std::span<const double> x) {
  return state().vt->sum(x.data(), x.size());
}

}  // namespace mpl::kernels
