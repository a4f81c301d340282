#pragma once

#include <cstddef>
#include <span>

// Dense double-precision kernels for the coordinate-descent inner loops.
// A scalar reference path is always available; on x86-64 an AVX2/FMA path
// is selected at runtime when the CPU supports it. The two paths agree up
// to floating-point reassociation (see tests/test_kernels.cpp).
namespace mpl::kernels {

enum class Backend { Scalar, Avx2 };

// Backend chosen on first use from CPU features; the MPL_SIMD environment
// variable ({auto,scalar,avx2}) or force_backend() overrides the choice.
Backend active_backend();
void force_backend(Backend b);
void reset_backend();
const char* backend_name(Backend b);
bool avx2_available();

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
double weighted_dot(std::span<const double> w, std::span<const double> x,
                    std::span<const double> y);
double sum(std::span<const double> x);

// Reference implementations, exposed for equivalence testing.
namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n);
double sum(const double* x, std::size_t n);
}  // namespace scalar

}  // namespace mpl::kernels
