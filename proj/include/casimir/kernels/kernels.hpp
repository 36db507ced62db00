#pragma once

#include <cstddef>

namespace casimir::kernels {

// Dense double-precision inner loops. Every variant computes the same
// mathematical result; vector variants may differ from the scalar reference
// by rounding only (FMA contraction, reassociated partial sums).

/// C(m x n) = A(m x k) * B(k x n), all row-major with leading dimensions lda, ldb, ldc.
using GemmFn = void (*)(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
                        const double* b, std::size_t ldb, double* c, std::size_t ldc);
/// sum_i x[i] * y[i]
using DotFn = double (*)(const double* x, const double* y, std::size_t n);
/// y[i] += alpha * x[i]
using AxpyFn = void (*)(double alpha, const double* x, double* y, std::size_t n);

struct KernelTable {
  const char* name;
  GemmFn gemm;
  DotFn dot;
  AxpyFn axpy;
};

const KernelTable& scalar_kernels();

/// AVX2+FMA variant, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();

/// The table used by the library. Chosen once: AVX2 when available, unless the
/// environment variable CASIMIR_KERNELS=scalar forces the reference path.
const KernelTable& active_kernels();

namespace detail {
void gemm_scalar(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda, const double* b,
                 std::size_t ldb, double* c, std::size_t ldc);
double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);

void gemm_avx2(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda, const double* b,
               std::size_t ldb, double* c, std::size_t ldc);
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
}  // namespace detail

}  // namespace casimir::kernels
