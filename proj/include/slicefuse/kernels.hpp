#pragma once

// Numeric inner loops used by the tensor/autodiff layer.
//
// Every kernel exists twice: a plain scalar reference implementation and an
// AVX2+FMA variant. A process-wide table picks one at startup based on CPU
// support and the SLICEFUSE_KERNELS environment variable
// ("auto" | "scalar" | "avx2"). Both variants compute each output element
// with a fixed accumulation order, so results are reproducible run-to-run
// for a given backend; scalar and AVX2 agree to rounding (FMA contraction),
// which the equivalence tests pin down.

#include <cstdint>

namespace slicefuse::kernels {

enum class Backend { Scalar, Avx2 };

bool cpu_has_avx2();
Backend active_backend();
const char* backend_name(Backend b);

template <class T>
struct Ops {
  // C[M,N] = alpha * op(A) * op(B) + beta * C, row-major, ld* = row strides.
  // transA/transB select op(X) = X or X^T. (transA && transB) is unsupported.
  void (*gemm)(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
               T alpha, const T* a, int64_t lda, const T* b, int64_t ldb,
               T beta, T* c, int64_t ldc);

  // Direct same-size convolution on one slice, stride 1, odd kernel k.
  // xpad: [cin, h+k-1, w+k-1] zero-padded input; w: [cout, cin, k, k];
  // bias: [cout] or nullptr; y: [cout, h, w] overwritten.
  void (*conv2d_fwd)(const T* xpad, const T* w, const T* bias, T* y,
                     int64_t cin, int64_t cout, int64_t h, int64_t wd,
                     int64_t k);

  // dw[cout, cin, k, k] += correlation of dy with xpad.
  void (*conv2d_wgrad)(const T* xpad, const T* dy, T* dw, int64_t cin,
                       int64_t cout, int64_t h, int64_t wd, int64_t k);

  void (*add)(int64_t n, const T* a, const T* b, T* y);   // y = a + b
  void (*mul)(int64_t n, const T* a, const T* b, T* y);   // y = a * b
  void (*axpy)(int64_t n, T alpha, const T* x, T* y);     // y += alpha * x
  void (*scale)(int64_t n, T alpha, const T* x, T* y);    // y = alpha * x
  T (*sum)(int64_t n, const T* x);
  T (*vmax)(int64_t n, const T* x);  // n >= 1

  // Row-wise softmax with max subtraction; x, y: [rows, n].
  void (*softmax_rows)(int64_t rows, int64_t n, const T* x, T* y);
};

// Table selected for the active backend.
template <class T>
const Ops<T>& ops();

// Backend-specific tables, independent of the dispatch decision. Calling
// table(Backend::Avx2) on a CPU without AVX2 support throws.
template <class T>
const Ops<T>& table(Backend b);

namespace scalar {
template <class T>
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k, T alpha,
          const T* a, int64_t lda, const T* b, int64_t ldb, T beta, T* c,
          int64_t ldc);
template <class T>
void conv2d_fwd(const T* xpad, const T* w, const T* bias, T* y, int64_t cin,
                int64_t cout, int64_t h, int64_t wd, int64_t k);
template <class T>
void conv2d_wgrad(const T* xpad, const T* dy, T* dw, int64_t cin, int64_t cout,
                  int64_t h, int64_t wd, int64_t k);
template <class T>
void add(int64_t n, const T* a, const T* b, T* y);
template <class T>
void mul(int64_t n, const T* a, const T* b, T* y);
template <class T>
void axpy(int64_t n, T alpha, const T* x, T* y);
template <class T>
void scale(int64_t n, T alpha, const T* x, T* y);
template <class T>
T sum(int64_t n, const T* x);
template <class T>
T vmax(int64_t n, const T* x);
template <class T>
void softmax_rows(int64_t rows, int64_t n, const T* x, T* y);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SLICEFUSE_X86 1
namespace avx2 {
template <class T>
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k, T alpha,
          const T* a, int64_t lda, const T* b, int64_t ldb, T beta, T* c,
          int64_t ldc);
template <class T>
void conv2d_fwd(const T* xpad, const T* w, const T* bias, T* y, int64_t cin,
                int64_t cout, int64_t h, int64_t wd, int64_t k);
template <class T>
void conv2d_wgrad(const T* xpad, const T* dy, T* dw, int64_t cin, int64_t cout,
                  int64_t h, int64_t wd, int64_t k);
template <class T>
void add(int64_t n, const T* a, const T* b, T* y);
template <class T>
void mul(int64_t n, const T* a, const T* b, T* y);
template <class T>
void axpy(int64_t n, T alpha, const T* x, T* y);
template <class T>
void scale(int64_t n, T alpha, const T* x, T* y);
template <class T>
T sum(int64_t n, const T* x);
template <class T>
T vmax(int64_t n, const T* x);
template <class T>
void softmax_rows(int64_t rows, int64_t n, const T* x, T* y);
}  // namespace avx2
#else
#define SLICEFUSE_X86 0
#endif

}  // namespace slicefuse::kernels
