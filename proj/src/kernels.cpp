#include "byol/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace byol::kernels {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

void set_parallel(bool on) {
#ifndef _OPENMP
  on = false;
#endif
  g_parallel.store(on, std::memory_order_relaxed);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

#define BYOL_DISPATCH(fn, ...)          \
  do {                                  \
    if (parallel_enabled())             \
      omp::fn(__VA_ARGS__);             \
    else                                \
      serial::fn(__VA_ARGS__);          \
  } while (0)

void gemm_nn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c) {
  BYOL_DISPATCH(gemm_nn, m, n, k, alpha, a, b, beta, c);
}
void gemm_nt(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c) {
  BYOL_DISPATCH(gemm_nt, m, n, k, alpha, a, b, beta, c);
}
void gemm_tn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c) {
  BYOL_DISPATCH(gemm_tn, m, n, k, alpha, a, b, beta, c);
}
void im2col(const double* img, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* cols) {
  BYOL_DISPATCH(im2col, img, c, h, w, kh, kw, stride, pad, cols);
}
void col2im(const double* cols, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* img) {
  BYOL_DISPATCH(col2im, cols, c, h, w, kh, kw, stride, pad, img);
}
void maxpool_forward(const double* x, int64_t n, int64_t c, int64_t h,
                     int64_t w, int64_t k, int64_t stride, int64_t pad,
                     double* out, int64_t* argmax) {
  BYOL_DISPATCH(maxpool_forward, x, n, c, h, w, k, stride, pad, out, argmax);
}
void maxpool_backward(const double* gout, const int64_t* argmax,
                      int64_t planes, int64_t out_per_plane, double* gin) {
  BYOL_DISPATCH(maxpool_backward, gout, argmax, planes, out_per_plane, gin);
}

#undef BYOL_DISPATCH

}  // namespace byol::kernels
