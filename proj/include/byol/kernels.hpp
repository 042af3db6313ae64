#pragma once

#include <cstdint>

// Dense compute kernels behind the tensor primitives. Every kernel exists in
// two builds: a plain serial reference and an OpenMP version parallelized
// over independent output rows/planes. Both order the per-element arithmetic
// identically, so results are bitwise equal; the tests assert that and the
// bench tool compares their throughput.
namespace byol::kernels {

// Process-wide switch between the two paths. Defaults to parallel when the
// binary was built with OpenMP.
bool parallel_enabled();
void set_parallel(bool on);
int max_threads();

// C (m x n) = alpha * A (m x k) * B (k x n) + beta * C
void gemm_nn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
// C (m x n) = alpha * A (m x k) * B^T, B stored (n x k)
void gemm_nt(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
// C (m x n) = alpha * A^T * B, A stored (k x m), B (k x n)
void gemm_tn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);

// Lower a (c, h, w) image into (c*kh*kw, oh*ow) patch columns, zero padding.
void im2col(const double* img, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* cols);
// Scatter-add the column buffer back onto a (c, h, w) image (caller zeroes).
void col2im(const double* cols, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* img);

// Max pooling over (n, c, h, w); padded cells are ignored, first maximum
// wins on ties. argmax receives the flat input index per output element.
void maxpool_forward(const double* x, int64_t n, int64_t c, int64_t h,
                     int64_t w, int64_t k, int64_t stride, int64_t pad,
                     double* out, int64_t* argmax);
// gin must be zeroed by the caller; planes = n*c, out_per_plane = oh*ow.
void maxpool_backward(const double* gout, const int64_t* argmax,
                      int64_t planes, int64_t out_per_plane, double* gin);

namespace serial {
void gemm_nn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
void gemm_nt(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
void gemm_tn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
void im2col(const double* img, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* cols);
void col2im(const double* cols, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* img);
void maxpool_forward(const double* x, int64_t n, int64_t c, int64_t h,
                     int64_t w, int64_t k, int64_t stride, int64_t pad,
                     double* out, int64_t* argmax);
void maxpool_backward(const double* gout, const int64_t* argmax,
                      int64_t planes, int64_t out_per_plane, double* gin);
}  // namespace serial

namespace omp {
void gemm_nn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
void gemm_nt(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
void gemm_tn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c);
void im2col(const double* img, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* cols);
void col2im(const double* cols, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* img);
void maxpool_forward(const double* x, int64_t n, int64_t c, int64_t h,
                     int64_t w, int64_t k, int64_t stride, int64_t pad,
                     double* out, int64_t* argmax);
void maxpool_backward(const double* gout, const int64_t* argmax,
                      int64_t planes, int64_t out_per_plane, double* gin);
}  // namespace omp

inline int64_t conv_out_extent(int64_t in, int64_t k, int64_t stride, int64_t pad) {
  return (in + 2 * pad - k) / stride + 1;
}

}  // namespace byol::kernels
