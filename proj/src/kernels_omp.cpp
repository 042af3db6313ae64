#include "byol/kernels.hpp"

#include <limits>

// OpenMP path. Work splits across independent output rows (gemm) or planes
// (pooling); within one output element the arithmetic order is identical to
// the serial reference, which keeps results bitwise equal at any thread
// count.
namespace byol::kernels::omp {

namespace {
void scale_rows(double* c, int64_t m, int64_t n, double beta) {
  const int64_t total = m * n;
  if (beta == 0.0) {
    for (int64_t i = 0; i < total; ++i) c[i] = 0.0;
  } else if (beta != 1.0) {
    for (int64_t i = 0; i < total; ++i) c[i] *= beta;
  }
}
}  // namespace

void gemm_nn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c) {
  scale_rows(c, m, n, beta);
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    const double* arow = a + i * k;
    for (int64_t p = 0; p < k; ++p) {
      const double av = alpha * arow[p];
      const double* brow = b + p * n;
      for (int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void gemm_nt(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c) {
  scale_rows(c, m, n, beta);
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < m; ++i) {
    const double* arow = a + i * k;
    double* crow = c + i * n;
    for (int64_t j = 0; j < n; ++j) {
      const double* brow = b + j * k;
      double acc = 0.0;
      for (int64_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
      crow[j] += alpha * acc;
    }
  }
}

void gemm_tn(int64_t m, int64_t n, int64_t k, double alpha, const double* a,
             const double* b, double beta, double* c) {
  scale_rows(c, m, n, beta);
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    for (int64_t p = 0; p < k; ++p) {
      const double av = alpha * a[p * m + i];
      const double* brow = b + p * n;
      for (int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void im2col(const double* img, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* cols) {
  const int64_t oh = conv_out_extent(h, kh, stride, pad);
  const int64_t ow = conv_out_extent(w, kw, stride, pad);
  const int64_t ohw = oh * ow;
  const int64_t rows = c * kh * kw;
#pragma omp parallel for schedule(static)
  for (int64_t row = 0; row < rows; ++row) {
    const int64_t ch = row / (kh * kw);
    const int64_t ki = (row / kw) % kh;
    const int64_t kj = row % kw;
    double* dst = cols + row * ohw;
    const double* plane = img + ch * h * w;
    for (int64_t oy = 0; oy < oh; ++oy) {
      const int64_t iy = oy * stride - pad + ki;
      for (int64_t ox = 0; ox < ow; ++ox) {
        const int64_t ix = ox * stride - pad + kj;
        dst[oy * ow + ox] =
            (iy >= 0 && iy < h && ix >= 0 && ix < w) ? plane[iy * w + ix] : 0.0;
      }
    }
  }
}

void col2im(const double* cols, int64_t c, int64_t h, int64_t w, int64_t kh,
            int64_t kw, int64_t stride, int64_t pad, double* img) {
  const int64_t oh = conv_out_extent(h, kh, stride, pad);
  const int64_t ow = conv_out_extent(w, kw, stride, pad);
  const int64_t ohw = oh * ow;
  // Channels own disjoint image planes; the (ki, kj) loops stay inside to
  // preserve the reference accumulation order per pixel.
#pragma omp parallel for schedule(static)
  for (int64_t ch = 0; ch < c; ++ch) {
    double* plane = img + ch * h * w;
    for (int64_t ki = 0; ki < kh; ++ki) {
      for (int64_t kj = 0; kj < kw; ++kj) {
        const double* src = cols + ((ch * kh + ki) * kw + kj) * ohw;
        for (int64_t oy = 0; oy < oh; ++oy) {
          const int64_t iy = oy * stride - pad + ki;
          if (iy < 0 || iy >= h) continue;
          for (int64_t ox = 0; ox < ow; ++ox) {
            const int64_t ix = ox * stride - pad + kj;
            if (ix < 0 || ix >= w) continue;
            plane[iy * w + ix] += src[oy * ow + ox];
          }
        }
      }
    }
  }
}

void maxpool_forward(const double* x, int64_t n, int64_t c, int64_t h,
                     int64_t w, int64_t k, int64_t stride, int64_t pad,
                     double* out, int64_t* argmax) {
  const int64_t oh = conv_out_extent(h, k, stride, pad);
  const int64_t ow = conv_out_extent(w, k, stride, pad);
  const int64_t planes = n * c;
#pragma omp parallel for schedule(static)
  for (int64_t plane = 0; plane < planes; ++plane) {
    const double* src = x + plane * h * w;
    double* dst = out + plane * oh * ow;
    int64_t* amax = argmax + plane * oh * ow;
    for (int64_t oy = 0; oy < oh; ++oy) {
      for (int64_t ox = 0; ox < ow; ++ox) {
        double best = -std::numeric_limits<double>::infinity();
        int64_t best_idx = -1;
        for (int64_t ki = 0; ki < k; ++ki) {
          const int64_t iy = oy * stride - pad + ki;
          if (iy < 0 || iy >= h) continue;
          for (int64_t kj = 0; kj < k; ++kj) {
            const int64_t ix = ox * stride - pad + kj;
            if (ix < 0 || ix >= w) continue;
            const double v = src[iy * w + ix];
            if (v > best) {
              best = v;
              best_idx = plane * h * w + iy * w + ix;
            }
          }
        }
        dst[oy * ow + ox] = best;
        amax[oy * ow + ox] = best_idx;
      }
    }
  }
}

void maxpool_backward(const double* gout, const int64_t* argmax,
                      int64_t planes, int64_t out_per_plane, double* gin) {
  // Argmax indices stay inside their own plane, so planes are independent.
#pragma omp parallel for schedule(static)
  for (int64_t plane = 0; plane < planes; ++plane) {
    const int64_t base = plane * out_per_plane;
    for (int64_t i = 0; i < out_per_plane; ++i) {
      const int64_t idx = argmax[base + i];
      if (idx >= 0) gin[idx] += gout[base + i];
    }
  }
}

}  // namespace byol::kernels::omp
