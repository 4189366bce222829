#include "scalpgrid/gemm.hpp"

#ifdef SCALPGRID_USE_CBLAS
#include <cblas.h>
#else
#include <vector>
#endif

namespace scalpgrid {

#ifdef SCALPGRID_USE_CBLAS

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a,
          int lda, const double* b, int ldb, double beta, double* c, int ldc) {
  cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb, beta, c,
              ldc);
}

#else

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a,
          int lda, const double* b, int ldb, double beta, double* c, int ldc) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) c[i * ldc + j] *= beta;

  // i-k-j order keeps the inner loop contiguous in B and C.
  constexpr int kBlock = 64;
  for (int k0 = 0; k0 < k; k0 += kBlock) {
    const int k1 = k0 + kBlock < k ? k0 + kBlock : k;
    for (int i = 0; i < m; ++i) {
      for (int p = k0; p < k1; ++p) {
        const double av = alpha * (trans_a ? a[p * lda + i] : a[i * lda + p]);
        if (av == 0.0) continue;
        if (!trans_b) {
          const double* brow = b + static_cast<long>(p) * ldb;
          double* crow = c + static_cast<long>(i) * ldc;
          for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
        } else {
          double* crow = c + static_cast<long>(i) * ldc;
          for (int j = 0; j < n; ++j) crow[j] += av * b[j * ldb + p];
        }
      }
    }
  }
}

#endif

}  // namespace scalpgrid
