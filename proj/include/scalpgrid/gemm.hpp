#pragma once

namespace scalpgrid {

// C[m x n] = alpha * op(A) * op(B) + beta * C, all row-major. Backed by CBLAS
// when available, otherwise a blocked fallback.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a,
          int lda, const double* b, int ldb, double beta, double* c, int ldc);

}  // namespace scalpgrid
