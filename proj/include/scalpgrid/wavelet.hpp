#pragma once

#include <string>
#include <vector>

namespace scalpgrid {

// Orthonormal conjugate-quadrature analysis pair. highpass[m] is derived from
// lowpass by the quadrature-mirror rule g[m] = (-1)^m h[L-1-m].
struct WaveletFilter {
  std::string name;
  std::vector<double> lowpass;
  std::vector<double> highpass;

  std::size_t length() const { return lowpass.size(); }
};

// Daubechies scaling filter with n_moments vanishing moments (2*n_moments
// taps, minimum phase). Computed by spectral factorization of the binomial
// halfband polynomial; supported for n_moments in [1, 20].
std::vector<double> daubechies_scaling_filter(int n_moments);

// Filter factory: "haar" or "dbN" with N in [1, 20]. Throws UsageError on
// unknown names and NumericError if factorization loses orthonormality.
WaveletFilter make_wavelet(const std::string& name);

// Max |sum_m h[m] h[m+2j] - delta_j0| over all double shifts; 0 for an
// exactly orthonormal filter.
double orthonormality_defect(const std::vector<double>& h);

}  // namespace scalpgrid
