#include "scalpgrid/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

namespace {

using cld = std::complex<long double>;

// Binomial coefficients as exact long doubles (all values here < 2^53).
long double binomial(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return std::floor(r + 0.5L);
}

cld horner(const std::vector<long double>& coeffs, cld x) {
  cld acc(0.0L, 0.0L);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// All complex roots by Durand-Kerner, refined with a few Newton steps.
std::vector<cld> poly_roots(const std::vector<long double>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<cld> roots(deg);
  cld seed(0.4L, 0.9L);
  cld p(1.0L, 0.0L);
  for (int i = 0; i < deg; ++i) {
    p *= seed;
    roots[i] = p;
  }
  const long double lead = coeffs.back();
  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0.0L;
    for (int i = 0; i < deg; ++i) {
      cld denom(lead, 0.0L);
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const cld step = horner(coeffs, roots[i]) / denom;
      roots[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-24L) break;
  }
  std::vector<long double> deriv(deg);
  for (int i = 1; i <= deg; ++i) deriv[i - 1] = coeffs[i] * static_cast<long double>(i);
  for (auto& r : roots)
    for (int it = 0; it < 4; ++it) {
      const cld d = horner(deriv, r);
      if (std::abs(d) == 0.0L) break;
      r -= horner(coeffs, r) / d;
    }
  return roots;
}

std::vector<cld> poly_mul(const std::vector<cld>& a, const std::vector<cld>& b) {
  std::vector<cld> out(a.size() + b.size() - 1, cld(0.0L, 0.0L));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

double orthonormality_defect(const std::vector<double>& h) {
  const int len = static_cast<int>(h.size());
  double worst = 0.0;
  for (int j = 0; 2 * j < len; ++j) {
    double dot = 0.0;
    for (int m = 0; m + 2 * j < len; ++m) dot += h[m] * h[m + 2 * j];
    worst = std::max(worst, std::abs(dot - (j == 0 ? 1.0 : 0.0)));
  }
  return worst;
}

std::vector<double> daubechies_scaling_filter(int n_moments) {
  if (n_moments < 1 || n_moments > 20)
    throw UsageError("wavelet: daubechies order must be in [1, 20]");
  const int n = n_moments;
  const long double sqrt2 = std::sqrt(2.0L);

  if (n == 1) return {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};

  // P(y) = sum_k C(n-1+k, k) y^k; |H(w)|^2 = 2 (1-y)^n P(y) with y=sin^2(w/2).
  std::vector<long double> p(n);
  for (int k = 0; k < n; ++k) p[k] = binomial(n - 1 + k, k);

  // Factor P through its y-roots; each maps to a z-plane pair {z, 1/z} via
  // y = (2 - z - 1/z)/4 and the minimum-phase member is kept.
  const std::vector<cld> y_roots = poly_roots(p);
  std::vector<cld> b{cld(1.0L, 0.0L)};
  for (const cld& y : y_roots) {
    const cld t = cld(2.0L, 0.0L) - 4.0L * y;  // z + 1/z
    const cld disc = std::sqrt(t * t - cld(4.0L, 0.0L));
    cld z = (t + disc) / 2.0L;
    if (std::abs(z) > 1.0L) z = (t - disc) / 2.0L;
    b = poly_mul(b, std::vector<cld>{-z, cld(1.0L, 0.0L)});
  }

  // h(z) = (1+z)^n * B(z), scaled so sum(h) = sqrt(2).
  std::vector<cld> binom_poly(n + 1);
  for (int k = 0; k <= n; ++k) binom_poly[k] = cld(binomial(n, k), 0.0L);
  std::vector<cld> full = poly_mul(binom_poly, b);

  std::vector<long double> h(full.size());
  long double sum = 0.0L;
  for (std::size_t i = 0; i < full.size(); ++i) {
    h[i] = full[i].real();
    sum += h[i];
  }
  const long double scale = sqrt2 / sum;
  for (auto& v : h) v *= scale;

  std::vector<double> out(h.begin(), h.end());

  // Fix time orientation to minimum phase (energy front-loaded).
  double centroid = 0.0;
  for (std::size_t m = 0; m < out.size(); ++m) centroid += static_cast<double>(m) * out[m] * out[m];
  if (centroid > static_cast<double>(out.size() - 1) / 2.0)
    std::reverse(out.begin(), out.end());

  if (orthonormality_defect(out) > 1e-10)
    throw NumericError("wavelet: db" + std::to_string(n) +
                       " factorization lost orthonormality");
  return out;
}

WaveletFilter make_wavelet(const std::string& name) {
  int order = 0;
  if (name == "haar") {
    order = 1;
  } else if (name.size() > 2 && name.compare(0, 2, "db") == 0) {
    char* end = nullptr;
    const long v = std::strtol(name.c_str() + 2, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 20)
      throw UsageError("wavelet: unknown family '" + name + "'");
    order = static_cast<int>(v);
  } else {
    throw UsageError("wavelet: unknown family '" + name + "'");
  }

  WaveletFilter f;
  f.name = name;
  f.lowpass = daubechies_scaling_filter(order);
  const std::size_t len = f.lowpass.size();
  f.highpass.resize(len);
  for (std::size_t m = 0; m < len; ++m)
    f.highpass[m] = (m % 2 == 0 ? 1.0 : -1.0) * f.lowpass[len - 1 - m];
  return f;
}

}  // namespace scalpgrid
