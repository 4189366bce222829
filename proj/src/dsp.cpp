#include "scalpgrid/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "scalpgrid/errors.hpp"
#include "scalpgrid/fft.hpp"

namespace scalpgrid {

double LeafSpectrum::leaf_energy(std::size_t j) const {
  double e = 0.0;
  for (double c : leaves[j]) e += c * c;
  return e;
}

double LeafSpectrum::total_energy() const {
  double e = 0.0;
  for (std::size_t j = 0; j < leaves.size(); ++j) e += leaf_energy(j);
  return e;
}

std::vector<double> bandpass(const std::vector<double>& signal, double lo_hz, double hi_hz,
                             double fs_hz) {
  if (!(lo_hz >= 0.0 && lo_hz < hi_hz && hi_hz <= fs_hz / 2.0))
    throw UsageError("bandpass: edges must satisfy 0 <= lo < hi <= fs/2");
  const std::size_t len = signal.size();
  if (len == 0) return {};

  // Reflection padding keeps filter ringing away from the analyzed span.
  const std::size_t pad = std::min<std::size_t>(len > 1 ? len - 1 : 0,
                                                static_cast<std::size_t>(2.0 * fs_hz));
  const std::size_t n = next_pow2(len + 2 * pad);
  std::vector<std::complex<double>> buf(n, {0.0, 0.0});
  for (std::size_t i = 0; i < pad; ++i) buf[i] = signal[pad - i];
  for (std::size_t i = 0; i < len; ++i) buf[pad + i] = signal[i];
  for (std::size_t i = 0; i < pad; ++i) buf[pad + len + i] = signal[len - 2 - i];

  fft_inplace(buf, false);

  const double half_width = 1.0;  // transition half-width in Hz
  const double pi = 3.14159265358979323846;
  auto gain = [&](double f) {
    double g = 1.0;
    if (lo_hz > 0.0) {
      if (f <= lo_hz - half_width) return 0.0;
      if (f < lo_hz + half_width)
        g *= 0.5 * (1.0 - std::cos(pi * (f - (lo_hz - half_width)) / (2.0 * half_width)));
    }
    if (hi_hz < fs_hz / 2.0) {
      if (f >= hi_hz + half_width) return 0.0;
      if (f > hi_hz - half_width)
        g *= 0.5 * (1.0 + std::cos(pi * (f - (hi_hz - half_width)) / (2.0 * half_width)));
    }
    return g;
  };

  for (std::size_t k = 0; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) * fs_hz / static_cast<double>(n);
    const double g = gain(f);
    buf[k] *= g;
    if (k != 0 && k != n / 2) buf[n - k] *= g;
  }

  fft_inplace(buf, true);

  std::vector<double> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = buf[pad + i].real();
  return out;
}

std::size_t window_count(std::size_t len, std::size_t size, std::size_t stride) {
  if (len < size) return 0;
  return (len - size) / stride + 1;
}

std::vector<Window> segment_windows(const Recording& recording, std::size_t size,
                                    std::size_t stride) {
  if (size == 0 || stride == 0) throw UsageError("segment: size and stride must be positive");
  const std::size_t len = recording.n_samples();
  if (len < size)
    throw DataError("segment: recording " + recording.subject_id + " has " +
                    std::to_string(len) + " samples, window needs " + std::to_string(size));
  const std::size_t count = window_count(len, size, stride);
  std::vector<Window> windows;
  windows.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    Window win;
    win.subject_id = recording.subject_id;
    win.label = recording.label;
    win.index = w;
    win.samples.reserve(recording.channels.size());
    const std::size_t start = w * stride;
    for (const auto& ch : recording.channels)
      win.samples.emplace_back(ch.begin() + start, ch.begin() + start + size);
    windows.push_back(std::move(win));
  }
  return windows;
}

namespace {

// One periodized analysis step: node -> (lowpass half, highpass half).
// Orthonormal for any even node length, so energy is conserved exactly.
void wpt_step(const double* x, std::size_t n, const WaveletFilter& w, double* out) {
  const std::size_t half = n / 2;
  const std::size_t taps = w.length();
  const double* h = w.lowpass.data();
  const double* g = w.highpass.data();
  // k values whose support 2k..2k+taps-1 stays inside the node
  const std::size_t unwrapped = (n >= taps) ? (n - taps) / 2 + 1 : 0;
  for (std::size_t k = 0; k < unwrapped; ++k) {
    const double* xs = x + 2 * k;
    double a = 0.0, d = 0.0;
    for (std::size_t m = 0; m < taps; ++m) {
      a += h[m] * xs[m];
      d += g[m] * xs[m];
    }
    out[k] = a;
    out[half + k] = d;
  }
  for (std::size_t k = unwrapped; k < half; ++k) {
    double a = 0.0, d = 0.0;
    for (std::size_t m = 0; m < taps; ++m) {
      const double v = x[(2 * k + m) % n];
      a += h[m] * v;
      d += g[m] * v;
    }
    out[k] = a;
    out[half + k] = d;
  }
}

}  // namespace

LeafSpectrum wpt_decompose(const std::vector<double>& channel_window, int depth,
                           const WaveletFilter& wavelet, double fs_hz) {
  const std::size_t n = channel_window.size();
  if (depth < 1) throw UsageError("wpt: depth must be at least 1");
  if (n == 0 || n % (std::size_t{1} << depth) != 0)
    throw UsageError("wpt: length " + std::to_string(n) + " not divisible by 2^" +
                     std::to_string(depth));

  std::vector<double> buf = channel_window;
  std::vector<double> tmp(n);
  // Level l holds 2^l natural-order nodes as contiguous segments.
  for (int level = 0; level < depth; ++level) {
    const std::size_t n_nodes = std::size_t{1} << level;
    const std::size_t node_len = n / n_nodes;
    for (std::size_t node = 0; node < n_nodes; ++node)
      wpt_step(buf.data() + node * node_len, node_len, wavelet, tmp.data() + node * node_len);
    std::swap(buf, tmp);
  }

  const std::size_t n_leaves = std::size_t{1} << depth;
  const std::size_t leaf_len = n / n_leaves;
  LeafSpectrum spectrum;
  spectrum.depth = depth;
  spectrum.fs_hz = fs_hz;
  spectrum.leaves.resize(n_leaves);
  for (std::size_t f = 0; f < n_leaves; ++f) {
    // Natural order -> frequency order is the binary-reflected Gray code:
    // the highpass branch mirrors its band, flipping child order.
    const std::size_t natural = f ^ (f >> 1);
    spectrum.leaves[f].assign(buf.begin() + natural * leaf_len,
                              buf.begin() + (natural + 1) * leaf_len);
  }
  return spectrum;
}

std::vector<double> band_energies(const LeafSpectrum& spectrum, const BandSpec& bands) {
  if (spectrum.fs_hz <= 0.0)
    throw UsageError("band energies: spectrum has no sampling rate attached");
  const double width = spectrum.leaf_width_hz();
  bands.validate(width);
  std::vector<double> energies;
  energies.reserve(bands.size());
  for (const Band& b : bands.bands) {
    const auto lo = static_cast<std::size_t>(std::llround(b.lo_hz / width));
    const auto hi = static_cast<std::size_t>(std::llround(b.hi_hz / width));
    if (hi > spectrum.leaves.size())
      throw UsageError("band energies: band '" + b.name + "' extends past Nyquist");
    double e = 0.0;
    for (std::size_t j = lo; j < hi; ++j) e += spectrum.leaf_energy(j);
    energies.push_back(e);
  }
  return energies;
}

std::vector<BandEnergyMatrix> featurize_recording(const Recording& recording,
                                                  const PipelineConfig& config,
                                                  const BandSpec& bands) {
  config.validate();
  const WaveletFilter wavelet = make_wavelet(config.wavelet);

  Recording filtered;
  filtered.subject_id = recording.subject_id;
  filtered.label = recording.label;
  filtered.fs_hz = recording.fs_hz;
  filtered.channel_names = recording.channel_names;
  filtered.channels.reserve(recording.channels.size());
  for (const auto& ch : recording.channels)
    filtered.channels.push_back(bandpass(ch, config.bp_lo_hz, config.bp_hi_hz, recording.fs_hz));

  const auto windows = segment_windows(filtered, config.window_size, config.window_stride);
  const int n_channels = static_cast<int>(recording.channels.size());
  const int n_bands = static_cast<int>(bands.size());

  std::vector<BandEnergyMatrix> matrices;
  matrices.reserve(windows.size());
  for (const Window& win : windows) {
    BandEnergyMatrix m;
    m.subject_id = win.subject_id;
    m.label = win.label;
    m.window_index = win.index;
    m.n_channels = n_channels;
    m.n_bands = n_bands;
    m.values.resize(static_cast<std::size_t>(n_channels) * n_bands);
    for (int c = 0; c < n_channels; ++c) {
      const LeafSpectrum spectrum =
          wpt_decompose(win.samples[c], config.wpt_depth, wavelet, recording.fs_hz);
      const std::vector<double> e = band_energies(spectrum, bands);
      for (int b = 0; b < n_bands; ++b) m.at(c, b) = e[b];
    }
    matrices.push_back(std::move(m));
  }
  return matrices;
}

void write_feature_dump(const std::string& path,
                        const std::vector<BandEnergyMatrix>& matrices,
                        const ElectrodeLayout& layout, const BandSpec& bands) {
  std::ofstream out(path);
  if (!out) throw DataError("feature dump: cannot write '" + path + "'");
  out << "subject_id,label,window";
  for (const Electrode& e : layout.entries)
    for (const Band& b : bands.bands) out << "," << e.name << "_" << b.name;
  out << "\n";
  out.precision(17);
  for (const BandEnergyMatrix& m : matrices) {
    out << m.subject_id << "," << m.label << "," << m.window_index;
    for (double v : m.values) out << "," << v;
    out << "\n";
  }
  if (!out) throw DataError("feature dump: write failure for '" + path + "'");
}

}  // namespace scalpgrid
