#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scalpgrid/bands.hpp"
#include "scalpgrid/config.hpp"
#include "scalpgrid/recording.hpp"
#include "scalpgrid/wavelet.hpp"

namespace scalpgrid {

// One analysis window cut from a recording, all channels.
struct Window {
  std::string subject_id;
  int label = 0;
  std::size_t index = 0;
  std::vector<std::vector<double>> samples;  // [channel][sample]
};

// Wavelet-packet leaves in ascending frequency order: leaf j covers
// [j*w, (j+1)*w) Hz with w = fs / 2^(depth+1). Reversing the leaf list
// recovers the highest-to-lowest presentation convention.
struct LeafSpectrum {
  int depth = 0;
  double fs_hz = 0.0;
  std::vector<std::vector<double>> leaves;

  double leaf_width_hz() const { return fs_hz / static_cast<double>(2 << depth); }
  double leaf_energy(std::size_t j) const;
  double total_energy() const;
};

// Per-window channels-by-bands energy matrix, row-major, band order
// delta..gamma.
struct BandEnergyMatrix {
  std::string subject_id;
  int label = 0;
  std::size_t window_index = 0;
  int n_channels = 0;
  int n_bands = 0;
  std::vector<double> values;

  double at(int channel, int band) const { return values[channel * n_bands + band]; }
  double& at(int channel, int band) { return values[channel * n_bands + band]; }
};

// Zero-phase band-pass via FFT with raised-cosine transitions (half-width
// 1 Hz on each edge). Output has the input's length; the signal is
// reflection-padded before the transform to suppress boundary ringing.
// lo_hz = 0 disables the high-pass edge; hi_hz = fs/2 the low-pass edge.
std::vector<double> bandpass(const std::vector<double>& signal, double lo_hz, double hi_hz,
                             double fs_hz);

// floor((len - size)/stride) + 1 for len >= size, else 0.
std::size_t window_count(std::size_t len, std::size_t size, std::size_t stride);

// Windows starting at 0, stride, 2*stride, ...; throws DataError if the
// recording is shorter than one window.
std::vector<Window> segment_windows(const Recording& recording, std::size_t size,
                                    std::size_t stride);

// Full dyadic wavelet packet tree to `depth` with periodic boundary handling,
// leaves returned in frequency order. Length must be divisible by 2^depth.
LeafSpectrum wpt_decompose(const std::vector<double>& channel_window, int depth,
                           const WaveletFilter& wavelet, double fs_hz = 1024.0);

// Sum of squared coefficients of the leaves inside each band. Band edges must
// sit on the leaf grid.
std::vector<double> band_energies(const LeafSpectrum& spectrum, const BandSpec& bands);

// bandpass -> segment -> per-channel WPT -> band energies; one matrix per
// window, rows in layout/channel order, columns delta..gamma.
std::vector<BandEnergyMatrix> featurize_recording(const Recording& recording,
                                                  const PipelineConfig& config,
                                                  const BandSpec& bands);

// Flat CSV dump: subject_id, label, window, then channel-major energies.
void write_feature_dump(const std::string& path,
                        const std::vector<BandEnergyMatrix>& matrices,
                        const ElectrodeLayout& layout, const BandSpec& bands);

}  // namespace scalpgrid
