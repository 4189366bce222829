#pragma once

#include <string>
#include <vector>

namespace scalpgrid {

// Half-open frequency band [lo_hz, hi_hz).
struct Band {
  std::string name;
  double lo_hz = 0.0;
  double hi_hz = 0.0;
};

// Ordered set of analysis bands. Edges must sit on the wavelet-packet leaf
// grid so each band is an exact union of leaves.
struct BandSpec {
  std::vector<Band> bands;

  std::size_t size() const { return bands.size(); }
  const Band& operator[](std::size_t i) const { return bands[i]; }

  // Throws UsageError unless bands are non-empty, ascending, disjoint, and
  // every edge is a multiple of leaf_width_hz.
  void validate(double leaf_width_hz) const;
};

// The five canonical EEG bands: delta [0,4), theta [4,8), alpha [8,16),
// beta [16,32), gamma [32,52) Hz.
BandSpec default_band_spec();

inline constexpr int kNumBands = 5;

}  // namespace scalpgrid
