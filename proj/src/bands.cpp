#include "scalpgrid/bands.hpp"

#include <cmath>

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

void BandSpec::validate(double leaf_width_hz) const {
  if (bands.empty()) throw UsageError("band spec: no bands");
  double prev_hi = -1.0;
  for (const Band& b : bands) {
    if (!(b.lo_hz < b.hi_hz))
      throw UsageError("band spec: band '" + b.name + "' has lo_hz >= hi_hz");
    if (b.lo_hz < prev_hi)
      throw UsageError("band spec: band '" + b.name + "' overlaps or is out of order");
    for (double edge : {b.lo_hz, b.hi_hz}) {
      const double ratio = edge / leaf_width_hz;
      if (std::abs(ratio - std::round(ratio)) > 1e-9)
        throw UsageError("band spec: edge of band '" + b.name +
                         "' is not a multiple of the leaf width");
    }
    prev_hi = b.hi_hz;
  }
}

BandSpec default_band_spec() {
  BandSpec spec;
  spec.bands = {
      {"delta", 0.0, 4.0},
      {"theta", 4.0, 8.0},
      {"alpha", 8.0, 16.0},
      {"beta", 16.0, 32.0},
      {"gamma", 32.0, 52.0},
  };
  return spec;
}

}  // namespace scalpgrid
