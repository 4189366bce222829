#pragma once

#include <string>
#include <vector>

namespace scalpgrid {

struct Electrode {
  std::string name;
  int row = 0;
  int col = 0;
};

inline constexpr int kNumElectrodes = 34;
inline constexpr int kGridSize = 15;

// 34 named electrodes pinned to integer pixels of a 15x15 scalp raster,
// row 0 frontal, row 14 occipital. Immutable after validation.
struct ElectrodeLayout {
  std::vector<Electrode> entries;
  int grid_height = kGridSize;
  int grid_width = kGridSize;

  // Throws DataError unless there are exactly 34 entries with unique names,
  // distinct pixels, and coordinates inside the grid.
  void validate() const;

  // Index of a named electrode, or -1.
  int index_of(const std::string& name) const;
};

// Built-in montage. The published electrode map is not machine-readable, so
// this is a representative 34-channel layout (frontal rows near 0, occipital
// near 14), not a measured one; experiments should treat it as configuration.
ElectrodeLayout default_layout();

// Layout file format: one `name,row,col` line per electrode, `#` comments and
// blank lines ignored, exactly 34 data lines.
ElectrodeLayout load_layout(const std::string& path);
void save_layout(const ElectrodeLayout& layout, const std::string& path);

}  // namespace scalpgrid
