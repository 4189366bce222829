#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scalpgrid/layout.hpp"

namespace scalpgrid {

inline constexpr int kControlLabel = 0;
inline constexpr int kPatientLabel = 1;

// One subject's multichannel recording. Channels follow layout order exactly.
struct Recording {
  std::string subject_id;
  int label = kControlLabel;
  double fs_hz = 1024.0;
  std::vector<std::string> channel_names;
  std::vector<std::vector<double>> channels;  // [channel][sample]

  std::size_t n_samples() const { return channels.empty() ? 0 : channels[0].size(); }

  // Throws DataError unless there are exactly 34 equal-length channels of at
  // least min_samples, with names matching the layout in order.
  void validate(const ElectrodeLayout& layout, std::size_t min_samples) const;
};

}  // namespace scalpgrid
