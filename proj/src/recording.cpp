#include "scalpgrid/recording.hpp"

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

void Recording::validate(const ElectrodeLayout& layout, std::size_t min_samples) const {
  if (channels.size() != layout.entries.size())
    throw DataError("recording " + subject_id + ": expected " +
                    std::to_string(layout.entries.size()) + " channels, got " +
                    std::to_string(channels.size()));
  if (channel_names.size() != channels.size())
    throw DataError("recording " + subject_id + ": channel name count mismatch");
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channel_names[i] != layout.entries[i].name)
      throw DataError("recording " + subject_id + ": channel " + std::to_string(i) +
                      " is '" + channel_names[i] + "', layout expects '" +
                      layout.entries[i].name + "'");
    if (channels[i].size() != channels[0].size())
      throw DataError("recording " + subject_id + ": ragged channel lengths (channel " +
                      std::to_string(i) + ")");
  }
  if (n_samples() < min_samples)
    throw DataError("recording " + subject_id + ": " + std::to_string(n_samples()) +
                    " samples, need at least " + std::to_string(min_samples));
  if (label != kControlLabel && label != kPatientLabel)
    throw DataError("recording " + subject_id + ": label must be 0 or 1");
  if (fs_hz <= 0.0)
    throw DataError("recording " + subject_id + ": non-positive sampling rate");
}

}  // namespace scalpgrid
