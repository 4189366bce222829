#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace scalpgrid {

// Homogeneous sample collection for the classifiers. Samples are stored
// flattened; (channels, height, width) gives the logical tensor shape the
// CNN consumes, channel-major.
struct Dataset {
  int channels = 1;
  int height = 1;
  int width = 1;
  std::vector<double> data;  // n * dim, row-major
  std::vector<int> labels;
  std::vector<std::string> subject_ids;

  std::size_t dim() const {
    return static_cast<std::size_t>(channels) * height * width;
  }
  std::size_t size() const { return labels.size(); }
  const double* sample(std::size_t i) const { return data.data() + i * dim(); }

  void add(const std::vector<double>& features, int label, const std::string& subject_id);
};

// Per-feature mean and stddev, fitted on training data only.
struct Standardization {
  std::vector<double> mean;
  std::vector<double> stddev;  // floored at 1e-8
};

Standardization standardize_fit(const Dataset& train);
void standardize_apply(const Standardization& stats, Dataset& dataset);
std::vector<double> standardize_apply(const Standardization& stats,
                                      const std::vector<double>& sample);

}  // namespace scalpgrid
