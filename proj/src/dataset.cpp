#include "scalpgrid/dataset.hpp"

#include <cmath>

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

void Dataset::add(const std::vector<double>& features, int label,
                  const std::string& subject_id) {
  if (features.size() != dim())
    throw DataError("dataset: sample size " + std::to_string(features.size()) +
                    " does not match declared shape " + std::to_string(dim()));
  data.insert(data.end(), features.begin(), features.end());
  labels.push_back(label);
  subject_ids.push_back(subject_id);
}

Standardization standardize_fit(const Dataset& train) {
  if (train.size() == 0) throw DataError("standardize: empty training set");
  const std::size_t dim = train.dim();
  const double n = static_cast<double>(train.size());
  Standardization stats;
  stats.mean.assign(dim, 0.0);
  stats.stddev.assign(dim, 0.0);
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double* x = train.sample(i);
    for (std::size_t j = 0; j < dim; ++j) stats.mean[j] += x[j];
  }
  for (std::size_t j = 0; j < dim; ++j) stats.mean[j] /= n;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double* x = train.sample(i);
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = x[j] - stats.mean[j];
      stats.stddev[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    stats.stddev[j] = std::sqrt(stats.stddev[j] / n);
    if (stats.stddev[j] < 1e-8) stats.stddev[j] = 1e-8;
  }
  return stats;
}

void standardize_apply(const Standardization& stats, Dataset& dataset) {
  const std::size_t dim = dataset.dim();
  if (stats.mean.size() != dim) throw DataError("standardize: shape mismatch");
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    double* x = dataset.data.data() + i * dim;
    for (std::size_t j = 0; j < dim; ++j) x[j] = (x[j] - stats.mean[j]) / stats.stddev[j];
  }
}

std::vector<double> standardize_apply(const Standardization& stats,
                                      const std::vector<double>& sample) {
  if (stats.mean.size() != sample.size()) throw DataError("standardize: shape mismatch");
  std::vector<double> out(sample.size());
  for (std::size_t j = 0; j < sample.size(); ++j)
    out[j] = (sample[j] - stats.mean[j]) / stats.stddev[j];
  return out;
}

}  // namespace scalpgrid
