#include "scalpgrid/knn.hpp"

#include <algorithm>
#include <vector>

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

int knn_predict(const Dataset& train, const double* query, const KnnConfig& config) {
  const std::size_t n = train.size();
  if (config.k < 1) throw UsageError("knn: k must be at least 1");
  if (n < static_cast<std::size_t>(config.k))
    throw DataError("knn: fewer training samples than k");

  const std::size_t dim = train.dim();
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* x = train.sample(i);
    double d2 = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = x[j] - query[j];
      d2 += d * d;
    }
    dist[i] = {d2, i};
  }
  const auto k = static_cast<std::size_t>(config.k);
  std::partial_sort(dist.begin(), dist.begin() + k, dist.end());  // pair order = (d2, index)

  int votes = 0;
  for (std::size_t i = 0; i < k; ++i) votes += train.labels[dist[i].second];
  return 2 * votes > config.k ? 1 : 0;
}

}  // namespace scalpgrid
