#pragma once

#include "scalpgrid/classifier_config.hpp"
#include "scalpgrid/dataset.hpp"

namespace scalpgrid {

// Majority vote over the k nearest training samples by Euclidean distance.
// Distance ties break toward the lower sample index; vote ties (possible only
// for even k) toward class 0.
int knn_predict(const Dataset& train, const double* query, const KnnConfig& config);

}  // namespace scalpgrid
