#pragma once

#include <cstdint>
#include <cstddef>

namespace scalpgrid {

struct KnnConfig {
  int k = 3;  // odd recommended for binary voting
};

struct SvmConfig {
  double sigma = 0.4;      // RBF width in K = exp(-|x-y|^2 / (2 sigma^2))
  bool gamma_form = false; // alternative K = exp(-gamma |x-y|^2) with gamma = sigma
  double c = 1.0;          // box constraint
  double tolerance = 1e-3; // KKT tolerance
  int max_passes = 200;    // full SMO sweeps before giving up
};

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::size_t batch_size = 32;
  int max_epochs = 100;
  int patience = 8;          // epochs without validation improvement before stopping
  double min_delta = 1e-4;   // smallest validation-loss drop that counts as improvement
  std::uint64_t seed = 0;
};

}  // namespace scalpgrid
