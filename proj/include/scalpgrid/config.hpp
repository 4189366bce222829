#pragma once

#include <cstdint>
#include <string>

#include "scalpgrid/classifier_config.hpp"

namespace scalpgrid {

enum class TensorModel { concat, grid };
enum class InterpMethod { idw_nn, idw_zero, nearest, linear_barycentric, cubic_spline };
enum class ClassifierKind { cnn, svm, knn };

std::string to_string(TensorModel m);
std::string to_string(InterpMethod m);
std::string to_string(ClassifierKind c);
TensorModel tensor_model_from_string(const std::string& s);
InterpMethod interp_method_from_string(const std::string& s);
ClassifierKind classifier_from_string(const std::string& s);

// Full experiment configuration. Every run serializes the resolved copy next
// to its outputs so results can be reproduced bit-exactly.
struct PipelineConfig {
  std::size_t window_size = 5120;
  std::size_t window_stride = 5120;
  std::string wavelet = "db16";
  int wpt_depth = 7;
  double bp_lo_hz = 1.0;
  double bp_hi_hz = 50.0;
  TensorModel model = TensorModel::grid;
  InterpMethod interp = InterpMethod::idw_nn;
  double d_max = 4.0;
  ClassifierKind classifier = ClassifierKind::cnn;
  double subject_threshold = 0.45;
  int folds = 8;
  std::uint64_t seed = 7;

  KnnConfig knn;
  SvmConfig svm;
  TrainConfig train;

  void validate() const;  // throws UsageError

  // Canonical `key=value` rendering of every field, stable across runs.
  std::string canonical_string() const;

  // FNV-1a 64-bit hash of canonical_string(), as 16 hex digits.
  std::string fingerprint() const;

  // Hash of only the fields that determine band-energy features (windowing,
  // filtering, wavelet). Sweeps that share these reuse cached features.
  std::string feature_fingerprint() const;
};

std::uint64_t fnv1a64(const std::string& s);

}  // namespace scalpgrid
