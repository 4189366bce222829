#include "scalpgrid/config.hpp"

#include <cstdio>
#include <sstream>

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

std::string to_string(TensorModel m) {
  return m == TensorModel::concat ? "concat" : "grid";
}

std::string to_string(InterpMethod m) {
  switch (m) {
    case InterpMethod::idw_nn: return "idw-nn";
    case InterpMethod::idw_zero: return "idw-zero";
    case InterpMethod::nearest: return "nearest";
    case InterpMethod::linear_barycentric: return "linear-barycentric";
    case InterpMethod::cubic_spline: return "cubic-spline";
  }
  return "?";
}

std::string to_string(ClassifierKind c) {
  switch (c) {
    case ClassifierKind::cnn: return "cnn";
    case ClassifierKind::svm: return "svm";
    case ClassifierKind::knn: return "knn";
  }
  return "?";
}

TensorModel tensor_model_from_string(const std::string& s) {
  if (s == "concat") return TensorModel::concat;
  if (s == "grid") return TensorModel::grid;
  throw UsageError("unknown tensor model '" + s + "' (concat|grid)");
}

InterpMethod interp_method_from_string(const std::string& s) {
  if (s == "idw-nn" || s == "idw_nn") return InterpMethod::idw_nn;
  if (s == "idw-zero" || s == "idw_zero") return InterpMethod::idw_zero;
  if (s == "nearest") return InterpMethod::nearest;
  if (s == "linear-barycentric" || s == "linear_barycentric" || s == "linear")
    return InterpMethod::linear_barycentric;
  if (s == "cubic-spline" || s == "cubic_spline" || s == "cubic")
    return InterpMethod::cubic_spline;
  throw UsageError("unknown interpolation method '" + s +
                   "' (idw-nn|idw-zero|nearest|linear-barycentric|cubic-spline)");
}

ClassifierKind classifier_from_string(const std::string& s) {
  if (s == "cnn") return ClassifierKind::cnn;
  if (s == "svm") return ClassifierKind::svm;
  if (s == "knn") return ClassifierKind::knn;
  throw UsageError("unknown classifier '" + s + "' (cnn|svm|knn)");
}

void PipelineConfig::validate() const {
  if (window_size == 0) throw UsageError("config: window_size must be positive");
  if (window_stride == 0) throw UsageError("config: window_stride must be positive");
  if (wpt_depth < 1 || wpt_depth > 20) throw UsageError("config: wpt_depth out of range");
  if (window_size % (std::size_t{1} << wpt_depth) != 0)
    throw UsageError("config: window_size must be a multiple of 2^wpt_depth");
  if (!(subject_threshold > 0.0 && subject_threshold < 1.0))
    throw UsageError("config: subject_threshold must lie in (0, 1)");
  if (folds < 2) throw UsageError("config: folds must be at least 2");
  if (!(bp_lo_hz >= 0.0 && bp_lo_hz < bp_hi_hz))
    throw UsageError("config: band-pass edges must satisfy 0 <= lo < hi");
  if (d_max <= 0.0) throw UsageError("config: d_max must be positive");
  if (knn.k < 1) throw UsageError("config: knn k must be at least 1");
  if (svm.sigma <= 0.0 || svm.c <= 0.0) throw UsageError("config: svm sigma and c must be positive");
  if (train.batch_size < 1) throw UsageError("config: batch_size must be at least 1");
  if (train.patience >= train.max_epochs)
    throw UsageError("config: patience must be smaller than max_epochs");
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string PipelineConfig::canonical_string() const {
  std::ostringstream os;
  os << "window_size=" << window_size << ";window_stride=" << window_stride
     << ";wavelet=" << wavelet << ";wpt_depth=" << wpt_depth
     << ";bp_lo_hz=" << fmt_double(bp_lo_hz) << ";bp_hi_hz=" << fmt_double(bp_hi_hz)
     << ";model=" << to_string(model) << ";interp=" << to_string(interp)
     << ";d_max=" << fmt_double(d_max) << ";classifier=" << to_string(classifier)
     << ";subject_threshold=" << fmt_double(subject_threshold) << ";folds=" << folds
     << ";seed=" << seed << ";knn.k=" << knn.k << ";svm.sigma=" << fmt_double(svm.sigma)
     << ";svm.gamma_form=" << (svm.gamma_form ? 1 : 0) << ";svm.c=" << fmt_double(svm.c)
     << ";svm.tolerance=" << fmt_double(svm.tolerance) << ";svm.max_passes=" << svm.max_passes
     << ";train.learning_rate=" << fmt_double(train.learning_rate)
     << ";train.beta1=" << fmt_double(train.beta1) << ";train.beta2=" << fmt_double(train.beta2)
     << ";train.epsilon=" << fmt_double(train.epsilon)
     << ";train.batch_size=" << train.batch_size << ";train.max_epochs=" << train.max_epochs
     << ";train.patience=" << train.patience
     << ";train.min_delta=" << fmt_double(train.min_delta);
  return os.str();
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string PipelineConfig::fingerprint() const { return hex16(fnv1a64(canonical_string())); }

std::string PipelineConfig::feature_fingerprint() const {
  std::ostringstream os;
  os << "window_size=" << window_size << ";window_stride=" << window_stride
     << ";wavelet=" << wavelet << ";wpt_depth=" << wpt_depth
     << ";bp_lo_hz=" << fmt_double(bp_lo_hz) << ";bp_hi_hz=" << fmt_double(bp_hi_hz);
  return hex16(fnv1a64(os.str()));
}

}  // namespace scalpgrid
