#include "scalpgrid/cohort.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "scalpgrid/errors.hpp"
#include "scalpgrid/rng.hpp"

namespace scalpgrid {

namespace fs = std::filesystem;

void CohortSpec::validate(const BandSpec& bands, const ElectrodeLayout& layout) const {
  if (n_subjects < 1) throw UsageError("cohort: n_subjects must be positive");
  if (n_patients < 0 || n_patients > n_subjects)
    throw UsageError("cohort: n_patients must lie in [0, n_subjects]");
  if (fs_hz <= 0.0) throw UsageError("cohort: fs_hz must be positive");
  if (duration_s * fs_hz < 5120.0)
    throw UsageError("cohort: duration too short for one 5120-sample window");
  if (band_amplitudes.size() != bands.size())
    throw UsageError("cohort: need one amplitude per band");
  if (!(effect.energy_ratio > 1.0))
    throw UsageError("cohort: effect energy_ratio must exceed 1");
  if (!(amplitude_jitter >= 0.0 && amplitude_jitter < 1.0))
    throw UsageError("cohort: amplitude_jitter must lie in [0, 1)");
  bool band_known = false;
  for (const Band& b : bands.bands) band_known |= (b.name == effect.band);
  if (!band_known) throw UsageError("cohort: effect band '" + effect.band + "' not in band spec");
  for (const std::string& e : effect.electrodes)
    if (layout.index_of(e) < 0)
      throw UsageError("cohort: effect electrode '" + e + "' not in layout");
}

namespace {

std::string subject_name(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "S%03d", index + 1);
  return buf;
}

// Adds a * sin(w t + phi) for t = 0..n-1 by complex rotation, re-anchored
// periodically to stop drift.
void add_sinusoid(std::vector<double>& x, double amplitude, double omega, double phase) {
  const std::size_t n = x.size();
  const double cw = std::cos(omega), sw = std::sin(omega);
  double s = 0.0, c = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    if (t % 8192 == 0) {
      const double angle = std::fmod(omega * static_cast<double>(t) + phase,
                                     2.0 * 3.14159265358979323846);
      s = std::sin(angle);
      c = std::cos(angle);
    }
    x[t] += amplitude * s;
    const double s2 = s * cw + c * sw;
    c = c * cw - s * sw;
    s = s2;
  }
}

}  // namespace

Recording generate_subject(const CohortSpec& spec, const ElectrodeLayout& layout,
                           const BandSpec& bands, int subject_index) {
  spec.validate(bands, layout);
  if (subject_index < 0 || subject_index >= spec.n_subjects)
    throw UsageError("cohort: subject index out of range");

  Rng rng(substream_seed(spec.seed, static_cast<std::uint64_t>(subject_index)));
  const auto n_samples = static_cast<std::size_t>(std::llround(spec.duration_s * spec.fs_hz));
  const int n_channels = static_cast<int>(layout.entries.size());
  const int n_bands = static_cast<int>(bands.size());
  constexpr int kComponents = 3;

  Recording rec;
  rec.subject_id = subject_name(subject_index);
  rec.label = subject_index < spec.n_patients ? kPatientLabel : kControlLabel;
  rec.fs_hz = spec.fs_hz;

  // Per-subject, per-band gain shared across channels, like global power
  // fluctuation between individuals.
  std::vector<double> band_gain(n_bands);
  for (int b = 0; b < n_bands; ++b)
    band_gain[b] = rng.uniform(1.0 - spec.amplitude_jitter, 1.0 + spec.amplitude_jitter);

  int effect_band = -1;
  for (int b = 0; b < n_bands; ++b)
    if (bands[b].name == spec.effect.band) effect_band = b;

  std::vector<bool> effect_channel(n_channels, false);
  for (const std::string& e : spec.effect.electrodes) effect_channel[layout.index_of(e)] = true;

  const double component_scale = std::sqrt(2.0 / kComponents);
  rec.channels.resize(n_channels);
  rec.channel_names.reserve(n_channels);
  for (int c = 0; c < n_channels; ++c) {
    rec.channel_names.push_back(layout.entries[c].name);
    std::vector<double>& x = rec.channels[c];
    x.assign(n_samples, 0.0);
    for (int b = 0; b < n_bands; ++b) {
      double amplitude = spec.band_amplitudes[b] * band_gain[b];
      if (rec.label == kPatientLabel && b == effect_band && effect_channel[c])
        amplitude *= std::sqrt(spec.effect.energy_ratio);
      const double band_width = bands[b].hi_hz - bands[b].lo_hz;
      for (int j = 0; j < kComponents; ++j) {
        const double f = bands[b].lo_hz + (j + 0.5) * band_width / kComponents;
        const double omega = 2.0 * 3.14159265358979323846 * f / spec.fs_hz;
        const double phase = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        add_sinusoid(x, amplitude * component_scale, omega, phase);
      }
    }
    if (spec.white_noise_sigma > 0.0)
      for (std::size_t t = 0; t < n_samples; ++t)
        x[t] += spec.white_noise_sigma * rng.gaussian();
  }
  return rec;
}

std::vector<Recording> generate_synthetic_cohort(const CohortSpec& spec,
                                                 const ElectrodeLayout& layout,
                                                 const BandSpec& bands) {
  spec.validate(bands, layout);
  std::vector<Recording> cohort;
  cohort.reserve(spec.n_subjects);
  for (int s = 0; s < spec.n_subjects; ++s)
    cohort.push_back(generate_subject(spec, layout, bands, s));
  return cohort;
}

void save_recording(const Recording& recording, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("recording: cannot write '" + path + "'");
  for (std::size_t c = 0; c < recording.channel_names.size(); ++c)
    out << (c ? "," : "") << recording.channel_names[c];
  out << "\n";
  const std::size_t n = recording.n_samples();
  char buf[40];
  std::string line;
  for (std::size_t t = 0; t < n; ++t) {
    line.clear();
    for (std::size_t c = 0; c < recording.channels.size(); ++c) {
      if (c) line += ',';
      std::snprintf(buf, sizeof(buf), "%.17g", recording.channels[c][t]);
      line += buf;
    }
    line += '\n';
    out << line;
  }
  if (!out) throw DataError("recording: write failure for '" + path + "'");
}

Recording load_recording(const std::string& path, const std::string& subject_id, int label,
                         double expected_fs_hz, const ElectrodeLayout& layout) {
  std::ifstream in(path);
  if (!in) throw DataError("recording: cannot open '" + path + "'");

  Recording rec;
  rec.subject_id = subject_id;
  rec.label = label;
  rec.fs_hz = expected_fs_hz;

  std::string line;
  if (!std::getline(in, line)) throw DataError("recording: empty file '" + path + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::istringstream header(line);
    std::string name;
    while (std::getline(header, name, ',')) rec.channel_names.push_back(name);
  }
  const std::size_t n_channels = rec.channel_names.size();
  if (n_channels != layout.entries.size())
    throw DataError("recording '" + path + "': expected " +
                    std::to_string(layout.entries.size()) + " channels, found " +
                    std::to_string(n_channels));
  for (std::size_t c = 0; c < n_channels; ++c)
    if (rec.channel_names[c] != layout.entries[c].name)
      throw DataError("recording '" + path + "': channel '" + rec.channel_names[c] +
                      "' does not match layout entry '" + layout.entries[c].name + "'");

  rec.channels.assign(n_channels, {});
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t start = 0, c = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string cell = line.substr(start, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - start);
      if (c >= n_channels)
        throw DataError("recording '" + path + "': too many values at line " +
                        std::to_string(line_no));
      try {
        rec.channels[c].push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw DataError("recording '" + path + "': bad value at line " +
                        std::to_string(line_no));
      }
      ++c;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (c != n_channels)
      throw DataError("recording '" + path + "': ragged row at line " +
                      std::to_string(line_no) + " (" + std::to_string(c) + " of " +
                      std::to_string(n_channels) + " values)");
  }
  rec.validate(layout, 1);
  return rec;
}

Cohort cohort_from_spec(const CohortSpec& spec, const ElectrodeLayout& layout,
                        const BandSpec& bands) {
  spec.validate(bands, layout);
  Cohort cohort;
  cohort.fs_hz = spec.fs_hz;
  for (int s = 0; s < spec.n_subjects; ++s)
    cohort.subjects.push_back(
        {subject_name(s), s < spec.n_patients ? kPatientLabel : kControlLabel});
  cohort.load = [spec, layout, bands](std::size_t index) {
    return generate_subject(spec, layout, bands, static_cast<int>(index));
  };
  return cohort;
}

Cohort cohort_from_recordings(std::vector<Recording> recordings) {
  auto shared = std::make_shared<std::vector<Recording>>(std::move(recordings));
  Cohort cohort;
  if (!shared->empty()) cohort.fs_hz = (*shared)[0].fs_hz;
  for (const Recording& r : *shared) cohort.subjects.push_back({r.subject_id, r.label});
  cohort.load = [shared](std::size_t index) { return (*shared)[index]; };
  return cohort;
}

Cohort cohort_from_manifest(const std::string& manifest_path, const ElectrodeLayout& layout) {
  std::ifstream in(manifest_path);
  if (!in) throw DataError("manifest: cannot open '" + manifest_path + "'");
  const fs::path base = fs::path(manifest_path).parent_path();

  Cohort cohort;
  auto paths = std::make_shared<std::vector<std::string>>();
  std::string line;
  bool header_seen = false;
  double fs = 0.0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "subject_id,label,fs_hz,path")
        throw DataError("manifest: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string id, label_s, fs_s, rel;
    if (!std::getline(ss, id, ',') || !std::getline(ss, label_s, ',') ||
        !std::getline(ss, fs_s, ',') || !std::getline(ss, rel))
      throw DataError("manifest: parse failure at line " + std::to_string(line_no));
    int label = 0;
    double row_fs = 0.0;
    try {
      label = std::stoi(label_s);
      row_fs = std::stod(fs_s);
    } catch (const std::exception&) {
      throw DataError("manifest: bad numeric field at line " + std::to_string(line_no));
    }
    if (label != kControlLabel && label != kPatientLabel)
      throw DataError("manifest: label must be 0 or 1 at line " + std::to_string(line_no));
    if (fs == 0.0) fs = row_fs;
    if (row_fs != fs)
      throw DataError("manifest: mixed sampling rates at line " + std::to_string(line_no));
    cohort.subjects.push_back({id, label});
    paths->push_back((base / rel).string());
  }
  if (cohort.subjects.empty()) throw DataError("manifest: no subjects in '" + manifest_path + "'");
  cohort.fs_hz = fs;

  auto meta = std::make_shared<std::vector<SubjectEntry>>(cohort.subjects);
  cohort.load = [paths, meta, fs, layout](std::size_t index) {
    return load_recording((*paths)[index], (*meta)[index].subject_id, (*meta)[index].label, fs,
                          layout);
  };
  return cohort;
}

void write_cohort(const CohortSpec& spec, const ElectrodeLayout& layout, const BandSpec& bands,
                  const std::string& out_dir) {
  spec.validate(bands, layout);
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  std::ostringstream manifest;
  manifest << "subject_id,label,fs_hz,path\n";
  for (int s = 0; s < spec.n_subjects; ++s) {
    const Recording rec = generate_subject(spec, layout, bands, s);
    const std::string rel = rec.subject_id + ".csv";
    save_recording(rec, (dir / rel).string());
    manifest << rec.subject_id << "," << rec.label << "," << spec.fs_hz << "," << rel << "\n";
  }
  std::ofstream out(dir / "manifest.csv");
  if (!out) throw DataError("manifest: cannot write under '" + out_dir + "'");
  out << manifest.str();
  if (!out) throw DataError("manifest: write failure under '" + out_dir + "'");
}

}  // namespace scalpgrid
