#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scalpgrid/bands.hpp"
#include "scalpgrid/layout.hpp"
#include "scalpgrid/recording.hpp"

namespace scalpgrid {

// Patient/control contrast injected into a synthetic cohort: the named band's
// components at the chosen electrodes are scaled so the expected band energy
// is energy_ratio times the control expectation.
struct SubjectEffect {
  std::string band = "alpha";
  std::vector<std::string> electrodes = {"Fp1", "Fp2", "F3", "F4"};
  double energy_ratio = 3.0;
};

// Synthetic stand-in for a clinical resting-state cohort. Each channel is a
// sum of per-band sinusoid triples with random phases plus white noise, so
// band energies are analytically steerable: expected window energy in band b
// is amplitude[b]^2 * window_size (up to jitter and filtering).
struct CohortSpec {
  int n_subjects = 64;
  int n_patients = 32;
  double duration_s = 120.0;
  double fs_hz = 1024.0;
  SubjectEffect effect;
  // Baseline component amplitude per band (delta..gamma), a rough 1/f profile.
  std::vector<double> band_amplitudes = {20.0, 10.0, 8.0, 4.0, 2.0};
  double white_noise_sigma = 1.0;
  // Per-subject, per-band amplitude jitter: factors drawn from [1-j, 1+j].
  double amplitude_jitter = 0.1;
  std::uint64_t seed = 7;

  void validate(const BandSpec& bands, const ElectrodeLayout& layout) const;
};

// One subject, deterministic in (spec.seed, subject_index) via a dedicated
// mt19937_64 substream, so cohorts can grow without perturbing earlier
// subjects and generation can run subject-parallel.
Recording generate_subject(const CohortSpec& spec, const ElectrodeLayout& layout,
                           const BandSpec& bands, int subject_index);

std::vector<Recording> generate_synthetic_cohort(const CohortSpec& spec,
                                                 const ElectrodeLayout& layout,
                                                 const BandSpec& bands);

// Recording file: CSV, header row of channel names, one sample per row,
// values printed with 17 significant digits so doubles round-trip exactly.
void save_recording(const Recording& recording, const std::string& path);
Recording load_recording(const std::string& path, const std::string& subject_id, int label,
                         double expected_fs_hz, const ElectrodeLayout& layout);

// Lazy cohort handle: metadata plus a loader, so pipelines can stream
// subjects without holding every recording in memory.
struct SubjectEntry {
  std::string subject_id;
  int label = 0;
};

struct Cohort {
  double fs_hz = 1024.0;
  std::vector<SubjectEntry> subjects;
  std::function<Recording(std::size_t)> load;

  std::size_t size() const { return subjects.size(); }
};

Cohort cohort_from_spec(const CohortSpec& spec, const ElectrodeLayout& layout,
                        const BandSpec& bands);
Cohort cohort_from_recordings(std::vector<Recording> recordings);

// Manifest: CSV `subject_id,label,fs_hz,path` with paths relative to the
// manifest's directory.
Cohort cohort_from_manifest(const std::string& manifest_path, const ElectrodeLayout& layout);
void write_cohort(const CohortSpec& spec, const ElectrodeLayout& layout, const BandSpec& bands,
                  const std::string& out_dir);

}  // namespace scalpgrid
