#pragma once

#include "uavc/wave.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace uavc {

// Parameters of one synthetic rotor class: a decaying harmonic stack with
// blade-pass amplitude modulation over a white noise floor.
struct SynthClassParams {
    int class_id = 0;
    double fundamental_hz = 110.0;   // [80, 500]
    int n_harmonics = 8;             // >= 3
    double harmonic_decay = 0.7;     // amplitude ratio per harmonic
    double am_rate_hz = 10.0;        // blade-pass modulation rate
    double noise_snr_db = 20.0;      // +inf disables noise
};

// The nine stand-in airframes: fundamentals 110..430 Hz in 40 Hz steps,
// AM rates 10..50 Hz, 8 harmonics at decay 0.7, SNR 20 dB.
std::array<SynthClassParams, kNumClasses> default_class_params(
    double noise_snr_db = 20.0);

// Mono mixdown (channel mean), resample to 16 kHz, pad/clip to 80,000.
StandardWaveform standardize(const RawWaveform& raw);

// Deterministic synthetic sample: harmonic stack, AM at am_rate_hz, white
// noise at noise_snr_db, peak-normalized to 0.9.
StandardWaveform synth_sample(const SynthClassParams& params, uint64_t seed);

// 9 * n_per_class labeled samples, exactly n_per_class per class.
std::vector<StandardWaveform> synth_dataset(int n_per_class, uint64_t seed,
                                            double noise_snr_db = 20.0);

// Dataset directory layout: <root>/<class_index>_<class_name>/<id>.wav
struct DatasetEntry {
    std::string path;
    int label = -1;
};

// Writes the dataset as PCM16 WAVs plus a manifest.csv (path,class,seed).
std::vector<DatasetEntry> write_dataset_dir(
    const std::string& root, const std::vector<StandardWaveform>& samples);

// Loads and standardizes every WAV under the layout above.
std::vector<StandardWaveform> load_dataset_dir(const std::string& root);

} // namespace uavc
