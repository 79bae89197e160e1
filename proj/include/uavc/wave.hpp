#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uavc {

// Canonical sample format: mono, 16 kHz, exactly 5 seconds.
inline constexpr int kSampleRate = 16000;
inline constexpr int kClipSamples = 80000;
inline constexpr int kNumClasses = 9;

enum class Provenance : uint8_t { Original, Augmented, Synthetic };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Original: return "original";
        case Provenance::Augmented: return "augmented";
        case Provenance::Synthetic: return "synthetic";
    }
    return "?";
}

// As-recorded audio: one or more equal-length channels at an arbitrary rate.
struct RawWaveform {
    std::vector<std::vector<float>> channels;
    int sample_rate = 0;

    size_t frames() const { return channels.empty() ? 0 : channels[0].size(); }
};

// Standardized clip: kClipSamples mono floats at kSampleRate.
struct StandardWaveform {
    std::vector<float> samples;
    int label = -1;  // class index in [0, kNumClasses), -1 = unlabeled
    Provenance provenance = Provenance::Original;
    uint64_t seed = 0;       // generator or augmentation seed
    std::string detail;      // free-form provenance note

    bool has_label() const { return label >= 0; }
};

} // namespace uavc
