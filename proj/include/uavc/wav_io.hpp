#pragma once

#include "uavc/wave.hpp"

#include <string>

namespace uavc {

// Reads a RIFF WAV file. Accepts PCM 16/24/32-bit and IEEE float32.
// Samples are normalized to [-1, 1]; channel count and rate preserved.
RawWaveform load_wav(const std::string& path);

// Writes mono PCM16 at the given rate.
void write_wav(const std::string& path, const std::vector<float>& samples,
               int sample_rate);

inline void write_wav(const std::string& path, const StandardWaveform& w) {
    write_wav(path, w.samples, kSampleRate);
}

} // namespace uavc
