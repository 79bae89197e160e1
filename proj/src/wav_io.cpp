#include "uavc/wav_io.hpp"

#include "uavc/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace uavc {

namespace {

uint32_t rd_u32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t rd_u16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void wr_u32(std::ofstream& f, uint32_t v) {
    uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                    static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    f.write(reinterpret_cast<const char*>(b), 4);
}

void wr_u16(std::ofstream& f, uint16_t v) {
    uint8_t b[2] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8)};
    f.write(reinterpret_cast<const char*>(b), 2);
}

constexpr uint16_t kFmtPcm = 1;
constexpr uint16_t kFmtFloat = 3;
constexpr uint16_t kFmtExtensible = 0xFFFE;

} // namespace

RawWaveform load_wav(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(ErrorKind::Io, "load_wav: cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());

    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
        raise(ErrorKind::Format, "load_wav: not a RIFF/WAVE file: " + path);

    uint16_t format = 0, channels = 0, bits = 0;
    uint32_t rate = 0;
    bool have_fmt = false;
    const uint8_t* data = nullptr;
    uint32_t data_len = 0;

    size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const uint8_t* hdr = bytes.data() + pos;
        uint32_t chunk_len = rd_u32(hdr + 4);
        if (pos + 8 + chunk_len > bytes.size())
            raise(ErrorKind::Format, "load_wav: truncated chunk in " + path);
        const uint8_t* body = hdr + 8;
        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (chunk_len < 16) raise(ErrorKind::Format, "load_wav: short fmt chunk");
            format = rd_u16(body);
            channels = rd_u16(body + 2);
            rate = rd_u32(body + 4);
            bits = rd_u16(body + 14);
            if (format == kFmtExtensible && chunk_len >= 40) {
                // sub-format GUID starts with the effective format tag
                format = rd_u16(body + 24);
            }
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            data = body;
            data_len = chunk_len;
        }
        pos += 8 + chunk_len + (chunk_len & 1);
    }

    if (!have_fmt || !data)
        raise(ErrorKind::Format, "load_wav: missing fmt or data chunk: " + path);
    if (channels == 0 || rate == 0)
        raise(ErrorKind::Format, "load_wav: bad fmt fields in " + path);

    bool is_float = format == kFmtFloat;
    if (!is_float && format != kFmtPcm)
        raise(ErrorKind::Unsupported, "load_wav: unsupported codec tag " +
                                          std::to_string(format));
    if (is_float && bits != 32)
        raise(ErrorKind::Unsupported, "load_wav: only float32 supported");
    if (!is_float && bits != 16 && bits != 24 && bits != 32)
        raise(ErrorKind::Unsupported, "load_wav: unsupported PCM depth " +
                                          std::to_string(bits));

    const uint32_t bytes_per_sample = bits / 8;
    const uint32_t frame_bytes = bytes_per_sample * channels;
    if (frame_bytes == 0 || data_len % frame_bytes != 0)
        raise(ErrorKind::Format, "load_wav: data size not a whole frame count");
    const uint32_t frames = data_len / frame_bytes;

    RawWaveform out;
    out.sample_rate = static_cast<int>(rate);
    out.channels.assign(channels, std::vector<float>(frames));

    for (uint32_t i = 0; i < frames; ++i) {
        for (uint16_t c = 0; c < channels; ++c) {
            const uint8_t* p = data + (i * channels + c) * bytes_per_sample;
            float v = 0.0f;
            if (is_float) {
                float raw;
                std::memcpy(&raw, p, 4);
                v = raw;
            } else if (bits == 16) {
                int16_t raw = static_cast<int16_t>(p[0] | (p[1] << 8));
                v = static_cast<float>(raw) / 32768.0f;
            } else if (bits == 24) {
                int32_t raw = p[0] | (p[1] << 8) | (p[2] << 16);
                if (raw & 0x800000) raw |= ~0xFFFFFF;
                v = static_cast<float>(raw) / 8388608.0f;
            } else {
                int32_t raw;
                std::memcpy(&raw, p, 4);
                v = static_cast<float>(raw) / 2147483648.0f;
            }
            out.channels[c][i] = v;
        }
    }
    return out;
}

void write_wav(const std::string& path, const std::vector<float>& samples,
               int sample_rate) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorKind::Io, "write_wav: cannot open " + path);

    const uint32_t n = static_cast<uint32_t>(samples.size());
    const uint32_t data_len = n * 2;

    f.write("RIFF", 4);
    wr_u32(f, 36 + data_len);
    f.write("WAVE", 4);
    f.write("fmt ", 4);
    wr_u32(f, 16);
    wr_u16(f, kFmtPcm);
    wr_u16(f, 1);
    wr_u32(f, static_cast<uint32_t>(sample_rate));
    wr_u32(f, static_cast<uint32_t>(sample_rate) * 2);
    wr_u16(f, 2);
    wr_u16(f, 16);
    f.write("data", 4);
    wr_u32(f, data_len);

    for (uint32_t i = 0; i < n; ++i) {
        float v = std::clamp(samples[i], -1.0f, 1.0f);
        int32_t q = static_cast<int32_t>(std::lrintf(v * 32767.0f));
        q = std::clamp(q, -32768, 32767);
        wr_u16(f, static_cast<uint16_t>(static_cast<int16_t>(q)));
    }
    if (!f) raise(ErrorKind::Io, "write_wav: write failed for " + path);
}

} // namespace uavc
