#include "uavc/audio.hpp"

#include "uavc/error.hpp"
#include "uavc/resample.hpp"
#include "uavc/rng.hpp"
#include "uavc/wav_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>

namespace fs = std::filesystem;

namespace uavc {

std::array<SynthClassParams, kNumClasses> default_class_params(double noise_snr_db) {
    std::array<SynthClassParams, kNumClasses> out;
    for (int c = 0; c < kNumClasses; ++c) {
        out[c].class_id = c;
        out[c].fundamental_hz = 110.0 + 40.0 * c;
        out[c].n_harmonics = 8;
        out[c].harmonic_decay = 0.7;
        out[c].am_rate_hz = 10.0 + 5.0 * c;
        out[c].noise_snr_db = noise_snr_db;
    }
    return out;
}

StandardWaveform standardize(const RawWaveform& raw) {
    if (raw.channels.empty() || raw.frames() == 0)
        raise(ErrorKind::Contract, "standardize: empty input");
    if (raw.sample_rate <= 0)
        raise(ErrorKind::Contract, "standardize: sample rate must be positive");
    for (const auto& ch : raw.channels)
        if (ch.size() != raw.frames())
            raise(ErrorKind::Contract, "standardize: channel lengths differ");

    // mixdown = channel mean
    std::vector<float> mono(raw.frames());
    const float inv_ch = 1.0f / static_cast<float>(raw.channels.size());
    for (size_t i = 0; i < mono.size(); ++i) {
        float acc = 0.0f;
        for (const auto& ch : raw.channels) acc += ch[i];
        mono[i] = acc * inv_ch;
    }

    if (raw.sample_rate != kSampleRate) {
        mono = resample(mono, static_cast<double>(kSampleRate) / raw.sample_rate);
    }

    // trailing-zero pad or tail clip to the canonical length
    mono.resize(kClipSamples, 0.0f);

    StandardWaveform out;
    out.samples = std::move(mono);
    return out;
}

StandardWaveform synth_sample(const SynthClassParams& params, uint64_t seed) {
    if (params.fundamental_hz < 80.0 || params.fundamental_hz > 500.0)
        raise(ErrorKind::Config, "synth_sample: fundamental out of [80, 500] Hz");
    if (params.n_harmonics < 3)
        raise(ErrorKind::Config, "synth_sample: need at least 3 harmonics");

    Rng rng = Rng::derive(seed, static_cast<uint64_t>(params.class_id));

    std::vector<double> phase(params.n_harmonics);
    for (auto& p : phase) p = rng.uniform(0.0, 2.0 * M_PI);

    constexpr double kAmDepth = 0.5;
    std::vector<double> sig(kClipSamples);
    double energy = 0.0;
    for (int n = 0; n < kClipSamples; ++n) {
        const double t = static_cast<double>(n) / kSampleRate;
        double s = 0.0;
        double amp = 1.0;
        for (int k = 1; k <= params.n_harmonics; ++k) {
            s += amp * std::sin(2.0 * M_PI * params.fundamental_hz * k * t +
                                phase[static_cast<size_t>(k - 1)]);
            amp *= params.harmonic_decay;
        }
        const double am =
            (1.0 + kAmDepth * std::sin(2.0 * M_PI * params.am_rate_hz * t)) /
            (1.0 + kAmDepth);
        sig[static_cast<size_t>(n)] = s * am;
        energy += sig[static_cast<size_t>(n)] * sig[static_cast<size_t>(n)];
    }

    if (std::isfinite(params.noise_snr_db)) {
        const double signal_power = energy / kClipSamples;
        const double noise_std =
            std::sqrt(signal_power / std::pow(10.0, params.noise_snr_db / 10.0));
        for (auto& v : sig) v += noise_std * rng.normal();
    }

    double peak = 0.0;
    for (double v : sig) peak = std::max(peak, std::fabs(v));
    const double gain = peak > 0.0 ? 0.9 / peak : 0.0;

    StandardWaveform out;
    out.samples.resize(kClipSamples);
    for (int n = 0; n < kClipSamples; ++n)
        out.samples[static_cast<size_t>(n)] =
            static_cast<float>(sig[static_cast<size_t>(n)] * gain);
    out.label = params.class_id;
    out.provenance = Provenance::Synthetic;
    out.seed = seed;
    return out;
}

std::vector<StandardWaveform> synth_dataset(int n_per_class, uint64_t seed,
                                            double noise_snr_db) {
    if (n_per_class < 1)
        raise(ErrorKind::Config, "synth_dataset: n_per_class must be >= 1");
    const auto classes = default_class_params(noise_snr_db);
    std::vector<StandardWaveform> out;
    out.reserve(static_cast<size_t>(kNumClasses) * n_per_class);
    for (int c = 0; c < kNumClasses; ++c) {
        for (int i = 0; i < n_per_class; ++i) {
            uint64_t sm = seed;
            uint64_t sample_seed =
                splitmix64(sm) ^ (static_cast<uint64_t>(c) << 32 | static_cast<uint64_t>(i));
            out.push_back(synth_sample(classes[static_cast<size_t>(c)], sample_seed));
        }
    }
    return out;
}

namespace {

std::string class_dir_name(int label) {
    const int f = 110 + 40 * label;
    return std::to_string(label) + "_f" + std::to_string(f);
}

} // namespace

std::vector<DatasetEntry> write_dataset_dir(
    const std::string& root, const std::vector<StandardWaveform>& samples) {
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) raise(ErrorKind::Io, "write_dataset_dir: cannot create " + root);

    std::map<int, int> counter;
    std::vector<DatasetEntry> entries;
    entries.reserve(samples.size());

    std::ofstream manifest(fs::path(root) / "manifest.csv");
    if (!manifest) raise(ErrorKind::Io, "write_dataset_dir: cannot write manifest");
    manifest << "path,class,seed\n";

    for (const auto& s : samples) {
        if (!s.has_label())
            raise(ErrorKind::Contract, "write_dataset_dir: unlabeled sample");
        const fs::path dir = fs::path(root) / class_dir_name(s.label);
        fs::create_directories(dir, ec);
        if (ec) raise(ErrorKind::Io, "write_dataset_dir: cannot create " + dir.string());
        char name[32];
        std::snprintf(name, sizeof(name), "%04d.wav", counter[s.label]++);
        const fs::path file = dir / name;
        write_wav(file.string(), s);
        const std::string rel = class_dir_name(s.label) + "/" + name;
        manifest << rel << "," << s.label << "," << s.seed << "\n";
        entries.push_back({file.string(), s.label});
    }
    return entries;
}

std::vector<StandardWaveform> load_dataset_dir(const std::string& root) {
    if (!fs::is_directory(root))
        raise(ErrorKind::Io, "load_dataset_dir: not a directory: " + root);

    std::vector<std::pair<int, std::string>> files;
    for (const auto& d : fs::directory_iterator(root)) {
        if (!d.is_directory()) continue;
        const std::string name = d.path().filename().string();
        const size_t us = name.find('_');
        if (us == std::string::npos) continue;
        int label = -1;
        try {
            label = std::stoi(name.substr(0, us));
        } catch (...) {
            continue;
        }
        if (label < 0 || label >= kNumClasses)
            raise(ErrorKind::Format, "load_dataset_dir: class index out of range: " + name);
        for (const auto& f : fs::directory_iterator(d.path())) {
            if (f.path().extension() == ".wav")
                files.emplace_back(label, f.path().string());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
        raise(ErrorKind::Io, "load_dataset_dir: no WAV files under " + root);

    std::vector<StandardWaveform> out;
    out.reserve(files.size());
    for (const auto& [label, path] : files) {
        StandardWaveform w = standardize(load_wav(path));
        w.label = label;
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace uavc
