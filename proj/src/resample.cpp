#include "uavc/resample.hpp"

#include "uavc/error.hpp"

#include <cmath>
#include <mutex>

namespace uavc {

namespace {

constexpr int kZeroCrossings = 64;
constexpr double kKaiserBeta = 8.6;
constexpr int kTableOversample = 512;  // interpolation table density per crossing

// Modified Bessel function of the first kind, order zero (series form).
double bessel_i0(double x) {
    double sum = 1.0, term = 1.0;
    double half_x = x / 2.0;
    for (int k = 1; k < 64; ++k) {
        term *= (half_x / k) * (half_x / k);
        sum += term;
        if (term < sum * 1e-16) break;
    }
    return sum;
}

// Right half of the prototype lowpass: sinc(u) * kaiser(u / ZC), sampled at
// kTableOversample points per zero crossing. h(0) = 1.
const std::vector<double>& filter_table() {
    static std::vector<double> table;
    static std::once_flag once;
    std::call_once(once, [] {
        const int n = kZeroCrossings * kTableOversample + 1;
        table.resize(n + 1);
        const double i0_beta = bessel_i0(kKaiserBeta);
        for (int i = 0; i <= n; ++i) {
            double u = static_cast<double>(i) / kTableOversample;  // in crossings
            double sinc = (i == 0) ? 1.0 : std::sin(M_PI * u) / (M_PI * u);
            double t = u / kZeroCrossings;
            double win = (t >= 1.0) ? 0.0
                                    : bessel_i0(kKaiserBeta * std::sqrt(1.0 - t * t)) /
                                          i0_beta;
            table[i] = sinc * win;
        }
    });
    return table;
}

// Prototype evaluated at |u| zero crossings, linear interpolation.
inline double proto_at(double u) {
    const auto& tab = filter_table();
    double pos = std::fabs(u) * kTableOversample;
    auto idx = static_cast<size_t>(pos);
    if (idx + 1 >= tab.size()) return 0.0;
    double frac = pos - static_cast<double>(idx);
    return tab[idx] + frac * (tab[idx + 1] - tab[idx]);
}

} // namespace

std::vector<float> resample(const std::vector<float>& x, double ratio,
                            size_t out_len) {
    if (ratio <= 0.0) raise(ErrorKind::Config, "resample: ratio must be positive");
    if (x.empty()) return {};

    const size_t n_out =
        out_len ? out_len
                : static_cast<size_t>(std::llround(static_cast<double>(x.size()) * ratio));
    if (ratio == 1.0 && (out_len == 0 || out_len == x.size())) return x;

    // When decimating, scale the sinc down to the output Nyquist.
    const double cutoff = std::min(1.0, ratio);
    const double half_width = kZeroCrossings / cutoff;  // taps per side, input units

    std::vector<float> y(n_out);
    const auto n_in = static_cast<ptrdiff_t>(x.size());

#pragma omp parallel for schedule(static)
    for (ptrdiff_t m = 0; m < static_cast<ptrdiff_t>(n_out); ++m) {
        const double center = static_cast<double>(m) / ratio;
        const auto k_lo =
            static_cast<ptrdiff_t>(std::ceil(center - half_width));
        const auto k_hi =
            static_cast<ptrdiff_t>(std::floor(center + half_width));
        double acc = 0.0;
        for (ptrdiff_t k = std::max<ptrdiff_t>(k_lo, 0);
             k <= std::min(k_hi, n_in - 1); ++k) {
            double u = (static_cast<double>(k) - center) * cutoff;
            acc += static_cast<double>(x[static_cast<size_t>(k)]) * cutoff * proto_at(u);
        }
        y[static_cast<size_t>(m)] = static_cast<float>(acc);
    }
    return y;
}

} // namespace uavc
