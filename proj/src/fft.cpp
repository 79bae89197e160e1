#include "uavc/fft.hpp"

#include "uavc/error.hpp"

#include <cmath>

namespace uavc {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft(std::vector<cplx>& a, bool inverse) {
    const size_t n = a.size();
    if (!is_pow2(n)) raise(ErrorKind::Contract, "fft: size must be a power of two");
    if (n < 2) return;

    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        cplx wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }

    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv_n;
    }
}

std::vector<cplx> rfft(const std::vector<double>& x) {
    std::vector<cplx> a(x.size());
    for (size_t i = 0; i < x.size(); ++i) a[i] = cplx(x[i], 0.0);
    fft(a, false);
    a.resize(x.size() / 2 + 1);
    return a;
}

std::vector<double> irfft(const std::vector<cplx>& bins, size_t n) {
    if (bins.size() != n / 2 + 1)
        raise(ErrorKind::Contract, "irfft: bin count does not match length");
    std::vector<cplx> a(n);
    for (size_t i = 0; i < bins.size(); ++i) a[i] = bins[i];
    for (size_t i = bins.size(); i < n; ++i) a[i] = std::conj(bins[n - i]);
    fft(a, true);
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = a[i].real();
    return out;
}

} // namespace uavc
