#include "tracekit/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace tracekit {

namespace {

double max_abs(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& z : v) s = std::max(s, std::abs(z));
    return s;
}

// Roots of unity e(k/m) for k = 0..m-1.
std::vector<cplx> unit_roots(std::uint64_t m) {
    std::vector<cplx> w(m);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::uint64_t k = 0; k < m; ++k)
        w[k] = std::polar(1.0, step * static_cast<double>(k));
    return w;
}

// In-place iterative radix-2 transform of a power-of-two vector:
//   a[j] <- sum_k a[k] e(sign * j k / n)   (unnormalized)
void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Unnormalized DFT of arbitrary length with kernel e(sign * j k / m),
// via Bluestein's chirp-z reduction: j*k = (j^2 + k^2 - (j-k)^2) / 2,
// so the transform is a linear convolution against the conjugate chirp.
// Chirp exponents use n^2 mod 2m in exact integers to avoid
// angle-reduction error.
std::vector<cplx> bluestein(const std::vector<cplx>& x, int sign) {
    const std::uint64_t m = x.size();
    const double ang = sign * std::numbers::pi / static_cast<double>(m);
    std::vector<cplx> chirp(m);  // chirp[n] = e(sign * n^2 / (2m))
    for (std::uint64_t n = 0; n < m; ++n) {
        const std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(n) * n) % (2 * m));
        chirp[n] = std::polar(1.0, ang * static_cast<double>(q));
    }

    std::size_t L = std::bit_ceil(static_cast<std::size_t>(2 * m - 1));
    std::vector<cplx> a(L, cplx{0.0, 0.0}), b(L, cplx{0.0, 0.0});
    for (std::uint64_t n = 0; n < m; ++n) a[n] = x[n] * chirp[n];
    for (std::uint64_t n = 0; n < m; ++n) {
        b[n] = std::conj(chirp[n]);
        if (n > 0) b[L - n] = b[n];
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < L; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double inv_L = 1.0 / static_cast<double>(L);
    std::vector<cplx> out(m);
    for (std::uint64_t h = 0; h < m; ++h) out[h] = a[h] * inv_L * chirp[h];
    return out;
}

std::vector<cplx> dft_any(const std::vector<cplx>& x, int sign) {
    const std::uint64_t m = x.size();
    if (std::has_single_bit(m)) {
        std::vector<cplx> a = x;
        fft_pow2(a, sign);
        return a;
    }
    return bluestein(x, sign);
}

FunctionTable transform(const FunctionTable& phi, int sign) {
    const std::uint64_t m = phi.m();
    std::vector<cplx> out = dft_any(phi.values, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (auto& z : out) z *= scale;
    return FunctionTable(phi.modulus, std::move(out));
}

}  // namespace

FunctionTable::FunctionTable(Modulus m, std::vector<cplx> v)
    : modulus(std::move(m)), values(std::move(v)) {
    if (values.size() != modulus.value())
        throw OutOfRange("FunctionTable needs exactly m values");
    sup_norm = max_abs(values);
}

FunctionTable dft_naive(const FunctionTable& phi) {
    const std::uint64_t m = phi.m();
    const std::vector<cplx> w = unit_roots(m);
    std::vector<cplx> out(m);
    for (std::uint64_t h = 0; h < m; ++h) {
        cplx acc{0.0, 0.0};
        std::uint64_t idx = 0;  // h*x mod m, advanced incrementally
        for (std::uint64_t x = 0; x < m; ++x) {
            acc += phi.values[x] * w[idx];
            idx += h;
            if (idx >= m) idx -= m;
        }
        out[h] = acc;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (auto& z : out) z *= scale;
    return FunctionTable(phi.modulus, std::move(out));
}

cplx dft_naive_entry(const FunctionTable& phi, std::uint64_t h) {
    const std::uint64_t m = phi.m();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    cplx acc{0.0, 0.0};
    std::uint64_t idx = 0;
    for (std::uint64_t x = 0; x < m; ++x) {
        acc += phi.values[x] * std::polar(1.0, step * static_cast<double>(idx));
        idx += h % m;
        if (idx >= m) idx -= m;
    }
    return acc / std::sqrt(static_cast<double>(m));
}

FunctionTable dft_fast(const FunctionTable& phi) { return transform(phi, +1); }

FunctionTable inverse_dft(const FunctionTable& phi) { return transform(phi, -1); }

SpectralPair make_spectral_pair(FunctionTable phi) {
    FunctionTable hat = dft_fast(phi);
    const double c = std::max(phi.sup_norm, hat.sup_norm);
    return SpectralPair{std::move(phi), std::move(hat), c};
}

}  // namespace tracekit
