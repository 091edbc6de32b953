#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tracekit/modarith.hpp"

namespace tracekit {

using cplx = std::complex<double>;

/// A length-m table of complex values of a function on Z/mZ.
/// sup_norm is always recomputed from the values.
struct FunctionTable {
    Modulus modulus;
    std::vector<cplx> values;
    double sup_norm = 0.0;

    FunctionTable(Modulus m, std::vector<cplx> v);

    std::uint64_t m() const { return modulus.value(); }
    /// Value at n taken mod m (n may be any integer).
    cplx at(std::int64_t n) const {
        const auto mm = static_cast<std::int64_t>(m());
        std::int64_t r = n % mm;
        if (r < 0) r += mm;
        return values[static_cast<std::size_t>(r)];
    }
};

/// Normalized DFT with the plus-sign kernel:
///   phi_hat(h) = (1/sqrt(m)) * sum_x phi(x) e(h x / m),  e(t) = exp(2*pi*i*t).
/// Direct O(m^2) evaluation; exponents are reduced mod m in exact integer
/// arithmetic before any trigonometric call.
FunctionTable dft_naive(const FunctionTable& phi);

/// Single entry of the naive transform, O(m). Used to spot-check the fast
/// path at sizes where the full O(m^2) oracle is too slow.
cplx dft_naive_entry(const FunctionTable& phi, std::uint64_t h);

/// Same contract as dft_naive, O(m log m): radix-2 for powers of two,
/// Bluestein's chirp reduction to a power-of-two convolution otherwise
/// (covers prime and composite m uniformly).
FunctionTable dft_fast(const FunctionTable& phi);

/// The inverse transform: conjugate kernel e(-h x / m), same 1/sqrt(m)
/// normalization, so inverse_dft(dft_fast(phi)) == phi.
FunctionTable inverse_dft(const FunctionTable& phi);

/// A function bundled with its transform and c = max of the two sup norms.
struct SpectralPair {
    FunctionTable phi;
    FunctionTable phi_hat;
    double c;
};

SpectralPair make_spectral_pair(FunctionTable phi);

}  // namespace tracekit
