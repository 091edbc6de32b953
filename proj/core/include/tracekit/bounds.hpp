#pragma once

#include "tracekit/report.hpp"
#include "tracekit/sums.hpp"

namespace tracekit {

/// Completion-kernel bound: sum_h |indicator_hat(h)| <= sqrt(m) log(3m)
/// for the interval [start, start+length-1] mod m.
BoundReport check_pv_kernel(const Modulus& m, std::int64_t start, std::uint64_t length);

/// Sliding-window bound: for each length L with sqrt(m) < L <= m,
/// max_a |S(phi, [a, a+L-1])| <= c sqrt(m) log(4 e^8 L / sqrt(m)).
/// Unconditional, so threshold is 1 (plus 1e-6 float slack).
std::vector<BoundReport> check_thm1(const SpectralPair& pair,
                                    const std::vector<std::uint64_t>& lengths);

/// |S(phi_hat, N)| + |S(phi_hat, -N)| against
/// c sqrt(N) m^{1/4} Delta(phi, floor(m/N))^{1/2}; pass threshold is the
/// calibrated transfer constant.
BoundReport transfer_ratio(const SpectralPair& pair, std::uint64_t N);

/// Delta(phi_hat, floor(sqrt(m))) against Delta(phi, floor(sqrt(m)))^{1/2},
/// same calibrated threshold.
BoundReport delta_transfer_ratio(const SpectralPair& pair);

/// |sum_{1<=h<=H} e_m(P(h))| against the Weyl reference curve
/// H^{1+eps} (1/H + m/H^d)^{1/2^{d-1}}. Report-only (no pass threshold:
/// the implied constant is unknown).
BoundReport weyl_bound_ratio(const std::vector<std::int64_t>& P, const Modulus& m,
                             std::uint64_t H);

/// ||phi_hat||_inf <= (d-1)^omega(m) for phi = e_m(P(.)), squarefree m,
/// deg P = d >= 3, invertible leading coefficient.
BoundReport check_fourier_sup_squarefree(const std::vector<std::int64_t>& P,
                                         const Modulus& m);

}  // namespace tracekit
