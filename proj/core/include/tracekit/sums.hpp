#pragma once

#include "tracekit/spectrum.hpp"

namespace tracekit {

/// Prefix sums of a periodic function over representatives 0..m-1, giving
/// O(1) partial and interval sums.
///
/// The bundled constant c is the spectral constant of the underlying pair;
/// it enters the Delta functional below.
class PartialSumTable {
public:
    PartialSumTable(const FunctionTable& phi, double c);
    explicit PartialSumTable(const SpectralPair& pair)
        : PartialSumTable(pair.phi, pair.c) {}

    std::uint64_t m() const { return m_; }
    double c() const { return c_; }

    /// S(phi, N): sum over 1 <= n <= N for N >= 1, over N <= n <= -1 for
    /// N <= -1 (indices mod m), 0 for N = 0. Requires |N| <= m/2.
    cplx partial_sum(std::int64_t N) const;

    /// Sum of phi(n mod m) over n in [start, start + length - 1].
    /// Requires length <= m.
    cplx interval_sum(std::int64_t start, std::uint64_t length) const;

private:
    std::uint64_t m_;
    double c_;
    std::vector<cplx> prefix_;  // prefix_[k] = sum of phi over [0, k)
};

/// Delta(phi, N) = 1/sqrt(m) + max over integer t in [1, floor(m/2)] of
/// min(1/(c t), 1/(c N)) * (|S(phi,t)| + |S(phi,-t)|).
///
/// The weight is continuous non-increasing in real t while the partial-sum
/// term only changes at integers, so the integer scan attains the real-t
/// supremum. O(m).
double delta(const PartialSumTable& table, std::uint64_t N);
double delta(const SpectralPair& pair, std::uint64_t N);

struct DeltaProfile {
    std::vector<std::uint64_t> N_grid;
    std::vector<double> delta_values;
};

/// Delta at each grid point; validates that Delta is non-increasing and
/// N*Delta non-decreasing before returning (MonotonicityViolation signals
/// an implementation bug, never data).
DeltaProfile delta_profile(const SpectralPair& pair, const std::vector<std::uint64_t>& grid);

struct WindowMax {
    double max_abs_sum;
    std::uint64_t witness_start;
};

/// Max over all m starting points of |sum of phi over a window of the given
/// length|, O(m), with an argmax witness (smallest start on ties).
WindowMax max_interval_ratio(const PartialSumTable& table, std::uint64_t length);
WindowMax max_interval_ratio(const SpectralPair& pair, std::uint64_t length);

}  // namespace tracekit
