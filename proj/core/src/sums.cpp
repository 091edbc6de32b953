#include "tracekit/sums.hpp"

#include <cmath>

namespace tracekit {

PartialSumTable::PartialSumTable(const FunctionTable& phi, double c)
    : m_(phi.m()), c_(c), prefix_(phi.m() + 1) {
    prefix_[0] = cplx{0.0, 0.0};
    for (std::uint64_t k = 0; k < m_; ++k) prefix_[k + 1] = prefix_[k] + phi.values[k];
}

cplx PartialSumTable::partial_sum(std::int64_t N) const {
    if (N == 0) return cplx{0.0, 0.0};
    const auto half = static_cast<std::int64_t>(m_ / 2);
    if (N > half || N < -half) throw OutOfRange("|N| > m/2 in partial_sum");
    if (N > 0) {
        // sum over 1..N
        return prefix_[static_cast<std::size_t>(N) + 1] - prefix_[1];
    }
    // sum over N..-1, i.e. residues m+N .. m-1
    return prefix_[m_] - prefix_[static_cast<std::size_t>(static_cast<std::int64_t>(m_) + N)];
}

cplx PartialSumTable::interval_sum(std::int64_t start, std::uint64_t length) const {
    if (length > m_) throw IntervalTooLong("interval longer than the period");
    if (length == 0) return cplx{0.0, 0.0};
    std::int64_t a = start % static_cast<std::int64_t>(m_);
    if (a < 0) a += static_cast<std::int64_t>(m_);
    const std::uint64_t ua = static_cast<std::uint64_t>(a);
    if (ua + length <= m_) return prefix_[ua + length] - prefix_[ua];
    // wraps past m-1 exactly once
    return (prefix_[m_] - prefix_[ua]) + prefix_[ua + length - m_];
}

double delta(const PartialSumTable& table, std::uint64_t N) {
    const std::uint64_t m = table.m();
    const std::uint64_t half = m / 2;
    if (N < 1 || N > half) throw OutOfRange("N outside [1, m/2] in delta");
    const double c = table.c();
    double best = 0.0;
    for (std::uint64_t t = 1; t <= half; ++t) {
        const double weight =
            1.0 / (c * static_cast<double>(std::max(t, N)));
        const double sums = std::abs(table.partial_sum(static_cast<std::int64_t>(t))) +
                            std::abs(table.partial_sum(-static_cast<std::int64_t>(t)));
        best = std::max(best, weight * sums);
    }
    return 1.0 / std::sqrt(static_cast<double>(m)) + best;
}

double delta(const SpectralPair& pair, std::uint64_t N) {
    return delta(PartialSumTable(pair), N);
}

DeltaProfile delta_profile(const SpectralPair& pair, const std::vector<std::uint64_t>& grid) {
    PartialSumTable table(pair);
    DeltaProfile profile{grid, {}};
    profile.delta_values.reserve(grid.size());
    for (std::uint64_t N : grid) profile.delta_values.push_back(delta(table, N));
    // Tiny relative slack: the two monotonicity claims are exact in real
    // arithmetic, so anything beyond float fuzz is a bug.
    constexpr double kFuzz = 1e-12;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double d0 = profile.delta_values[i - 1], d1 = profile.delta_values[i];
        if (d1 > d0 * (1.0 + kFuzz))
            throw MonotonicityViolation("Delta increased along the grid");
        const double nd0 = static_cast<double>(grid[i - 1]) * d0;
        const double nd1 = static_cast<double>(grid[i]) * d1;
        if (nd1 < nd0 * (1.0 - kFuzz))
            throw MonotonicityViolation("N*Delta decreased along the grid");
    }
    return profile;
}

WindowMax max_interval_ratio(const PartialSumTable& table, std::uint64_t length) {
    const std::uint64_t m = table.m();
    if (length < 1 || length > m) throw LengthOutOfRange("window length outside [1, m]");
    WindowMax best{-1.0, 0};
    for (std::uint64_t a = 0; a < m; ++a) {
        const double s = std::abs(table.interval_sum(static_cast<std::int64_t>(a), length));
        if (s > best.max_abs_sum) best = {s, a};
    }
    return best;
}

WindowMax max_interval_ratio(const SpectralPair& pair, std::uint64_t length) {
    return max_interval_ratio(PartialSumTable(pair), length);
}

}  // namespace tracekit
