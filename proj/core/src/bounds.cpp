#include "tracekit/bounds.hpp"

#include <cmath>
#include <numbers>

#include "tracekit/calibration.hpp"
#include "tracekit/tracezoo.hpp"

namespace tracekit {

namespace {

unsigned poly_degree_mod(const std::vector<std::int64_t>& P, std::uint64_t m) {
    for (std::size_t k = P.size(); k-- > 0;)
        if (reduce_mod(P[k], m) != 0) return static_cast<unsigned>(k);
    return 0;
}

void require_weyl_poly(const std::vector<std::int64_t>& P, const Modulus& m, unsigned& d) {
    if (!m.is_squarefree()) throw NotSquarefree("modulus must be squarefree");
    d = poly_degree_mod(P, m.value());
    if (d < 3) throw BadLeadingCoefficient("polynomial degree must be >= 3 mod m");
    const std::uint64_t lead = reduce_mod(P[d], m.value());
    std::uint64_t a = lead, b = m.value();
    while (b) { a %= b; std::swap(a, b); }
    if (a != 1) throw BadLeadingCoefficient("leading coefficient not invertible mod m");
}

}  // namespace

BoundReport check_pv_kernel(const Modulus& m, std::int64_t start, std::uint64_t length) {
    const std::uint64_t q = m.value();
    if (length < 1 || length > q) throw IntervalTooLong("interval length outside [1, m]");
    std::vector<cplx> ind(q, cplx{0.0, 0.0});
    for (std::uint64_t i = 0; i < length; ++i) {
        std::int64_t r = (start + static_cast<std::int64_t>(i)) % static_cast<std::int64_t>(q);
        if (r < 0) r += static_cast<std::int64_t>(q);
        ind[static_cast<std::uint64_t>(r)] = cplx{1.0, 0.0};
    }
    const FunctionTable hat = dft_fast(FunctionTable(m, std::move(ind)));
    double lhs = 0.0;
    for (const auto& z : hat.values) lhs += std::abs(z);
    const double rhs = std::sqrt(static_cast<double>(q)) * std::log(3.0 * static_cast<double>(q));
    return BoundReport::make("pv-kernel", lhs, rhs,
                             {{"m", static_cast<double>(q)},
                              {"start", static_cast<double>(start)},
                              {"length", static_cast<double>(length)}},
                             1.0);
}

std::vector<BoundReport> check_thm1(const SpectralPair& pair,
                                    const std::vector<std::uint64_t>& lengths) {
    const std::uint64_t m = pair.phi.m();
    const double sqrt_m = std::sqrt(static_cast<double>(m));
    PartialSumTable table(pair);
    std::vector<BoundReport> reports;
    reports.reserve(lengths.size());
    for (std::uint64_t L : lengths) {
        if (static_cast<double>(L) <= sqrt_m || L > m)
            throw LengthOutOfRange("length must satisfy sqrt(m) < L <= m");
        const WindowMax w = max_interval_ratio(table, L);
        const double rhs =
            pair.c * sqrt_m * std::log(4.0 * std::exp(8.0) * static_cast<double>(L) / sqrt_m);
        reports.push_back(BoundReport::make(
            "thm1-window", w.max_abs_sum, rhs,
            {{"m", static_cast<double>(m)},
             {"length", static_cast<double>(L)},
             {"witness_start", static_cast<double>(w.witness_start)}},
            1.0 + 1e-6));
    }
    return reports;
}

BoundReport transfer_ratio(const SpectralPair& pair, std::uint64_t N) {
    const std::uint64_t m = pair.phi.m();
    if (N < 2 || N > m / 2) throw OutOfRange("N outside [2, m/2] in transfer_ratio");
    PartialSumTable hat_sums(pair.phi_hat, pair.c);
    const double lhs = std::abs(hat_sums.partial_sum(static_cast<std::int64_t>(N))) +
                       std::abs(hat_sums.partial_sum(-static_cast<std::int64_t>(N)));
    std::uint64_t arg = m / N;
    arg = std::min(std::max<std::uint64_t>(arg, 1), m / 2);
    const double d = delta(PartialSumTable(pair), arg);
    const double rhs = pair.c * std::sqrt(static_cast<double>(N)) *
                       std::pow(static_cast<double>(m), 0.25) * std::sqrt(d);
    return BoundReport::make("transfer",
                             lhs, rhs,
                             {{"m", static_cast<double>(m)},
                              {"N", static_cast<double>(N)},
                              {"delta_arg", static_cast<double>(arg)}},
                             calibration::kCTransfer);
}

BoundReport delta_transfer_ratio(const SpectralPair& pair) {
    const std::uint64_t m = pair.phi.m();
    if (m < 4) throw OutOfRange("m must be >= 4 in delta_transfer_ratio");
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
    const std::uint64_t N = std::min(std::max<std::uint64_t>(root, 1), m / 2);
    const double lhs = delta(PartialSumTable(pair.phi_hat, pair.c), N);
    const double rhs = std::sqrt(delta(PartialSumTable(pair), N));
    return BoundReport::make("delta-transfer", lhs, rhs,
                             {{"m", static_cast<double>(m)}, {"N", static_cast<double>(N)}},
                             calibration::kCTransfer);
}

BoundReport weyl_bound_ratio(const std::vector<std::int64_t>& P, const Modulus& m,
                             std::uint64_t H) {
    unsigned d = 0;
    require_weyl_poly(P, m, d);
    const std::uint64_t q = m.value();
    if (H < 1 || H > q) throw OutOfRange("H outside [1, m]");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
    cplx acc{0.0, 0.0};
    for (std::uint64_t h = 1; h <= H; ++h)
        acc += std::polar(1.0, step * static_cast<double>(poly_eval_mod(P, h, q)));
    const double lhs = std::abs(acc);
    const double kappa = 1.0 / static_cast<double>(1ull << (d - 1));
    const double Hd = static_cast<double>(H);
    const double rhs = std::pow(Hd, 1.0 + calibration::kWeylEpsilon) *
                       std::pow(1.0 / Hd + static_cast<double>(q) / std::pow(Hd, d), kappa);
    return BoundReport::make("weyl-curve", lhs, rhs,
                             {{"m", static_cast<double>(q)},
                              {"H", static_cast<double>(H)},
                              {"d", static_cast<double>(d)}},
                             std::nullopt);
}

BoundReport check_fourier_sup_squarefree(const std::vector<std::int64_t>& P,
                                         const Modulus& m) {
    unsigned d = 0;
    require_weyl_poly(P, m, d);
    const FunctionTable hat = dft_fast(polynomial_phase_table(P, m));
    const double lhs = hat.sup_norm;
    const double rhs = std::pow(static_cast<double>(d - 1), static_cast<double>(m.omega()));
    return BoundReport::make("fourier-sup-squarefree", lhs, rhs + 1e-6,
                             {{"m", static_cast<double>(m.value())},
                              {"d", static_cast<double>(d)},
                              {"omega", static_cast<double>(m.omega())}},
                             1.0);
    // rhs carries the 1e-6 absolute slack, so the pass threshold on the
    // ratio is exactly 1.
}

}  // namespace tracekit
