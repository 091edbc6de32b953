#include "tracekit/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tracekit {

cplx weyl_sum_fractional(const RationalFunctionModM& f, const Modulus& p,
                         std::int64_t start, std::uint64_t length, std::int64_t h) {
    const std::uint64_t q = p.value();
    if (!p.is_prime()) throw InvalidModulus("weyl_sum_fractional requires a prime");
    if (length < 1 || length > q) throw IntervalTooLong("interval length outside [1, p]");
    const std::uint64_t hr = reduce_mod(h, q);
    if (hr == 0) throw InvalidTestFrequency("h must be nonzero mod p");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
    cplx acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < length; ++i) {
        const std::uint64_t n =
            reduce_mod(start + static_cast<std::int64_t>(i), q);
        const auto fn = rational_eval(f, n, p);
        const std::uint64_t v = fn ? *fn : f.pole_value % q;
        acc += std::polar(1.0, step * static_cast<double>(mul_mod(hr, v, q)));
    }
    return acc / static_cast<double>(length);
}

double weyl_sum_satotate(const AngleSample& sample, std::size_t start, std::size_t length,
                         unsigned d) {
    if (length == 0 || start + length > sample.angles.size())
        throw OutOfRange("index window outside the sample");
    double acc = 0.0;
    for (std::size_t i = start; i < start + length; ++i)
        acc += chebyshev_U(d, 2.0 * std::cos(sample.angles[i]));
    return acc / static_cast<double>(length);
}

double satotate_cdf(double theta) {
    if (theta < 0.0 || theta > std::numbers::pi)
        throw DomainError("theta outside [0, pi]");
    return (theta - std::sin(theta) * std::cos(theta)) / std::numbers::pi;
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw EmptySample("KS distance of an empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        sup = std::max(sup, std::max(F - static_cast<double>(i) / n,
                                     static_cast<double>(i + 1) / n - F));
    }
    return sup;
}

BirchMoments birch_moments(const FunctionTable& birch, std::int64_t start,
                           std::uint64_t length) {
    const std::uint64_t p = birch.m();
    if (length < 1 || length > p) throw IntervalTooLong("interval length outside [1, p]");
    BirchMoments mom{cplx{0.0, 0.0}, 0.0};
    for (std::uint64_t i = 0; i < length; ++i) {
        const cplx b = birch.at(start + static_cast<std::int64_t>(i));
        mom.moment1 += b;
        mom.moment2 += std::norm(b);
    }
    return mom;
}

TailCounts birch_tail_counts(const FunctionTable& birch, std::int64_t start,
                             std::uint64_t length, double t) {
    if (t < 0.0 || t >= 2.0) throw OutOfRange("t outside [0, 2)");
    TailCounts counts{0, 0, 0};
    for (std::uint64_t i = 0; i < length; ++i) {
        const double v = birch.at(start + static_cast<std::int64_t>(i)).real();
        if (v > t) ++counts.above;
        if (v < -t) ++counts.below;
        if (std::abs(v) > t) ++counts.abs_above;
    }
    return counts;
}

BoundReport psi_hat_identity_check(const Modulus& p) {
    return psi_hat_identity_check(p, birch_all(p));
}

BoundReport psi_hat_identity_check(const Modulus& p, const FunctionTable& birch) {
    const std::uint64_t q = p.value();
    if (!p.is_prime() || q < 5) throw InvalidModulus("requires a prime p >= 5");
    if (birch.m() != q) throw OutOfRange("birch table modulus mismatch");

    std::vector<cplx> psi(q);
    for (std::uint64_t n = 0; n < q; ++n) psi[n] = cplx{std::norm(birch.values[n]) - 1.0, 0.0};
    const FunctionTable psi_hat = dft_fast(FunctionTable(p, std::move(psi)));

    double worst = std::abs(psi_hat.values[0]);  // check (a): psi_hat(0) = 0
    for (std::uint64_t h = 1; h < q; ++h)        // check (b): unit modulus
        worst = std::max(worst, std::abs(std::abs(psi_hat.values[h]) - 1.0));

    // check (c): psi_hat(h) = eps * (h/p) * e_p(-4bar h^3) with one eps.
    const std::uint64_t inv4 = mod_inverse(4, q);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
    auto phase = [&](std::uint64_t h) {  // (h/p) * e_p(-4bar h^3)
        const std::uint64_t h3 = mul_mod(mul_mod(h, h, q), h, q);
        const std::uint64_t r = (q - mul_mod(inv4, h3, q)) % q;
        const double sign = static_cast<double>(legendre_symbol(h, p));
        return sign * std::polar(1.0, step * static_cast<double>(r));
    };
    const cplx eps = psi_hat.values[1] / phase(1);
    worst = std::max(worst, std::abs(std::abs(eps) - 1.0));
    for (std::uint64_t h = 1; h < q; ++h)
        worst = std::max(worst, std::abs(psi_hat.values[h] - eps * phase(h)));

    BoundReport r = BoundReport::make("psi-hat-identity", worst, 1e-6,
                                      {{"p", static_cast<double>(q)},
                                       {"eps_re", eps.real()},
                                       {"eps_im", eps.imag()}},
                                      1.0);
    return r;
}

IntervalDensity value_set_interval_density(const std::vector<std::int64_t>& f,
                                           const Modulus& p, std::int64_t start,
                                           std::uint64_t length) {
    if (length < 1 || length > p.value())
        throw IntervalTooLong("interval length outside [1, p]");
    const ValueSet vs = value_set_indicator(f, p);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < length; ++i)
        if (vs.indicator.at(start + static_cast<std::int64_t>(i)).real() > 0.5) ++count;
    return IntervalDensity{count, vs.delta_f * static_cast<double>(length), vs.delta_f};
}

}  // namespace tracekit
