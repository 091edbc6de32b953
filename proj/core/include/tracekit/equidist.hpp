#pragma once

#include <functional>

#include "tracekit/report.hpp"
#include "tracekit/tracezoo.hpp"

namespace tracekit {

/// (1/|I|) sum over n in [start, start+length-1] of e_p(h * f(n)),
/// with f = 0 at poles. h must be nonzero mod p.
cplx weyl_sum_fractional(const RationalFunctionModM& f, const Modulus& p,
                         std::int64_t start, std::uint64_t length, std::int64_t h);

/// (1/|I|) sum of U_d(2 cos theta) over the index window [start, start+length)
/// into the angle sample.
double weyl_sum_satotate(const AngleSample& sample, std::size_t start, std::size_t length,
                         unsigned d);

/// CDF of the measure (2/pi) sin^2(theta) dtheta on [0, pi]:
/// (theta - sin(theta) cos(theta)) / pi.
double satotate_cdf(double theta);

/// Two-sided Kolmogorov-Smirnov distance between a sample and a CDF.
/// The sample need not be pre-sorted.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

struct BirchMoments {
    cplx moment1;     // sum of B_3(n) over I
    double moment2;   // sum of |B_3(n)|^2 over I
};

/// Raw moments over [start, start+length-1] (indices mod p) of a cached
/// Birch table.
BirchMoments birch_moments(const FunctionTable& birch, std::int64_t start,
                           std::uint64_t length);

struct TailCounts {
    std::uint64_t above;      // B_3(n) > t
    std::uint64_t below;      // B_3(n) < -t
    std::uint64_t abs_above;  // |B_3(n)| > t
};

TailCounts birch_tail_counts(const FunctionTable& birch, std::int64_t start,
                             std::uint64_t length, double t);

/// Exact identity for psi(n) = |B_3(n)|^2 - 1: psi_hat(0) = 0, |psi_hat(h)| = 1
/// for h != 0, and psi_hat(h) = eps * (h/p) * e_p(-h^3/4) with a single
/// unit-modulus eps read off at h = 1. The report's lhs is the worst
/// deviation across the checks (tolerance 1e-6). Requires p >= 5.
BoundReport psi_hat_identity_check(const Modulus& p);
BoundReport psi_hat_identity_check(const Modulus& p, const FunctionTable& birch);

struct IntervalDensity {
    std::uint64_t count;
    double expected;  // delta_f * |I|
    double delta_f;
};

/// How many x in the interval lie in the value set f(F_p).
IntervalDensity value_set_interval_density(const std::vector<std::int64_t>& f,
                                           const Modulus& p, std::int64_t start,
                                           std::uint64_t length);

}  // namespace tracekit
