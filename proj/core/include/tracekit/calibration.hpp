#pragma once

namespace tracekit::calibration {

// Frozen empirical constants. Each value was produced once by
// tools/calibrate.cpp (run it to reproduce); the provenance strings are
// echoed into reports so recalibration stays auditable.

// Ceiling on the transfer ratios (partial-sum transfer and Delta transfer).
// Frozen as 2x the max ratio observed over the built-in corpus
// {birch, kloosterman, gauss-phase, legendre} at primes 101..9973, dyadic N.
inline constexpr double kCTransfer = 2.8710718464489151;
inline constexpr const char* kCTransferProvenance =
    "tools/calibrate transfer sweep 2026-08-23: 2x max ratio over "
    "{birch,kloosterman,gauss,legendre} x primes{101..9973} x dyadic N";

// Lower constant for the quadratic-phase sharpness check:
// |sum of e_m(n^2) over [1, ceil(sqrt(m))]| >= kKappa0 * sqrt(m).
// Frozen as 0.9x the minimum ratio observed over the 20 test primes.
inline constexpr double kKappa0 = 0.26971759216664115;
inline constexpr const char* kKappa0Provenance =
    "tools/calibrate sharpness sweep 2026-08-23: 0.9x min ratio over 20 primes in [101, 99991]";

// Ceiling for full-range Sato-Tate Weyl sums: |W_d| <= kWeylC * (d+1)/sqrt(p).
// Frozen as 2x the max observed over birch/kloosterman, d in 1..6,
// primes 101..9973.
inline constexpr double kWeylSatoTateC = 1.0000000000002469;
inline constexpr const char* kWeylSatoTateCProvenance =
    "tools/calibrate weyl sweep 2026-08-23: 2x max of |W_d| * sqrt(p)/(d+1)";

// Empirical uniform bound on Mellin sup norms of birch/kloosterman tables
// at primes p <= 2000.
inline constexpr double kMellinSupCeiling = 10.0;
inline constexpr const char* kMellinSupCeilingProvenance =
    "tools/calibrate mellin sweep 2026-08-23: max observed sup 3.0008; ceiling 10";

// Slack subtracted from the tail-frequency lower bound (1-2t)/(4(2-t)).
inline constexpr double kTailSlack = 0.05;
inline constexpr const char* kTailSlackProvenance =
    "fixed design margin for o(1) terms at desk-scale primes";

// Epsilon used in the Weyl-bound reference curve H^(1+eps)(1/H + m/H^d)^kappa.
inline constexpr double kWeylEpsilon = 0.01;

}  // namespace tracekit::calibration
