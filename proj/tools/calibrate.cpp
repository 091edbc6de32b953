// One-shot calibration sweeps. Prints the empirical maxima/minima that back
// the frozen constants in core/include/tracekit/calibration.hpp, with the
// margins already applied. Rerun after any change to the transform or sum
// machinery and refresh the header if the numbers move.

#include <cmath>
#include <cstdio>
#include <vector>

#include "tracekit/bounds.hpp"
#include "tracekit/equidist.hpp"
#include "tracekit/mellin.hpp"
#include "tracekit/tracezoo.hpp"

using namespace tracekit;

namespace {

FunctionTable corpus_table(const std::string& family, const Modulus& p) {
    if (family == "gauss") return polynomial_phase_table({0, 0, 1}, p);
    if (family == "legendre") {
        std::vector<cplx> v(p.value());
        for (std::uint64_t n = 0; n < p.value(); ++n)
            v[n] = cplx{static_cast<double>(legendre_symbol(n, p)), 0.0};
        return FunctionTable(p, std::move(v));
    }
    if (family == "birch") return birch_all(p);
    return kloosterman_all(1, p);
}

}  // namespace

int main() {
    const std::vector<std::uint64_t> primes{101, 211, 499, 997, 2003, 4999, 9973};
    const std::vector<std::string> families{"birch", "kloosterman", "gauss", "legendre"};

    double transfer_max = 0.0;
    for (std::uint64_t pv : primes) {
        Modulus p(pv);
        for (const auto& fam : families) {
            SpectralPair pair = make_spectral_pair(corpus_table(fam, p));
            for (std::uint64_t N = 2; N <= pv / 2; N *= 2) {
                const double r = transfer_ratio(pair, N).ratio;
                if (r > transfer_max) {
                    transfer_max = r;
                    std::printf("  transfer max so far %.6f (%s p=%llu N=%llu)\n", r,
                                fam.c_str(), (unsigned long long)pv, (unsigned long long)N);
                }
            }
            transfer_max = std::max(transfer_max, delta_transfer_ratio(pair).ratio);
        }
    }
    std::printf("kCTransfer = %.17g  (2x max ratio %.17g)\n", 2.0 * transfer_max,
                transfer_max);

    const std::vector<std::uint64_t> sharp_primes{101,   199,   307,   401,   503,
                                                  701,   997,   1499,  2003,  3001,
                                                  4001,  4999,  6007,  7001,  8009,
                                                  9973,  20011, 40009, 70001, 99991};
    double kappa_min = 1e9;
    for (std::uint64_t mv : sharp_primes) {
        Modulus m(mv);
        SpectralPair pair = make_spectral_pair(polynomial_phase_table({0, 0, 1}, m));
        PartialSumTable sums(pair);
        const auto L = static_cast<std::uint64_t>(std::ceil(std::sqrt(double(mv))));
        const double ratio = std::abs(sums.interval_sum(1, L)) / std::sqrt(double(mv));
        kappa_min = std::min(kappa_min, ratio);
    }
    std::printf("kKappa0 = %.17g  (0.9x min ratio %.17g)\n", 0.9 * kappa_min, kappa_min);

    double weyl_max = 0.0;
    for (std::uint64_t pv : primes) {
        Modulus p(pv);
        for (auto fam : {AngleFamily::birch, AngleFamily::kloosterman}) {
            const AngleSample s = extract_angles(corpus_table(
                fam == AngleFamily::birch ? "birch" : "kloosterman", p), fam);
            for (unsigned d = 1; d <= 6; ++d) {
                const double w = std::abs(weyl_sum_satotate(s, 0, s.angles.size(), d));
                weyl_max = std::max(weyl_max, w * std::sqrt(double(pv)) / double(d + 1));
            }
        }
    }
    std::printf("kWeylSatoTateC = %.17g  (2x max %.17g)\n", 2.0 * weyl_max, weyl_max);

    double mellin_max = 0.0;
    for (std::uint64_t pv : {101ull, 499ull, 997ull, 1999ull}) {
        Modulus p(pv);
        const DlogTable dlog = build_dlog(p, primitive_root(p));
        for (auto fam : {"birch", "kloosterman"})
            mellin_max = std::max(mellin_max,
                                  mellin_all(corpus_table(fam, p), dlog).sup_norm);
    }
    std::printf("mellin sup max observed = %.17g (ceiling stays 10)\n", mellin_max);
    return 0;
}
