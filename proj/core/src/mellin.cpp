#include "tracekit/mellin.hpp"

#include <cmath>

namespace tracekit {

DlogTable::DlogTable(const Modulus& p, std::uint64_t generator)
    : p_(p.value()), gen_(generator) {
    if (!p.is_prime() || p_ < 3) throw InvalidModulus("DlogTable requires an odd prime");
    const std::uint64_t order = p_ - 1;
    log_.assign(order, order);  // sentinel: unset
    pow_.assign(order, 0);
    std::uint64_t acc = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        if (log_[acc - 1] != order) throw BadGenerator("generator is not a primitive root");
        log_[acc - 1] = k;
        pow_[k] = acc;
        acc = mul_mod(acc, gen_, p_);
    }
    if (acc != 1) throw BadGenerator("generator is not a primitive root");
}

std::uint64_t DlogTable::log(std::uint64_t x) const {
    const std::uint64_t r = x % p_;
    if (r == 0) throw OutOfRange("dlog of 0");
    return log_[r - 1];
}

DlogTable build_dlog(const Modulus& p, std::uint64_t generator) {
    return DlogTable(p, generator);
}

FunctionTable mellin_all(const FunctionTable& tau, const DlogTable& dlog) {
    const std::uint64_t p = dlog.p();
    if (tau.m() != p) throw BadGenerator("tau and dlog modulus mismatch");
    std::vector<cplx> reindexed(p - 1);
    for (std::uint64_t k = 0; k < p - 1; ++k) reindexed[k] = tau.values[dlog.power(k)];
    return dft_fast(FunctionTable(Modulus(p - 1), std::move(reindexed)));
}

BoundReport mellin_sup_check(const FunctionTable& tau, const DlogTable& dlog,
                             std::optional<double> c) {
    const FunctionTable hat = mellin_all(tau, dlog);
    const double lhs = hat.sup_norm;
    std::map<std::string, double> witness{{"p", static_cast<double>(dlog.p())},
                                          {"generator", static_cast<double>(dlog.generator())}};
    if (!c) {
        // Report-only: no conductor supplied.
        return BoundReport::make("mellin-sup", lhs, lhs > 0 ? lhs : 1.0, std::move(witness),
                                 std::nullopt);
    }
    witness["conductor"] = *c;
    const double rhs = 2.0 * std::sqrt(2.0) * (*c) * (*c);
    return BoundReport::make("mellin-sup", lhs, rhs, std::move(witness), 1.0);
}

cplx geometric_progression_sum(const FunctionTable& tau, const DlogTable& dlog,
                               std::uint64_t x, std::int64_t start, std::uint64_t length) {
    const std::uint64_t p = dlog.p();
    if (tau.m() != p) throw BadGenerator("tau and dlog modulus mismatch");
    if (x % p == 0) throw OutOfRange("x must be nonzero");
    if (length > p - 1) throw IntervalTooLong("interval longer than p-1");
    // tau(x g^n) = reindexed[(log x + n) mod (p-1)]: an interval sum of the
    // reindexed sequence, shifted by log x.
    std::vector<cplx> reindexed(p - 1);
    for (std::uint64_t k = 0; k < p - 1; ++k) reindexed[k] = tau.values[dlog.power(k)];
    PartialSumTable prefix(FunctionTable(Modulus(p - 1), std::move(reindexed)), 1.0);
    return prefix.interval_sum(start + static_cast<std::int64_t>(dlog.log(x)), length);
}

}  // namespace tracekit
