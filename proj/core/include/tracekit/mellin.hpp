#pragma once

#include <optional>

#include "tracekit/report.hpp"
#include "tracekit/sums.hpp"

namespace tracekit {

/// Discrete logarithm table identifying F_p^x with Z/(p-1)Z through a fixed
/// primitive root.
class DlogTable {
public:
    DlogTable(const Modulus& p, std::uint64_t generator);

    std::uint64_t p() const { return p_; }
    std::uint64_t generator() const { return gen_; }
    /// k with generator^k = x; x must be in [1, p-1].
    std::uint64_t log(std::uint64_t x) const;
    /// generator^k for k in [0, p-2].
    std::uint64_t power(std::uint64_t k) const { return pow_[k % (p_ - 1)]; }

private:
    std::uint64_t p_;
    std::uint64_t gen_;
    std::vector<std::uint64_t> log_;  // log_[x-1] for x in 1..p-1
    std::vector<std::uint64_t> pow_;
};

DlogTable build_dlog(const Modulus& p, std::uint64_t generator);

/// Discrete Mellin transform: reindexes tau(g^k) onto Z/(p-1)Z and applies
/// the normalized DFT, so output index j is the character
/// chi_j(g^k) = e(j k / (p-1)). tau(0) is ignored.
FunctionTable mellin_all(const FunctionTable& tau, const DlogTable& dlog);

/// max_chi |tau_hat(chi)| against 2*sqrt(2)*c^2 for a user-supplied sheaf
/// conductor c. Without c the check degrades to report-only.
BoundReport mellin_sup_check(const FunctionTable& tau, const DlogTable& dlog,
                             std::optional<double> c);

/// Sum over n in [start, start+length-1] (in Z/(p-1)Z) of tau(x * g^n).
cplx geometric_progression_sum(const FunctionTable& tau, const DlogTable& dlog,
                               std::uint64_t x, std::int64_t start, std::uint64_t length);

}  // namespace tracekit
