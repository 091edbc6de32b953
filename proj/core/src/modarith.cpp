#include "tracekit/modarith.hpp"

#include <numeric>

namespace tracekit {

Modulus::Modulus(std::uint64_t m) : m_(m), is_prime_(false) {
    if (m < 2) throw InvalidModulus("modulus must be >= 2");
    std::uint64_t n = m;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            factors_.emplace_back(d, e);
        }
    }
    if (n > 1) factors_.emplace_back(n, 1u);
    is_prime_ = factors_.size() == 1 && factors_[0].second == 1;
}

bool Modulus::is_squarefree() const {
    for (const auto& [p, e] : factors_)
        if (e > 1) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
    std::uint64_t base = x % m, result = 1 % m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t m) {
    // Extended Euclid on (x mod m, m).
    std::int64_t a = static_cast<std::int64_t>(x % m), b = static_cast<std::int64_t>(m);
    std::int64_t u = 1, v = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    if (a != 1) throw NotInvertible("element not invertible: gcd > 1");
    if (u < 0) u += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(u);
}

int legendre_symbol(std::uint64_t a, const Modulus& p) {
    if (!p.is_prime() || p.value() == 2)
        throw InvalidModulus("Legendre symbol requires an odd prime");
    std::uint64_t r = a % p.value();
    if (r == 0) return 0;
    std::uint64_t s = pow_mod(r, (p.value() - 1) / 2, p.value());
    return s == 1 ? 1 : -1;
}

std::uint64_t primitive_root(const Modulus& p) {
    if (!p.is_prime()) throw InvalidModulus("primitive_root requires a prime");
    if (p.value() == 2) throw InvalidModulus("p = 2 rejected");
    const std::uint64_t q = p.value(), order = q - 1;
    Modulus group(order);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool generates = true;
        for (const auto& [f, e] : group.factorization()) {
            if (pow_mod(g, order / f, q) == 1) { generates = false; break; }
        }
        if (generates) return g;
    }
    throw ComputeError("no primitive root found");  // unreachable for prime p
}

std::uint64_t poly_eval_mod(const std::vector<std::int64_t>& coeffs, std::uint64_t x,
                            std::uint64_t m) {
    std::uint64_t acc = 0;
    const std::uint64_t xr = x % m;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = (mul_mod(acc, xr, m) + reduce_mod(*it, m)) % m;
    return acc;
}

std::optional<std::uint64_t> rational_eval(const RationalFunctionModM& f, std::uint64_t n,
                                           const Modulus& m) {
    if (f.denominator.empty()) throw DegenerateInput("zero denominator polynomial");
    const std::uint64_t num = poly_eval_mod(f.numerator, n, m.value());
    const std::uint64_t den = poly_eval_mod(f.denominator, n, m.value());
    if (den == 0) return std::nullopt;
    return mul_mod(num, mod_inverse(den, m.value()), m.value());
}

}  // namespace tracekit
