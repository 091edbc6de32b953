#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tracekit/errors.hpp"

namespace tracekit {

/// A validated modulus m >= 2 with its factorization.
///
/// Factorization is by trial division, so construction is O(sqrt(m));
/// intended range is desk scale (m up to ~1e7, with headroom for the
/// arithmetic itself up to ~2^62 products).
class Modulus {
public:
    explicit Modulus(std::uint64_t m);

    std::uint64_t value() const { return m_; }
    bool is_prime() const { return is_prime_; }
    /// (prime, exponent) pairs, increasing primes.
    const std::vector<std::pair<std::uint64_t, unsigned>>& factorization() const {
        return factors_;
    }
    /// Number of distinct prime factors.
    unsigned omega() const { return static_cast<unsigned>(factors_.size()); }
    bool is_squarefree() const;

private:
    std::uint64_t m_;
    bool is_prime_;
    std::vector<std::pair<std::uint64_t, unsigned>> factors_;
};

/// (x * y) mod m with a 128-bit intermediate; safe for m < 2^63.
inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m);
inline std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, const Modulus& m) {
    return pow_mod(x, e, m.value());
}

/// Inverse of x modulo m. Throws NotInvertible when gcd(x, m) > 1.
std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t m);
inline std::uint64_t mod_inverse(std::uint64_t x, const Modulus& m) {
    return mod_inverse(x, m.value());
}

/// Legendre symbol (a/p) for an odd prime p: 0, 1 or -1.
int legendre_symbol(std::uint64_t a, const Modulus& p);

/// Smallest g >= 2 generating the full multiplicative group mod p.
/// Rejects p = 2.
std::uint64_t primitive_root(const Modulus& p);

/// Reduce a signed coefficient into [0, m).
inline std::uint64_t reduce_mod(std::int64_t c, std::uint64_t m) {
    std::int64_t r = c % static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

/// Horner evaluation of a polynomial with signed integer coefficients
/// (coeffs[k] is the coefficient of X^k) at x, mod m.
std::uint64_t poly_eval_mod(const std::vector<std::int64_t>& coeffs, std::uint64_t x,
                            std::uint64_t m);

/// A quotient of integer polynomials evaluated in F_p; poles map to a
/// designated value (the convention downstream is pole_value = 0).
struct RationalFunctionModM {
    std::vector<std::int64_t> numerator{0};    // coeff of X^k at index k
    std::vector<std::int64_t> denominator{1};
    std::uint64_t pole_value = 0;

    static RationalFunctionModM polynomial(std::vector<std::int64_t> coeffs) {
        return {std::move(coeffs), {1}, 0};
    }
};

/// f1(n) * f2(n)^{-1} mod m, or nullopt when n is a pole (f2(n) = 0).
/// Requires m prime.
std::optional<std::uint64_t> rational_eval(const RationalFunctionModM& f, std::uint64_t n,
                                           const Modulus& m);

}  // namespace tracekit
