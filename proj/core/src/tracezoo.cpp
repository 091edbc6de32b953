#include "tracekit/tracezoo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tracekit {

namespace {

// e_p(r) for an exact residue r in [0, p).
cplx e_p(std::uint64_t r, std::uint64_t p) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(p));
}

void require_prime(const Modulus& p, const char* what) {
    if (!p.is_prime()) throw InvalidModulus(std::string(what) + " requires a prime modulus");
}

}  // namespace

FunctionTable polynomial_phase_table(const std::vector<std::int64_t>& P, const Modulus& m) {
    const std::uint64_t q = m.value();
    std::vector<cplx> v(q);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
    for (std::uint64_t n = 0; n < q; ++n)
        v[n] = std::polar(1.0, step * static_cast<double>(poly_eval_mod(P, n, q)));
    return FunctionTable(m, std::move(v));
}

FunctionTable additive_char_table(const RationalFunctionModM& g, const Modulus& p) {
    require_prime(p, "additive_char_table");
    const std::uint64_t q = p.value();
    std::vector<cplx> v(q);
    for (std::uint64_t n = 0; n < q; ++n) {
        const auto gn = rational_eval(g, n, p);
        v[n] = gn ? e_p(*gn, q) : cplx{0.0, 0.0};
    }
    return FunctionTable(p, std::move(v));
}

FunctionTable twisted_char_table(std::uint64_t chi_index, const RationalFunctionModM& f,
                                 const RationalFunctionModM& g, const Modulus& p,
                                 std::uint64_t gen) {
    require_prime(p, "twisted_char_table");
    const std::uint64_t q = p.value();
    if (chi_index > q - 2) throw InvalidModulus("chi_index out of range [0, p-2]");

    // dlog of every nonzero residue against gen; also validates gen.
    std::vector<std::uint64_t> dlog(q, q);
    std::uint64_t acc = 1;
    for (std::uint64_t k = 0; k < q - 1; ++k) {
        if (dlog[acc] != q) throw BadGenerator("gen is not a primitive root");
        dlog[acc] = k;
        acc = mul_mod(acc, gen, q);
    }
    if (acc != 1) throw BadGenerator("gen is not a primitive root");

    const double chi_step =
        2.0 * std::numbers::pi * static_cast<double>(chi_index) / static_cast<double>(q - 1);
    std::vector<cplx> v(q, cplx{0.0, 0.0});
    for (std::uint64_t n = 0; n < q; ++n) {
        const auto fn = rational_eval(f, n, p);
        const auto gn = rational_eval(g, n, p);
        if (!fn || !gn || *fn == 0) continue;
        const cplx chi = std::polar(1.0, chi_step * static_cast<double>(dlog[*fn]));
        v[n] = chi * e_p(*gn, q);
    }
    return FunctionTable(p, std::move(v));
}

FunctionTable birch_all(const Modulus& p) {
    require_prime(p, "birch_all");
    const std::uint64_t q = p.value();
    std::vector<cplx> cubes(q);
    for (std::uint64_t x = 0; x < q; ++x)
        cubes[x] = e_p(mul_mod(mul_mod(x, x, q), x, q), q);
    return dft_fast(FunctionTable(p, std::move(cubes)));
}

FunctionTable kloosterman_all(std::uint64_t a, const Modulus& p) {
    require_prime(p, "kloosterman_all");
    const std::uint64_t q = p.value();
    if (a % q == 0) throw InvalidModulus("kloosterman_all requires gcd(a, p) = 1");
    std::vector<cplx> v(q, cplx{0.0, 0.0});
    for (std::uint64_t x = 1; x < q; ++x)
        v[x] = e_p(mul_mod(a % q, mod_inverse(x, q), q), q);
    return dft_fast(FunctionTable(p, std::move(v)));
}

FunctionTable inverse_power_table(std::uint64_t a, unsigned k, const Modulus& p) {
    require_prime(p, "inverse_power_table");
    const std::uint64_t q = p.value();
    if (a % q == 0) throw InvalidModulus("inverse_power_table requires gcd(a, p) = 1");
    if (k == 0) throw OutOfRange("k must be >= 1");
    std::vector<cplx> v(q, cplx{0.0, 0.0});
    for (std::uint64_t x = 1; x < q; ++x) {
        const std::uint64_t xk = pow_mod(mod_inverse(x, q), k, q);
        v[x] = e_p(mul_mod(a % q, xk, q), q);
    }
    return FunctionTable(p, std::move(v));
}

AngleSample extract_angles(const FunctionTable& table, AngleFamily family) {
    constexpr double kTol = 1e-4;
    const std::uint64_t q = table.m();
    AngleSample out{q, family, {}, {}};
    out.angles.reserve(q);
    out.ns.reserve(q);
    for (std::uint64_t n = 0; n < q; ++n) {
        if (family == AngleFamily::kloosterman && n == 0) continue;
        const cplx z = table.values[n];
        if (std::abs(z.imag()) > kTol)
            throw NotRealValued("table value has imaginary part beyond tolerance");
        if (std::abs(z.real()) > 2.0 + kTol)
            throw WeilViolation("table value exceeds the Weil bound");
        out.angles.push_back(std::acos(std::clamp(z.real() / 2.0, -1.0, 1.0)));
        out.ns.push_back(n);
    }
    return out;
}

double chebyshev_U(unsigned d, double x) {
    double prev = 1.0;  // U_0
    if (d == 0) return prev;
    double cur = x;     // U_1
    for (unsigned i = 1; i < d; ++i) {
        const double next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ValueSet value_set_indicator(const std::vector<std::int64_t>& f, const Modulus& p) {
    require_prime(p, "value_set_indicator");
    const std::uint64_t q = p.value();
    // Non-constant check: some coefficient of X^k, k >= 1, nonzero mod p.
    bool constant = true;
    for (std::size_t k = 1; k < f.size(); ++k)
        if (reduce_mod(f[k], q) != 0) { constant = false; break; }
    if (constant) throw DegenerateInput("polynomial is constant mod p");

    std::vector<cplx> v(q, cplx{0.0, 0.0});
    std::uint64_t count = 0;
    for (std::uint64_t y = 0; y < q; ++y) {
        const std::uint64_t img = poly_eval_mod(f, y, q);
        if (v[img] == cplx{0.0, 0.0}) ++count;
        v[img] = cplx{1.0, 0.0};
    }
    const double delta_f = static_cast<double>(count) / static_cast<double>(q);
    return ValueSet{FunctionTable(p, std::move(v)), delta_f};
}

}  // namespace tracekit
