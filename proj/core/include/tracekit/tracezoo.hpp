#pragma once

#include <string>

#include "tracekit/spectrum.hpp"

namespace tracekit {

enum class AngleFamily { birch, kloosterman };

/// Angles theta in [0, pi] with 2*cos(theta_n) equal to the (real) sum value
/// at n. Excluded indices (n = 0 for Kloosterman) are simply absent.
struct AngleSample {
    std::uint64_t p;
    AngleFamily family;
    std::vector<double> angles;          // angles[i] belongs to index ns[i]
    std::vector<std::uint64_t> ns;
};

/// phi(n) = e_m(P(n)) for an integer polynomial; works for any modulus.
FunctionTable polynomial_phase_table(const std::vector<std::int64_t>& P, const Modulus& m);

/// phi(n) = e_p(g(n)), with phi = 0 at poles of g.
FunctionTable additive_char_table(const RationalFunctionModM& g, const Modulus& p);

/// phi(n) = chi(f(n)) * e_p(g(n)), zero where f or g is undefined or
/// f(n) = 0. chi is the character with chi(gen^k) = e(chi_index * k / (p-1)).
FunctionTable twisted_char_table(std::uint64_t chi_index, const RationalFunctionModM& f,
                                 const RationalFunctionModM& g, const Modulus& p,
                                 std::uint64_t gen);

/// Full table n -> B_3(n) = (1/sqrt(p)) sum_x e_p(x^3 + n x), computed as one
/// bulk DFT of x -> e_p(x^3). Values are real up to float fuzz.
FunctionTable birch_all(const Modulus& p);

/// Full table n -> (1/sqrt(p)) sum_{x != 0} e_p(a*xbar + n x), one bulk DFT.
FunctionTable kloosterman_all(std::uint64_t a, const Modulus& p);

/// phi(0) = 0 and phi(x) = e_p(a * xbar^k) otherwise.
FunctionTable inverse_power_table(std::uint64_t a, unsigned k, const Modulus& p);

/// theta_n = arccos(clamp(Re value / 2, -1, 1)). Throws NotRealValued /
/// WeilViolation when the table is not a genuine Birch/Kloosterman-type
/// table (tolerance 1e-4).
AngleSample extract_angles(const FunctionTable& table, AngleFamily family);

/// Chebyshev U_d in the 2*cos(theta) argument convention:
/// U_0 = 1, U_1(x) = x, U_{d+1}(x) = x U_d(x) - U_{d-1}(x).
double chebyshev_U(unsigned d, double x);

/// Indicator of the value set P = f(F_p) plus its density |P|/p.
struct ValueSet {
    FunctionTable indicator;
    double delta_f;
};
ValueSet value_set_indicator(const std::vector<std::int64_t>& f, const Modulus& p);

}  // namespace tracekit
