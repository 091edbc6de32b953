#include <doctest.h>

#include <numbers>
#include <set>

#include "tracekit/tracezoo.hpp"

using namespace tracekit;

namespace {

cplx ep(std::uint64_t residue, std::uint64_t m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(residue % m) /
                               static_cast<double>(m));
}

// Direct O(p) oracle for B_3(n), no DFT involved.
double birch_entry_oracle(std::uint64_t n, std::uint64_t p) {
    cplx s{0, 0};
    for (std::uint64_t x = 0; x < p; ++x)
        s += ep((mul_mod(mul_mod(x, x, p), x, p) + mul_mod(n, x, p)) % p, p);
    return (s / std::sqrt(static_cast<double>(p))).real();
}

double kloosterman_entry_oracle(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
    cplx s{0, 0};
    for (std::uint64_t x = 1; x < p; ++x)
        s += ep((mul_mod(a, mod_inverse(x, p), p) + mul_mod(n, x, p)) % p, p);
    return (s / std::sqrt(static_cast<double>(p))).real();
}

}  // namespace

TEST_CASE("polynomial_phase_table") {
    // n^2 mod 5: 0,1,4,4,1
    FunctionTable t = polynomial_phase_table({0, 0, 1}, Modulus(5));
    CHECK(std::abs(t.values[0] - cplx{1, 0}) < 1e-14);
    CHECK(std::abs(t.values[1] - ep(1, 5)) < 1e-14);
    CHECK(std::abs(t.values[2] - ep(4, 5)) < 1e-14);
    CHECK(std::abs(t.values[3] - ep(4, 5)) < 1e-14);
    CHECK(std::abs(t.values[4] - ep(1, 5)) < 1e-14);

    // works at composite m and with negative coefficients
    FunctionTable u = polynomial_phase_table({-1, 1}, Modulus(6));
    CHECK(std::abs(u.values[0] - ep(5, 6)) < 1e-14);
    CHECK(std::abs(u.values[3] - ep(2, 6)) < 1e-14);
}

TEST_CASE("additive_char_table handles poles") {
    RationalFunctionModM inv = {{1}, {0, 1}, 0};  // 1/x
    FunctionTable t = additive_char_table(inv, Modulus(7));
    CHECK(std::abs(t.values[0]) == 0.0);  // pole of 1/x contributes 0
    for (std::uint64_t x = 1; x < 7; ++x)
        CHECK(std::abs(t.values[x] - ep(mod_inverse(x, 7), 7)) < 1e-14);
    CHECK_THROWS_AS(additive_char_table(inv, Modulus(15)), InvalidModulus);
}

TEST_CASE("twisted_char_table with the quadratic character") {
    // chi_index = (p-1)/2 makes chi the Legendre symbol
    const Modulus p(7);
    const std::uint64_t g = primitive_root(p);
    RationalFunctionModM id = RationalFunctionModM::polynomial({0, 1});
    RationalFunctionModM zero = RationalFunctionModM::polynomial({0});
    FunctionTable t = twisted_char_table(3, id, zero, p, g);
    CHECK(std::abs(t.values[0]) == 0.0);
    for (std::uint64_t x = 1; x < 7; ++x)
        CHECK(std::abs(t.values[x] - cplx{static_cast<double>(legendre_symbol(x, p)), 0}) <
              1e-12);
    CHECK_THROWS_AS(twisted_char_table(3, id, zero, p, 2), BadGenerator);  // ord(2) = 3
    CHECK_THROWS_AS(twisted_char_table(6, id, zero, p, g), InvalidModulus);
}

TEST_CASE("birch_all against the direct oracle") {
    const std::uint64_t p = 101;
    FunctionTable b = birch_all(Modulus(p));
    REQUIRE(b.m() == p);
    for (std::uint64_t n = 0; n < p; ++n) {
        CHECK(std::abs(b.values[n].imag()) < 1e-9);
        CHECK(b.values[n].real() == doctest::Approx(birch_entry_oracle(n, p)).epsilon(1e-9));
        CHECK(std::abs(b.values[n]) <= 2.0 + 1e-9);
    }
}

TEST_CASE("kloosterman_all against the direct oracle") {
    const std::uint64_t p = 101;
    for (std::uint64_t a : {1ull, 5ull}) {
        FunctionTable k = kloosterman_all(a, Modulus(p));
        CHECK(k.values[0].real() ==
              doctest::Approx(-1.0 / std::sqrt(static_cast<double>(p))).epsilon(1e-9));
        for (std::uint64_t n = 0; n < p; ++n) {
            CHECK(std::abs(k.values[n].imag()) < 1e-9);
            CHECK(k.values[n].real() ==
                  doctest::Approx(kloosterman_entry_oracle(a, n, p)).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(kloosterman_all(0, Modulus(101)), InvalidModulus);
    CHECK_THROWS_AS(kloosterman_all(1, Modulus(100)), InvalidModulus);
}

TEST_CASE("inverse_power_table") {
    FunctionTable t = inverse_power_table(2, 3, Modulus(11));
    CHECK(std::abs(t.values[0]) == 0.0);
    for (std::uint64_t x = 1; x < 11; ++x) {
        const std::uint64_t xbar = mod_inverse(x, 11);
        const std::uint64_t want = mul_mod(2, pow_mod(xbar, 3, 11), 11);
        CHECK(std::abs(t.values[x] - ep(want, 11)) < 1e-14);
    }
    CHECK_THROWS_AS(inverse_power_table(1, 0, Modulus(11)), OutOfRange);
}

TEST_CASE("extract_angles") {
    const std::uint64_t p = 101;
    SUBCASE("birch keeps every index") {
        AngleSample s = extract_angles(birch_all(Modulus(p)), AngleFamily::birch);
        CHECK(s.angles.size() == p);
        FunctionTable b = birch_all(Modulus(p));
        for (std::size_t i = 0; i < s.angles.size(); ++i) {
            CHECK(s.angles[i] >= 0.0);
            CHECK(s.angles[i] <= std::numbers::pi);
            CHECK(2.0 * std::cos(s.angles[i]) ==
                  doctest::Approx(b.values[s.ns[i]].real()).epsilon(1e-7));
        }
    }
    SUBCASE("kloosterman drops n = 0") {
        AngleSample s = extract_angles(kloosterman_all(1, Modulus(p)), AngleFamily::kloosterman);
        CHECK(s.angles.size() == p - 1);
        CHECK(std::set<std::uint64_t>(s.ns.begin(), s.ns.end()).count(0) == 0);
    }
    SUBCASE("rejects bad tables") {
        std::vector<cplx> big(5, cplx{3.0, 0.0});
        CHECK_THROWS_AS(extract_angles(FunctionTable(Modulus(5), big), AngleFamily::birch),
                        WeilViolation);
        std::vector<cplx> im(5, cplx{0.0, 1.0});
        CHECK_THROWS_AS(extract_angles(FunctionTable(Modulus(5), im), AngleFamily::birch),
                        NotRealValued);
    }
}

TEST_CASE("chebyshev_U recurrence vs trig closed form") {
    CHECK(chebyshev_U(0, 0.37) == 1.0);
    CHECK(chebyshev_U(1, 0.37) == 0.37);
    CHECK(chebyshev_U(2, 0.5) == doctest::Approx(0.25 - 1.0));
    for (double theta : {0.3, 1.1, 2.0, 2.9}) {
        const double x = 2.0 * std::cos(theta);
        for (unsigned d = 0; d <= 8; ++d)
            CHECK(chebyshev_U(d, x) ==
                  doctest::Approx(std::sin((d + 1) * theta) / std::sin(theta)).epsilon(1e-10));
    }
}

TEST_CASE("value_set_indicator") {
    // squares mod 7: {0, 1, 2, 4}
    ValueSet vs = value_set_indicator({0, 0, 1}, Modulus(7));
    CHECK(vs.delta_f == doctest::Approx(4.0 / 7.0));
    for (std::uint64_t x = 0; x < 7; ++x) {
        const bool in = (x == 0 || x == 1 || x == 2 || x == 4);
        CHECK(vs.indicator.values[x].real() == (in ? 1.0 : 0.0));
    }
    CHECK_THROWS_AS(value_set_indicator({3}, Modulus(7)), DegenerateInput);
}
