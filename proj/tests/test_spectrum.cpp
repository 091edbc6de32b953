#include <doctest.h>

#include <numbers>
#include <random>

#include "tracekit/spectrum.hpp"

using namespace tracekit;

namespace {

FunctionTable random_unit_table(std::uint64_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<cplx> v(m);
    for (auto& z : v) z = std::polar(1.0, angle(rng));
    return FunctionTable(Modulus(m), std::move(v));
}

double max_entry_diff(const FunctionTable& a, const FunctionTable& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.m(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

}  // namespace

TEST_CASE("FunctionTable recomputes sup norm and validates length") {
    FunctionTable t(Modulus(3), {cplx{1, 0}, cplx{0, -2}, cplx{0.5, 0.5}});
    CHECK(t.sup_norm == doctest::Approx(2.0));
    CHECK_THROWS_AS(FunctionTable(Modulus(3), {cplx{1, 0}}), OutOfRange);
    CHECK(t.at(-1) == t.values[2]);
    CHECK(t.at(5) == t.values[2]);
}

TEST_CASE("dft_naive closed forms") {
    const double s5 = std::sqrt(5.0);

    // indicator of {0}: flat spectrum 1/sqrt(5)
    std::vector<cplx> ind(5, cplx{0, 0});
    ind[0] = {1, 0};
    FunctionTable hat = dft_naive(FunctionTable(Modulus(5), ind));
    for (const auto& z : hat.values) CHECK(std::abs(z - cplx{1.0 / s5, 0.0}) < 1e-12);

    // all ones: sqrt(5) delta at h = 0
    hat = dft_naive(FunctionTable(Modulus(5), std::vector<cplx>(5, cplx{1, 0})));
    CHECK(std::abs(hat.values[0] - cplx{s5, 0}) < 1e-12);
    for (int h = 1; h < 5; ++h) CHECK(std::abs(hat.values[h]) < 1e-12);

    // phi(x) = e_5(x): with the plus-sign kernel the spike sits at h = -1
    std::vector<cplx> chr(5);
    for (int x = 0; x < 5; ++x)
        chr[x] = std::polar(1.0, 2.0 * std::numbers::pi * x / 5.0);
    hat = dft_naive(FunctionTable(Modulus(5), chr));
    CHECK(std::abs(hat.values[4] - cplx{s5, 0}) < 1e-12);
    for (int h = 0; h < 4; ++h) CHECK(std::abs(hat.values[h]) < 1e-12);
}

TEST_CASE("dft_fast matches dft_naive") {
    std::mt19937_64 rng(7);
    SUBCASE("all m up to 128") {
        for (std::uint64_t m = 2; m <= 128; ++m) {
            FunctionTable phi = random_unit_table(m, rng);
            const double tol = 1e-9 * std::sqrt(static_cast<double>(m));
            CHECK(max_entry_diff(dft_fast(phi), dft_naive(phi)) < tol);
        }
    }
    SUBCASE("prime, power-of-two and composite spot sizes") {
        for (std::uint64_t m : {101ull, 256ull, 360ull, 997ull, 4096ull, 6000ull}) {
            FunctionTable phi = random_unit_table(m, rng);
            const double tol = 1e-9 * std::sqrt(static_cast<double>(m));
            CHECK(max_entry_diff(dft_fast(phi), dft_naive(phi)) < tol);
        }
    }
    SUBCASE("constant table at m = 9973") {
        FunctionTable hat =
            dft_fast(FunctionTable(Modulus(9973), std::vector<cplx>(9973, cplx{1, 0})));
        CHECK(std::abs(hat.values[0] - std::sqrt(9973.0)) < 1e-8);
        double off = 0.0;
        for (std::uint64_t h = 1; h < 9973; ++h) off = std::max(off, std::abs(hat.values[h]));
        CHECK(off < 1e-8);
    }
}

TEST_CASE("Parseval") {
    std::mt19937_64 rng(11);
    for (std::uint64_t m : {16ull, 97ull, 1000ull, 9973ull}) {
        FunctionTable phi = random_unit_table(m, rng);
        FunctionTable hat = dft_fast(phi);
        double e1 = 0.0, e2 = 0.0;
        for (const auto& z : phi.values) e1 += std::norm(z);
        for (const auto& z : hat.values) e2 += std::norm(z);
        CHECK(std::abs(e1 - e2) / e1 < 1e-8);
    }
}

TEST_CASE("inversion recovers the input") {
    std::mt19937_64 rng(13);
    for (std::uint64_t m : {17ull, 64ull, 210ull, 499ull}) {
        FunctionTable phi = random_unit_table(m, rng);
        CHECK(max_entry_diff(inverse_dft(dft_fast(phi)), phi) <
              1e-9 * std::sqrt(static_cast<double>(m)));
    }
}

TEST_CASE("shift/modulation duality, exhaustive at m = 17") {
    std::mt19937_64 rng(17);
    const std::uint64_t m = 17;
    FunctionTable phi = random_unit_table(m, rng);
    FunctionTable hat = dft_fast(phi);
    for (std::uint64_t a = 0; a < m; ++a) {
        std::vector<cplx> shifted(m);
        for (std::uint64_t x = 0; x < m; ++x) shifted[x] = phi.values[(x + a) % m];
        FunctionTable shat = dft_fast(FunctionTable(Modulus(m), shifted));
        for (std::uint64_t h = 0; h < m; ++h) {
            const cplx mod = std::polar(
                1.0, -2.0 * std::numbers::pi * static_cast<double>((h * a) % m) /
                         static_cast<double>(m));
            CHECK(std::abs(shat.values[h] - hat.values[h] * mod) < 1e-10);
        }
    }
}

TEST_CASE("make_spectral_pair") {
    SpectralPair ones = make_spectral_pair(
        FunctionTable(Modulus(25), std::vector<cplx>(25, cplx{1, 0})));
    CHECK(ones.c == doctest::Approx(5.0));

    std::vector<cplx> ind(4, cplx{0, 0});
    ind[0] = {1, 0};
    SpectralPair spike = make_spectral_pair(FunctionTable(Modulus(4), ind));
    CHECK(spike.c == doctest::Approx(1.0));
}
