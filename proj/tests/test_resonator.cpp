#include <doctest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "wgm/constants.hpp"
#include "wgm/errors.hpp"
#include "wgm/resonator.hpp"

using namespace wgm;

namespace
{
const DispersionModel& ln_e() { return find_material(shipped_materials(), lithium_niobate, Axis::extraordinary); }
const ResonatorGeometry disk{1.8e-3, 1.8e-3, 2.2e-4};
} // namespace

TEST_CASE("free spectral range of the 1.8 mm disk")
{
    const double fsr = free_spectral_range(disk, ln_e(), 1.56e-6, 295.0);
    CHECK(fsr == doctest::Approx(oracle::fsr_hz).epsilon(1e-12));
    CHECK(std::abs(fsr / 12.64e9 - 1.0) < 0.03);
    CHECK(free_spectral_range(1.8e-3, 1.0) == doctest::Approx(constants::c / (2 * constants::pi * 1.8e-3)));
    CHECK(free_spectral_range(1.8e-3, 1.0) == doctest::Approx(26.51e9).epsilon(1e-3));
}

TEST_CASE("FSR scales inversely with radius")
{
    const double base = free_spectral_range(disk, ln_e(), 1.56e-6, 295.0);
    for (double k : {0.5, 2.0, 10.0})
    {
        ResonatorGeometry g = disk;
        g.major_radius_m *= k;
        g.rim_radius_m *= k;
        CHECK(std::abs(free_spectral_range(g, ln_e(), 1.56e-6, 295.0) * k / base - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(free_spectral_range(disk, ln_e(), 20e-6, 295.0), DomainError);
}

TEST_CASE("quality factor and its inverse")
{
    CHECK(quality_factor(192.17e12, 20e6) == doctest::Approx(9.6085e6).epsilon(1e-12));
    CHECK(linewidth_from_q(192.17e12, 4e8) == doctest::Approx(480425.0).epsilon(1e-12));
    CHECK(std::abs(linewidth_from_q(192.17e12, 4e8) / 0.52e6 - 1.0) < 0.10);
    CHECK(quality_factor(5e9, 5e9) == 1.0);
    CHECK_THROWS_AS(quality_factor(0.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(quality_factor(1.0, -1.0), ArgumentError);
    CHECK_THROWS_AS(linewidth_from_q(1.0, 0.0), ArgumentError);

    for (double nu : {1e9, 1.9e14, 5e14})
        for (double dnu : {1.0, 2e7, 3.3e9})
            CHECK(std::abs(linewidth_from_q(nu, quality_factor(nu, dnu)) / dnu - 1.0) < 1e-12);
}

TEST_CASE("mode_frequency with material dispersion matches the bracketing oracle")
{
    for (int k = -1; k <= 1; ++k)
    {
        const double nu = mode_frequency(disk, ln_e(), oracle::pump_l + k, 295.0, DispersionOrder::material);
        CHECK(nu == doctest::Approx(oracle::order0_modes[k + 1]).epsilon(1e-14));
    }
    const double nu = mode_frequency(disk, ln_e(), oracle::pump_l, 295.0);
    CHECK(std::abs(nu - oracle::pump_hz) < oracle::fsr_hz);
    CHECK(nearest_orbital_momentum(oracle::pump_hz, oracle::fsr_hz) == oracle::pump_l);
}

TEST_CASE("mode_frequency with the geometric term matches the oracle")
{
    for (int k = -1; k <= 1; ++k)
    {
        const double nu = mode_frequency(disk, ln_e(), oracle::pump_l + k, 295.0, DispersionOrder::geometric);
        CHECK(nu == doctest::Approx(oracle::order1_modes[k + 1]).epsilon(1e-14));
    }
}

TEST_CASE("constant index: exactly equidistant spectrum at order 0")
{
    const auto m = constant_index_model(2.2);
    const double fsr = free_spectral_range(disk.major_radius_m, 2.2);
    for (std::int64_t l : {10, 1000, 15495, 40000})
    {
        const double a = mode_frequency(disk, m, l, 295.0);
        const double b = mode_frequency(disk, m, l + 1, 295.0);
        CHECK(std::abs((b - a) - fsr) < 1.0);
        CHECK(std::abs(a - static_cast<double>(l) * fsr) < 1.0);
        CHECK(std::abs(local_dispersion(disk, m, l, 295.0)) < 1.0);
    }
}

TEST_CASE("constant index: order-1 second difference equals the closed form")
{
    const auto m = constant_index_model(2.2);
    const double d2 = local_dispersion(disk, m, oracle::pump_l, 295.0, DispersionOrder::geometric);
    CHECK(d2 != 0.0);
    CHECK(d2 == doctest::Approx(oracle::const_index_2p2_order1_second_diff).epsilon(1e-3));
}

TEST_CASE("local dispersion for lithium niobate")
{
    const double d0 = local_dispersion(disk, ln_e(), oracle::pump_l, 295.0, DispersionOrder::material);
    const double d1 = local_dispersion(disk, ln_e(), oracle::pump_l, 295.0, DispersionOrder::geometric);
    CHECK(d0 != 0.0);
    CHECK(d0 == doctest::Approx(oracle::order0_second_diff).epsilon(2e-4));
    CHECK(d1 == doctest::Approx(oracle::order1_second_diff).epsilon(2e-4));
    CHECK(d1 != doctest::Approx(d0).epsilon(1e-3));
}

TEST_CASE("frequency per orbital momentum is non-increasing for normal dispersion")
{
    double previous = INFINITY;
    for (std::int64_t l = 13000; l <= 18000; l += 250)
    {
        const double per_l = mode_frequency(disk, ln_e(), l, 295.0) / static_cast<double>(l);
        CHECK(per_l <= previous);
        previous = per_l;
    }
}

TEST_CASE("mode_frequency errors")
{
    CHECK_THROWS_AS(mode_frequency(disk, ln_e(), 0, 295.0), ArgumentError);
    // L = 3 puts the resonance far outside the law's window.
    CHECK_THROWS_AS(mode_frequency(disk, ln_e(), 3, 295.0), DomainError);

    // A law whose pole sits right at the iteration keeps the fixed point from settling.
    DispersionModel wild = constant_index_model(2.0);
    wild.terms.push_back({-2.9, 2.3});
    wild.min_wavelength_um = 1e-3;
    wild.max_wavelength_um = 1e6;
    CHECK_THROWS(mode_frequency(disk, wild, oracle::pump_l, 295.0));
}

TEST_CASE("geometry validation")
{
    CHECK_NOTHROW(disk.validate());
    CHECK_THROWS_AS((ResonatorGeometry{1e-3, 2e-3, 1e-4}.validate()), ArgumentError);
    CHECK_THROWS_AS((ResonatorGeometry{1e-3, 0.0, 1e-4}.validate()), ArgumentError);
    CHECK_THROWS_AS((ResonatorGeometry{1e-3, 1e-3, 0.0}.validate()), ArgumentError);
    OpticalMode m{15495, 192e12, 10e6, 10e6};
    CHECK(m.loaded_linewidth_hz() == 20e6);
    CHECK(m.quality_factor() == doctest::Approx(9.6e6));
}
