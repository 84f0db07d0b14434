#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "wgm/constants.hpp"
#include "wgm/detection.hpp"
#include "wgm/errors.hpp"

using namespace wgm;

TEST_CASE("counting_feasible reproduces the room-temperature estimate")
{
    CHECK(counting_feasible(8.28e-21, 2e6, 5e-9, 0.13e12));
    CHECK_FALSE(counting_feasible(8.28e-21, 2e6, 5e-9, 0.11e12));
    // dnu * tau = 1 reduces to S < h nu
    CHECK(counting_feasible(constants::h * 1e11 * 0.999, 1e6, 1e-6, 1e11));
    CHECK_FALSE(counting_feasible(constants::h * 1e11 * 1.001, 1e6, 1e-6, 1e11));

    const double kt = constants::k_B * 300.0;
    CHECK(counting_feasible(kt, 1e6, 1e-6, 6.26e12));
    CHECK_FALSE(counting_feasible(kt, 1e6, 1e-6, 6.24e12));
    CHECK_THROWS_AS(counting_feasible(0.0, 1.0, 1.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(counting_feasible(1.0, 1.0, 1.0, -1.0), ArgumentError);
}

TEST_CASE("min_countable_frequency")
{
    CHECK(min_countable_frequency(oracle::two_kt_300, 2e6, 5e-9) ==
          doctest::Approx(oracle::nu_min_2mhz_5ns).epsilon(1e-12));
    CHECK(std::abs(min_countable_frequency(8.28e-21, 2e6, 5e-9) / 0.125e12 - 1.0) < 0.01);
    CHECK(min_countable_frequency(8.28e-21, 2e6, 2.5e-9) ==
          doctest::Approx(0.5 * min_countable_frequency(8.28e-21, 2e6, 5e-9)).epsilon(1e-15));
    CHECK(min_countable_frequency(constants::k_B * 300.0, 1e6, 1e-6) ==
          doctest::Approx(oracle::kt_over_h_300).epsilon(1e-12));
}

TEST_CASE("max_counting_bandwidth")
{
    CHECK(max_counting_bandwidth(1.6e-15, 101.12e9, 32.2e-9) == doctest::Approx(oracle::max_bw_reference).epsilon(1e-12));
    CHECK(max_counting_bandwidth(oracle::two_kt_300, 101.12e9, 16e-9) ==
          doctest::Approx(oracle::max_bw_unity_16ns).epsilon(1e-12));
    CHECK(max_counting_bandwidth(8.28e-21, 101.12e9, 16e-9) == doctest::Approx(0.50e6).epsilon(0.02));
    for (double k : {0.1, 3.0, 1e4})
        CHECK(max_counting_bandwidth(k * 1.6e-15, 101.12e9, 32.2e-9) ==
              doctest::Approx(max_counting_bandwidth(1.6e-15, 101.12e9, 32.2e-9) / k).epsilon(1e-14));
}

TEST_CASE("nep_from_measurement")
{
    CHECK(nep_from_measurement(4e-4, 27.0, 1.23e9) == doctest::Approx(oracle::nep_paper_inputs).epsilon(1e-12));
    CHECK(nep_from_measurement(3e-3, 0.0, 1.0) == 3e-3);
    CHECK(nep_from_measurement(3e-3, 10.0, 1.0) == doctest::Approx(3e-4).epsilon(1e-15));
    CHECK_THROWS_AS(nep_from_measurement(0.0, 10.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(nep_from_measurement(1.0, 10.0, 0.0), ArgumentError);
}

TEST_CASE("thermal_nep_density")
{
    CHECK(thermal_nep_density(300.0, 2) == doctest::Approx(oracle::two_kt_300).epsilon(1e-14));
    CHECK(std::abs(thermal_nep_density(300.0, 2) / 8e-21 - 1.0) < 0.05);
    CHECK(thermal_nep_density(300.0, 1) == doctest::Approx(4.141947e-21).epsilon(1e-12));
    CHECK(thermal_nep_density(0.0, 2) == 0.0);
    CHECK_THROWS_AS(thermal_nep_density(300.0, 3), ArgumentError);
}

TEST_CASE("effective_temperature")
{
    CHECK(effective_temperature(300.0, 1e6, 1e6) == 300.0);
    CHECK(effective_temperature(300.0, 1e5, 1e6) == doctest::Approx(30.0));
    CHECK(effective_temperature(300.0, 0.0, 1e6) == 0.0);
    CHECK_THROWS_AS(effective_temperature(300.0, 2e6, 1e6), ArgumentError);
    CHECK_THROWS_AS(effective_temperature(300.0, 0.0, 0.0), ArgumentError);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i)
    {
        const double t = 1000.0 * u(rng);
        const double g = 1e3 + 1e8 * u(rng);
        const double ga = g * u(rng);
        const double te = effective_temperature(t, ga, g);
        CHECK(te <= t);
        CHECK(effective_temperature(2.0 * t, ga, g) == doctest::Approx(2.0 * te).epsilon(1e-14));
        CHECK(effective_temperature(t, 0.5 * ga, g) == doctest::Approx(0.5 * te).epsilon(1e-14));
    }
}

TEST_CASE("temperature/frequency crossover")
{
    CHECK(frequency_to_temperature(1e12) == doctest::Approx(oracle::one_thz_in_k).epsilon(1e-12));
    CHECK(std::abs(frequency_to_temperature(1e12) / 48.0 - 1.0) < 0.01);
    CHECK(temperature_to_frequency(300.0) == doctest::Approx(oracle::kt_over_h_300).epsilon(1e-12));
    for (double t : {0.01, 1.0, 48.0, 300.0, 1e4})
        CHECK(std::abs(frequency_to_temperature(temperature_to_frequency(t)) / t - 1.0) < 1e-12);
}

TEST_CASE("nep_gap_factor")
{
    CHECK(nep_gap_factor(1.6e-15, oracle::two_kt_300) == doctest::Approx(oracle::gap_reference).epsilon(1e-12));
    CHECK(nep_gap_factor(2e-20, 2e-20) == 1.0);
    CHECK(nep_gap_factor(oracle::nep_paper_inputs, oracle::two_kt_300) ==
          doctest::Approx(oracle::gap_formula).epsilon(1e-12));
}

TEST_CASE("detection budget")
{
    const auto b = assess_detection(oracle::two_kt_300, 1.9217e6, 5e-9, 101.12e9, 300.0, 2e6, 4e6);
    CHECK(b.effective_temperature_k == 150.0);
    CHECK(b.feasible == counting_feasible(b.nep_density_w_per_hz, b.bandwidth_hz, b.sampling_time_s,
                                          b.signal_frequency_hz));
    CHECK_FALSE(b.feasible);
    CHECK(b.min_countable_frequency_hz > b.signal_frequency_hz);
}

TEST_CASE("feasibility threshold, duality and monotonicity")
{
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> log_s(-23.0, -12.0);
    std::uniform_real_distribution<double> log_bw(0.0, 9.0);
    std::uniform_real_distribution<double> log_tau(-10.0, -3.0);
    std::uniform_real_distribution<double> shrink(0.0, 1.0);
    for (int i = 0; i < 10000; ++i)
    {
        const double s = std::pow(10.0, log_s(rng));
        const double bw = std::pow(10.0, log_bw(rng));
        const double tau = std::pow(10.0, log_tau(rng));
        const double nu = min_countable_frequency(s, bw, tau);
        CHECK_FALSE(counting_feasible(s, bw, tau, nu * (1.0 - 1e-6)));
        CHECK(counting_feasible(s, bw, tau, nu * (1.0 + 1e-6)));
        CHECK(std::abs(max_counting_bandwidth(s, nu, tau) / bw - 1.0) < 1e-12);

        const double probe = nu * (0.5 + shrink(rng));
        if (counting_feasible(s, bw, tau, probe))
        {
            const double f = 1e-3 + 0.998 * shrink(rng);
            CHECK(counting_feasible(s * f, bw, tau, probe));
            CHECK(counting_feasible(s, bw * f, tau, probe));
            CHECK(counting_feasible(s, bw, tau * f, probe));
        }
    }
}
