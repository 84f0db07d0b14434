#include "wgm/conversion.hpp"

#include <cmath>

#include "wgm/errors.hpp"

namespace wgm
{
bool ModeTriple::momentum_conserved() const
{
    return anti_stokes.orbital_momentum - pump.orbital_momentum == microwave.orbital_momentum &&
           pump.orbital_momentum - stokes.orbital_momentum == microwave.orbital_momentum;
}

PhaseMatch phase_match_order(double rf_frequency_hz, double fsr_hz)
{
    detail::require_positive(rf_frequency_hz, "rf frequency");
    detail::require_positive(fsr_hz, "free spectral range");
    PhaseMatch match;
    match.order = std::llround(rf_frequency_hz / fsr_hz);
    match.residual_hz = std::fma(-static_cast<double>(match.order), fsr_hz, rf_frequency_hz);
    match.resonant = match.order != 0;
    return match;
}

SidebandMomenta sideband_momenta(std::int64_t pump_momentum, std::int64_t rf_momentum)
{
    if (rf_momentum < 0)
        throw ArgumentError("rf orbital momentum must be non-negative");
    if (rf_momentum == 0)
        return {pump_momentum, pump_momentum, true};
    if (pump_momentum <= rf_momentum)
        throw ArgumentError("pump orbital momentum must exceed the rf orbital momentum");
    return {pump_momentum + rf_momentum, pump_momentum - rf_momentum, false};
}

namespace
{
void check_manley_rowe_frequencies(double rf_frequency_hz, double sideband_frequency_hz)
{
    detail::require_positive(rf_frequency_hz, "rf frequency");
    detail::require_positive(sideband_frequency_hz, "sideband frequency");
    if (!(sideband_frequency_hz > rf_frequency_hz))
        throw ArgumentError("sideband frequency must exceed the rf frequency");
}
} // namespace

PhotonEfficiency manley_rowe(double power_efficiency, double rf_frequency_hz, double sideband_frequency_hz)
{
    detail::require_non_negative(power_efficiency, "power efficiency");
    check_manley_rowe_frequencies(rf_frequency_hz, sideband_frequency_hz);
    const double eta = power_efficiency * (rf_frequency_hz / sideband_frequency_hz);
    return {eta, eta > 1.0};
}

double manley_rowe_inverse(double photon_efficiency, double rf_frequency_hz, double sideband_frequency_hz)
{
    detail::require_non_negative(photon_efficiency, "photon efficiency");
    check_manley_rowe_frequencies(rf_frequency_hz, sideband_frequency_hz);
    return photon_efficiency * (sideband_frequency_hz / rf_frequency_hz);
}

double sideband_power(double rf_power_w, double power_efficiency)
{
    detail::require_non_negative(rf_power_w, "rf power");
    detail::require_non_negative(power_efficiency, "power efficiency");
    return rf_power_w * power_efficiency;
}

double steady_state_efficiency(double cooperativity, double optical_coupling_hz,
                               double optical_absorption_hz, double rf_coupling_hz,
                               double rf_absorption_hz)
{
    detail::require_non_negative(cooperativity, "cooperativity");
    detail::require_non_negative(optical_coupling_hz, "optical coupling rate");
    detail::require_non_negative(optical_absorption_hz, "optical absorption rate");
    detail::require_non_negative(rf_coupling_hz, "rf coupling rate");
    detail::require_non_negative(rf_absorption_hz, "rf absorption rate");
    const double optical_total = optical_coupling_hz + optical_absorption_hz;
    const double rf_total = rf_coupling_hz + rf_absorption_hz;
    if (!(optical_total > 0.0))
        throw ArgumentError("optical loss rates are all zero");
    if (!(rf_total > 0.0))
        throw ArgumentError("microwave loss rates are all zero");

    const double one_plus_c = 1.0 + cooperativity;
    const double mixing = 4.0 * cooperativity / (one_plus_c * one_plus_c);
    return mixing * (optical_coupling_hz / optical_total) * (rf_coupling_hz / rf_total);
}

SidebandWeights sideband_asymmetry(double pump_frequency_hz, double fsr_hz, double rf_frequency_hz,
                                   double dispersion_offset_hz, double linewidth_hz)
{
    detail::require_positive(linewidth_hz, "linewidth");
    detail::require_positive(fsr_hz, "free spectral range");
    const double k = std::round(rf_frequency_hz / fsr_hz);
    const double anti_stokes_mode = pump_frequency_hz + (k * fsr_hz + dispersion_offset_hz);
    const double stokes_mode = pump_frequency_hz - (k * fsr_hz - dispersion_offset_hz);
    // Offsets are formed relative to the pump so 200 THz carriers do not eat the MHz digits.
    const double delta_plus = rf_frequency_hz - (anti_stokes_mode - pump_frequency_hz);
    const double delta_minus = (pump_frequency_hz - stokes_mode) - rf_frequency_hz;
    const auto lorentz = [linewidth_hz](double delta) {
        const double x = 2.0 * delta / linewidth_hz;
        return 1.0 / (1.0 + x * x);
    };
    return {lorentz(delta_minus), lorentz(delta_plus)};
}

ConversionBudget make_conversion_budget(double pump_power_w, double rf_power_w, double power_efficiency,
                                        double rf_frequency_hz, double pump_frequency_hz)
{
    detail::require_non_negative(pump_power_w, "pump power");
    ConversionBudget budget;
    budget.pump_power_w = pump_power_w;
    budget.rf_power_w = rf_power_w;
    budget.power_efficiency = power_efficiency;
    budget.photon_efficiency_anti_stokes =
        manley_rowe(power_efficiency, rf_frequency_hz, pump_frequency_hz + rf_frequency_hz).value;
    budget.photon_efficiency_stokes =
        manley_rowe(power_efficiency, rf_frequency_hz, pump_frequency_hz - rf_frequency_hz).value;
    budget.photon_efficiency_both = budget.photon_efficiency_anti_stokes + budget.photon_efficiency_stokes;
    budget.sideband_power_w = sideband_power(rf_power_w, power_efficiency);
    return budget;
}
} // namespace wgm
