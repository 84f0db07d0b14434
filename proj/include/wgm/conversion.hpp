#ifndef WGM_CONVERSION_HPP
#define WGM_CONVERSION_HPP

#include <cstdint>

#include "wgm/resonator.hpp"

namespace wgm
{
struct MicrowaveMode
{
    double frequency_hz = 0.0;
    std::int64_t orbital_momentum = 0;
    double absorption_rate_hz = 0.0;
    double nonlinear_rate_hz = 0.0;
    double coupling_rate_hz = 0.0;

    double total_loss_rate_hz() const { return nonlinear_rate_hz + absorption_rate_hz + coupling_rate_hz; }
};

// Pump with the two sidebands it feeds through the microwave mode.
struct ModeTriple
{
    OpticalMode pump;
    OpticalMode anti_stokes;
    OpticalMode stokes;
    MicrowaveMode microwave;
    double residual_detuning_hz = 0.0;

    // L_a - L_p = L_p - L_s = L_rf
    bool momentum_conserved() const;
};

struct PhaseMatch
{
    std::int64_t order = 0;   // L_rf
    double residual_hz = 0.0; // nu_rf - L_rf * fsr
    bool resonant = false;    // false when L_rf == 0
};

struct SidebandMomenta
{
    std::int64_t anti_stokes = 0;
    std::int64_t stokes = 0;
    bool degenerate = false; // L_rf == 0
};

struct PhotonEfficiency
{
    double value = 0.0;
    bool unphysical = false; // exceeds unity: inconsistent inputs
};

struct SidebandWeights
{
    double stokes = 1.0;
    double anti_stokes = 1.0;
};

struct ConversionBudget
{
    double pump_power_w = 0.0;
    double rf_power_w = 0.0;
    double power_efficiency = 0.0;              // per sideband
    double photon_efficiency_anti_stokes = 0.0; // per sideband
    double photon_efficiency_stokes = 0.0;
    double photon_efficiency_both = 0.0;
    double sideband_power_w = 0.0;              // per sideband
};

PhaseMatch phase_match_order(double rf_frequency_hz, double fsr_hz);

SidebandMomenta sideband_momenta(std::int64_t pump_momentum, std::int64_t rf_momentum);

// Manley-Rowe: eta_N = eta_P * nu_rf / nu_sideband
PhotonEfficiency manley_rowe(double power_efficiency, double rf_frequency_hz, double sideband_frequency_hz);
double manley_rowe_inverse(double photon_efficiency, double rf_frequency_hz, double sideband_frequency_hz);

double sideband_power(double rf_power_w, double power_efficiency);

// Resonant three-wave photon-number efficiency
//   4C / (1 + C)^2 * Gc / (Gc + Ga) * gc / (gc + ga)
double steady_state_efficiency(double cooperativity, double optical_coupling_hz,
                               double optical_absorption_hz, double rf_coupling_hz,
                               double rf_absorption_hz);

// Lorentzian weights of the two sidebands against the nearest modeled WGMs.
// The anti-Stokes mode sits k*fsr + offset above the pump, the Stokes mode
// k*fsr - offset below it, k = round((nu_rf) / fsr).
SidebandWeights sideband_asymmetry(double pump_frequency_hz, double fsr_hz, double rf_frequency_hz,
                                   double dispersion_offset_hz, double linewidth_hz);

// Both sidebands accounted symmetrically at the measured per-sideband efficiency.
ConversionBudget make_conversion_budget(double pump_power_w, double rf_power_w, double power_efficiency,
                                        double rf_frequency_hz, double pump_frequency_hz);
} // namespace wgm

#endif
