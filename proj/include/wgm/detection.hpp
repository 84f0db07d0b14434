#ifndef WGM_DETECTION_HPP
#define WGM_DETECTION_HPP

namespace wgm
{
// Photon-counting criterion in ordinary frequency: S * dnu * tau < h * nu.
// Bandwidths are in Hz and photon energies are h*nu; the angular reading
// (hbar * omega against an angular bandwidth) is off by 2 pi from the
// 0.12 THz room-temperature estimate this library reproduces.

struct DetectionBudget
{
    double nep_density_w_per_hz = 0.0;
    double bandwidth_hz = 0.0;
    double sampling_time_s = 0.0;
    double signal_frequency_hz = 0.0;
    double temperature_k = 0.0;
    double effective_temperature_k = 0.0;
    bool feasible = false;
    double min_countable_frequency_hz = 0.0;
    double max_bandwidth_hz = 0.0;
};

bool counting_feasible(double nep_density_w_per_hz, double bandwidth_hz, double sampling_time_s,
                       double signal_frequency_hz);

// nu* = S dnu tau / h
double min_countable_frequency(double nep_density_w_per_hz, double bandwidth_hz, double sampling_time_s);

// dnu_max = h nu / (S tau)
double max_counting_bandwidth(double nep_density_w_per_hz, double signal_frequency_hz, double sampling_time_s);

// S = P 10^(-snr/10) / rbw
double nep_from_measurement(double input_power_w, double snr_db, double rbw_hz);

// factor * k_B * T, factor 1 (equipartition) or 2 (all-resonant converter)
double thermal_nep_density(double temperature_k, int factor);

// T * Gamma_abs / Gamma
double effective_temperature(double temperature_k, double absorption_rate_hz, double total_rate_hz);

// nu = k_B T / h and back
double temperature_to_frequency(double temperature_k);
double frequency_to_temperature(double frequency_hz);

// S_theory / S_measured
double nep_gap_factor(double measured_w_per_hz, double theory_w_per_hz);

DetectionBudget assess_detection(double nep_density_w_per_hz, double bandwidth_hz, double sampling_time_s,
                                 double signal_frequency_hz, double temperature_k,
                                 double absorption_rate_hz, double total_rate_hz);
} // namespace wgm

#endif
