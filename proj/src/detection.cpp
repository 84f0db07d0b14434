#include "wgm/detection.hpp"

#include <cmath>

#include "wgm/constants.hpp"
#include "wgm/errors.hpp"

namespace wgm
{
namespace
{
void require_counting_inputs(double s, double a, double b)
{
    detail::require_positive(s, "NEP density");
    detail::require_positive(a, "bandwidth or frequency");
    detail::require_positive(b, "sampling time");
}
} // namespace

bool counting_feasible(double nep_density_w_per_hz, double bandwidth_hz, double sampling_time_s,
                       double signal_frequency_hz)
{
    require_counting_inputs(nep_density_w_per_hz, bandwidth_hz, sampling_time_s);
    detail::require_positive(signal_frequency_hz, "signal frequency");
    return nep_density_w_per_hz * bandwidth_hz * sampling_time_s < constants::h * signal_frequency_hz;
}

double min_countable_frequency(double nep_density_w_per_hz, double bandwidth_hz, double sampling_time_s)
{
    require_counting_inputs(nep_density_w_per_hz, bandwidth_hz, sampling_time_s);
    return nep_density_w_per_hz * bandwidth_hz * sampling_time_s / constants::h;
}

double max_counting_bandwidth(double nep_density_w_per_hz, double signal_frequency_hz, double sampling_time_s)
{
    require_counting_inputs(nep_density_w_per_hz, signal_frequency_hz, sampling_time_s);
    return constants::h * signal_frequency_hz / (nep_density_w_per_hz * sampling_time_s);
}

double nep_from_measurement(double input_power_w, double snr_db, double rbw_hz)
{
    detail::require_positive(input_power_w, "input power");
    detail::require_positive(rbw_hz, "resolution bandwidth");
    if (!std::isfinite(snr_db))
        throw ArgumentError("SNR must be finite");
    return input_power_w * std::pow(10.0, -snr_db / 10.0) / rbw_hz;
}

double thermal_nep_density(double temperature_k, int factor)
{
    if (factor != 1 && factor != 2)
        throw ArgumentError("thermal noise factor must be 1 or 2");
    detail::require_non_negative(temperature_k, "temperature");
    return factor * constants::k_B * temperature_k;
}

double effective_temperature(double temperature_k, double absorption_rate_hz, double total_rate_hz)
{
    detail::require_non_negative(temperature_k, "temperature");
    detail::require_positive(total_rate_hz, "total loss rate");
    detail::require_non_negative(absorption_rate_hz, "absorption rate");
    if (absorption_rate_hz > total_rate_hz)
        throw ArgumentError("absorption rate exceeds the total loss rate");
    return temperature_k * (absorption_rate_hz / total_rate_hz);
}

double temperature_to_frequency(double temperature_k)
{
    detail::require_positive(temperature_k, "temperature");
    return constants::k_B * temperature_k / constants::h;
}

double frequency_to_temperature(double frequency_hz)
{
    detail::require_positive(frequency_hz, "frequency");
    return constants::h * frequency_hz / constants::k_B;
}

double nep_gap_factor(double measured_w_per_hz, double theory_w_per_hz)
{
    detail::require_positive(measured_w_per_hz, "measured NEP density");
    detail::require_positive(theory_w_per_hz, "theoretical NEP density");
    return theory_w_per_hz / measured_w_per_hz;
}

DetectionBudget assess_detection(double nep_density_w_per_hz, double bandwidth_hz, double sampling_time_s,
                                 double signal_frequency_hz, double temperature_k,
                                 double absorption_rate_hz, double total_rate_hz)
{
    DetectionBudget budget;
    budget.nep_density_w_per_hz = nep_density_w_per_hz;
    budget.bandwidth_hz = bandwidth_hz;
    budget.sampling_time_s = sampling_time_s;
    budget.signal_frequency_hz = signal_frequency_hz;
    budget.temperature_k = temperature_k;
    budget.effective_temperature_k = effective_temperature(temperature_k, absorption_rate_hz, total_rate_hz);
    budget.feasible = counting_feasible(nep_density_w_per_hz, bandwidth_hz, sampling_time_s, signal_frequency_hz);
    budget.min_countable_frequency_hz = min_countable_frequency(nep_density_w_per_hz, bandwidth_hz, sampling_time_s);
    budget.max_bandwidth_hz = max_counting_bandwidth(nep_density_w_per_hz, signal_frequency_hz, sampling_time_s);
    return budget;
}
} // namespace wgm
