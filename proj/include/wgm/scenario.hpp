#ifndef WGM_SCENARIO_HPP
#define WGM_SCENARIO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wgm/materials.hpp"
#include "wgm/resonator.hpp"

namespace wgm
{
// Microwave loss rates and cooperativity for the modeled conversion path.
struct ConversionModelInputs
{
    double cooperativity = 0.0;
    double rf_coupling_rate_hz = 0.0;
    double rf_absorption_rate_hz = 0.0;
};

// A fully validated experiment description. Every key carries its SI unit
// in its name in the config file (_m, _hz, _w, _k, _s, _db).
struct Scenario
{
    // materials
    std::vector<DispersionModel> materials;
    std::string resonator_material{lithium_niobate};
    Axis resonator_axis = Axis::extraordinary;
    std::string prism_material{diamond};
    double disk_temperature_k = 295.0;

    // geometry
    ResonatorGeometry geometry;
    bool rim_radius_given = false; // otherwise the matched optimum is used

    // pump / microwave
    double pump_wavelength_m = 0.0;
    double pump_power_w = 0.0;
    double rf_frequency_hz = 0.0;
    double rf_power_w = 0.0;

    // optics: exactly one of loaded_linewidth_hz / q_factor
    std::optional<double> loaded_linewidth_hz;
    std::optional<double> q_factor;
    double coupling_ratio = 1.0; // Gamma_c / Gamma_abs
    std::optional<double> measured_fsr_hz;
    double insertion_loss_db = 0.0;

    // conversion: exactly one of power_efficiency / model
    std::optional<double> power_efficiency;
    std::optional<ConversionModelInputs> model;
    double dispersion_offset_hz = 260e6;

    // detection: exactly one of snr_db / noise_floor_w
    double temperature_k = 300.0;
    int noise_factor = 2;
    double rbw_hz = 0.0;
    std::optional<double> snr_db;
    std::optional<double> noise_floor_w;
    std::optional<double> reference_nep_w_per_hz;
    double bandwidth_sampling_time_s = 0.0;
    double projected_q = 0.0;
    double projected_sampling_time_s = 0.0;

    // The document this scenario was built from; sweeps edit and re-validate it.
    nlohmann::json document;

    const DispersionModel& resonator_model() const;
    const DispersionModel& prism_model() const;
};

Scenario scenario_from_json(const nlohmann::json& document);
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);
} // namespace wgm

#endif
