#include "wgm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "wgm/constants.hpp"
#include "wgm/conversion.hpp"
#include "wgm/coupling.hpp"
#include "wgm/detection.hpp"
#include "wgm/errors.hpp"
#include "wgm/resonator.hpp"

namespace wgm
{
std::string_view to_string(ComparisonFlag flag)
{
    switch (flag)
    {
    case ComparisonFlag::match_within_tolerance: return "match-within-tolerance";
    case ComparisonFlag::known_discrepancy: return "known-discrepancy";
    case ComparisonFlag::no_published_value: return "no-paper-value";
    }
    return "no-paper-value";
}

ComparisonFlag comparison_flag_from_string(std::string_view text)
{
    if (text == "match-within-tolerance") return ComparisonFlag::match_within_tolerance;
    if (text == "known-discrepancy") return ComparisonFlag::known_discrepancy;
    if (text == "no-paper-value") return ComparisonFlag::no_published_value;
    throw ConfigError("unknown comparison flag '" + std::string(text) + "'");
}

std::string format_number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.11e", value);
    return buffer;
}

const Quantity* Report::find(std::string_view key) const
{
    for (const auto& q : quantities)
        if (q.key == key)
            return &q;
    return nullptr;
}

const Quantity& Report::at(std::string_view key) const
{
    if (const auto* q = find(key))
        return *q;
    throw ArgumentError("report has no quantity '" + std::string(key) + "'");
}

namespace
{
class Builder
{
public:
    explicit Builder(Report& report) : report_(report) {}

    void add(std::string key, double value, std::string unit, std::string operation)
    {
        if (!std::isfinite(value))
            throw NumericError(key + ": non-finite result");
        Quantity q;
        q.key = std::move(key);
        q.value = value;
        q.unit = std::move(unit);
        q.operation = std::move(operation);
        report_.quantities.push_back(std::move(q));
    }

    // Compare against a published figure at a relative tolerance.
    void add(std::string key, double value, std::string unit, std::string operation,
             double published, double tolerance)
    {
        if (!std::isfinite(value))
            throw NumericError(key + ": non-finite result");
        Quantity q;
        q.key = std::move(key);
        q.value = value;
        q.unit = std::move(unit);
        q.operation = std::move(operation);
        q.published_value = published;
        q.tolerance = tolerance;
        q.deviation = (value - published) / published;
        q.flag = std::abs(q.deviation) <= tolerance ? ComparisonFlag::match_within_tolerance
                                                    : ComparisonFlag::known_discrepancy;
        report_.quantities.push_back(std::move(q));
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

private:
    Report& report_;
};

// Names the quantity being computed when a module error escapes.
template <class F>
auto computing(const char* quantity, F&& f)
{
    try
    {
        return f();
    }
    catch (const DomainError& e)
    {
        throw DomainError(std::string(quantity) + ": " + e.what());
    }
    catch (const ArgumentError& e)
    {
        throw ArgumentError(std::string(quantity) + ": " + e.what());
    }
    catch (const NumericError& e)
    {
        throw NumericError(std::string(quantity) + ": " + e.what());
    }
}

double to_db(double ratio) { return 10.0 * std::log10(ratio); }
} // namespace

Report run_report(const Scenario& s)
{
    Report report;
    Builder b(report);

    const DispersionModel& core = s.resonator_model();
    const DispersionModel& prism = s.prism_model();

    // materials
    const double n_core = computing("resonator_index", [&] {
        return refractive_index(core, s.pump_wavelength_m, s.disk_temperature_k);
    });
    const double n_prism = computing("prism_index", [&] {
        return refractive_index(prism, s.pump_wavelength_m, s.disk_temperature_k);
    });
    b.add("resonator_index", n_core, "1", "refractive_index");
    b.add("prism_index", n_prism, "1", "refractive_index");

    // resonator
    const double nu_pump = constants::c / s.pump_wavelength_m;
    b.add("pump_frequency_hz", nu_pump, "Hz", "pump_frequency");
    const double fsr = free_spectral_range(s.geometry.major_radius_m, n_core);
    b.add("fsr_hz", fsr, "Hz", "free_spectral_range", 12.64e9, 0.03);

    const double linewidth = s.loaded_linewidth_hz ? *s.loaded_linewidth_hz
                                                   : linewidth_from_q(nu_pump, *s.q_factor);
    b.add("loaded_linewidth_hz", linewidth, "Hz", s.loaded_linewidth_hz ? "input" : "linewidth_from_q");
    b.add("q_factor", quality_factor(nu_pump, linewidth), "1", "quality_factor", 1e7, 0.05);

    const double intrinsic_rate = linewidth / (1.0 + s.coupling_ratio);
    const double coupling_rate = linewidth - intrinsic_rate;
    b.add("intrinsic_rate_hz", intrinsic_rate, "Hz", "rate_split");
    b.add("coupling_rate_hz", coupling_rate, "Hz", "rate_split");

    const std::int64_t pump_l = nearest_orbital_momentum(nu_pump, fsr);
    const double pump_mode = computing("pump_mode_frequency_hz", [&] {
        return mode_frequency(s.geometry, core, pump_l, s.disk_temperature_k, DispersionOrder::material);
    });
    b.add("pump_orbital_momentum", static_cast<double>(pump_l), "1", "nearest_orbital_momentum");
    b.add("pump_mode_frequency_hz", pump_mode, "Hz", "mode_frequency");
    b.add("pump_mode_detuning_hz", pump_mode - nu_pump, "Hz", "mode_frequency");
    b.add("local_dispersion_material_hz",
          computing("local_dispersion_material_hz", [&] {
              return local_dispersion(s.geometry, core, pump_l, s.disk_temperature_k, DispersionOrder::material);
          }),
          "Hz", "local_dispersion");
    b.add("local_dispersion_geometric_hz",
          computing("local_dispersion_geometric_hz", [&] {
              return local_dispersion(s.geometry, core, pump_l, s.disk_temperature_k, DispersionOrder::geometric);
          }),
          "Hz", "local_dispersion");

    // coupling
    const double theta = computing("incidence_angle_deg", [&] { return phase_match_angle(n_core, n_prism); });
    b.add("incidence_angle_deg", theta, "deg", "phase_match_angle");
    const RimRadius rim = optimal_rim_radius(s.geometry.major_radius_m, theta);
    b.add("optimal_rim_radius_m", rim.radius_m, "m", "optimal_rim_radius");
    const double rim_used = s.rim_radius_given ? s.geometry.rim_radius_m : rim.radius_m;
    b.add("rim_radius_m", rim_used, "m", s.rim_radius_given ? "input" : "optimal_rim_radius");
    b.add("fringe_axes_ratio",
          computing("fringe_axes_ratio", [&] { return fringe_axes_ratio(s.geometry.major_radius_m, rim_used); }),
          "1", "fringe_axes_ratio");
    const double contrast = computing("resonance_contrast", [&] {
        return 1.0 - transmission(0.0, intrinsic_rate, coupling_rate);
    });
    b.add("resonance_contrast", contrast, "1", "transmission", 0.9996, 1e-4);
    if (contrast > 0.0)
    {
        const CouplingRatios ratios = coupling_ratio_from_contrast(contrast);
        b.add("coupling_ratio_undercoupled", ratios.undercoupled, "1", "coupling_ratio_from_contrast");
        b.add("coupling_ratio_overcoupled", ratios.overcoupled, "1", "coupling_ratio_from_contrast");
    }

    // conversion
    const double matching_fsr = s.measured_fsr_hz.value_or(fsr);
    b.add("matching_fsr_hz", matching_fsr, "Hz", s.measured_fsr_hz ? "input" : "free_spectral_range");
    const PhaseMatch match = phase_match_order(s.rf_frequency_hz, matching_fsr);
    b.add("rf_orbital_momentum", static_cast<double>(match.order), "1", "phase_match_order", 8.0, 0.0);
    b.add("rf_residual_hz", match.residual_hz, "Hz", "phase_match_order");
    if (!match.resonant)
        b.note("no resonant order: rf frequency below half a free spectral range");
    const double sideband_offset = s.rf_frequency_hz + s.dispersion_offset_hz;
    b.add("sideband_offset_hz", sideband_offset, "Hz", "sideband_offset", 101.38e9, 1e-4);
    const PhaseMatch observed = phase_match_order(sideband_offset, matching_fsr);
    b.add("sideband_residual_hz", observed.residual_hz, "Hz", "phase_match_order", 260e6, 1e6 / 260e6);

    const SidebandMomenta momenta = computing("sideband_momenta", [&] {
        return sideband_momenta(pump_l, match.order);
    });
    b.add("anti_stokes_orbital_momentum", static_cast<double>(momenta.anti_stokes), "1", "sideband_momenta");
    b.add("stokes_orbital_momentum", static_cast<double>(momenta.stokes), "1", "sideband_momenta");

    ModeTriple triple;
    triple.pump = {pump_l, pump_mode, intrinsic_rate, coupling_rate};
    triple.anti_stokes = {momenta.anti_stokes, nu_pump + s.rf_frequency_hz, intrinsic_rate, coupling_rate};
    triple.stokes = {momenta.stokes, nu_pump - s.rf_frequency_hz, intrinsic_rate, coupling_rate};
    triple.microwave.frequency_hz = s.rf_frequency_hz;
    triple.microwave.orbital_momentum = match.order;
    triple.residual_detuning_hz = match.residual_hz;
    b.add("anti_stokes_frequency_hz", triple.anti_stokes.frequency_hz, "Hz", "sideband_frequency");
    b.add("stokes_frequency_hz", triple.stokes.frequency_hz, "Hz", "sideband_frequency");
    b.add("momentum_conserved", triple.momentum_conserved() ? 1.0 : 0.0, "bool", "sideband_momenta");

    const SidebandWeights weights = sideband_asymmetry(nu_pump, matching_fsr, s.rf_frequency_hz,
                                                       s.dispersion_offset_hz, linewidth);
    b.add("weight_anti_stokes", weights.anti_stokes, "1", "sideband_asymmetry");
    b.add("weight_stokes", weights.stokes, "1", "sideband_asymmetry");

    double power_efficiency = 0.0;
    if (s.power_efficiency)
    {
        power_efficiency = *s.power_efficiency;
        b.add("power_efficiency", power_efficiency, "1", "input", 5e-3, 1e-9);
    }
    else
    {
        const double eta_n = computing("model_photon_efficiency", [&] {
            return steady_state_efficiency(s.model->cooperativity, coupling_rate, intrinsic_rate,
                                           s.model->rf_coupling_rate_hz, s.model->rf_absorption_rate_hz);
        });
        b.add("model_photon_efficiency", eta_n, "1", "steady_state_efficiency");
        power_efficiency = manley_rowe_inverse(eta_n, s.rf_frequency_hz, triple.anti_stokes.frequency_hz);
        b.add("power_efficiency", power_efficiency, "1", "manley_rowe_inverse");
    }

    const ConversionBudget budget = computing("conversion_budget", [&] {
        return make_conversion_budget(s.pump_power_w, s.rf_power_w, power_efficiency, s.rf_frequency_hz, nu_pump);
    });
    b.add("photon_efficiency_anti_stokes", budget.photon_efficiency_anti_stokes, "1", "manley_rowe", 2.6e-6, 0.02);
    b.add("photon_efficiency_stokes", budget.photon_efficiency_stokes, "1", "manley_rowe", 2.6e-6, 0.02);
    b.add("photon_efficiency_both", budget.photon_efficiency_both, "1", "manley_rowe", 5.2e-6, 0.02);
    if (budget.photon_efficiency_anti_stokes > 1.0 || budget.photon_efficiency_stokes > 1.0)
        b.note("photon-number efficiency exceeds unity: inconsistent conversion inputs");
    b.add("sideband_power_w", budget.sideband_power_w, "W", "sideband_power");
    if (budget.sideband_power_w > 0.0 && s.pump_power_w > 0.0)
        b.add("pump_to_sideband_db", to_db(s.pump_power_w / budget.sideband_power_w), "dB", "sideband_power");

    // detection
    double snr_db = 0.0;
    if (s.snr_db)
    {
        snr_db = *s.snr_db;
        b.add("snr_db", snr_db, "dB", "input", 27.0, 1e-3);
        if (budget.sideband_power_w > 0.0)
            b.add("noise_floor_w", budget.sideband_power_w * std::pow(10.0, -snr_db / 10.0), "W", "noise_floor");
    }
    else
    {
        b.add("noise_floor_w", *s.noise_floor_w, "W", "input");
        if (budget.sideband_power_w > 0.0)
        {
            snr_db = to_db(budget.sideband_power_w / *s.noise_floor_w);
            b.add("snr_db", snr_db, "dB", "signal_to_noise", 27.0, 1e-3);
        }
    }

    const double nep_theory = thermal_nep_density(s.temperature_k, s.noise_factor);
    b.add("nep_theory_w_per_hz", nep_theory, "W/Hz", "thermal_nep_density", 8e-21, 0.05);

    std::optional<double> nep_measured;
    if (budget.sideband_power_w > 0.0)
    {
        nep_measured = computing("nep_measured_w_per_hz",
                                 [&] { return nep_from_measurement(s.rf_power_w, snr_db, s.rbw_hz); });
        b.add("nep_measured_w_per_hz", *nep_measured, "W/Hz", "nep_from_measurement", 1.6e-15, 0.05);
        b.add("nep_gap_factor_measured", nep_gap_factor(*nep_measured, nep_theory), "1", "nep_gap_factor",
              5e-6, 0.05);
    }
    else
        b.note("no sideband power: measured NEP undefined");

    if (s.reference_nep_w_per_hz)
    {
        b.add("nep_reference_w_per_hz", *s.reference_nep_w_per_hz, "W/Hz", "input");
        b.add("nep_gap_factor_reference", nep_gap_factor(*s.reference_nep_w_per_hz, nep_theory), "1",
              "nep_gap_factor", 5e-6, 0.05);
        b.add("max_counting_bandwidth_reference_hz",
              max_counting_bandwidth(*s.reference_nep_w_per_hz, s.rf_frequency_hz, s.bandwidth_sampling_time_s),
              "Hz", "max_counting_bandwidth", 1.3, 0.05);
    }
    if (nep_measured)
        b.add("max_counting_bandwidth_measured_hz",
              max_counting_bandwidth(*nep_measured, s.rf_frequency_hz, s.bandwidth_sampling_time_s), "Hz",
              "max_counting_bandwidth", 1.3, 0.05);

    const double unity_bandwidth = max_counting_bandwidth(nep_theory, s.rf_frequency_hz, s.bandwidth_sampling_time_s);
    b.add("unity_max_bandwidth_hz", unity_bandwidth, "Hz", "max_counting_bandwidth", 0.52e6, 0.10);
    b.add("required_q_unity", quality_factor(nu_pump, unity_bandwidth), "1", "quality_factor", 4e8, 0.10);

    b.add("effective_temperature_k", effective_temperature(s.temperature_k, intrinsic_rate, linewidth), "K",
          "effective_temperature");

    const double projected_bandwidth = linewidth_from_q(nu_pump, s.projected_q);
    b.add("projected_linewidth_hz", projected_bandwidth, "Hz", "linewidth_from_q", 2e6, 0.05);
    b.add("min_countable_frequency_hz",
          min_countable_frequency(nep_theory, projected_bandwidth, s.projected_sampling_time_s), "Hz",
          "min_countable_frequency", 0.12e12, 0.10);
    b.add("counting_feasible_at_signal",
          counting_feasible(nep_theory, projected_bandwidth, s.projected_sampling_time_s, s.rf_frequency_hz) ? 1.0
                                                                                                              : 0.0,
          "bool", "counting_feasible");
    b.add("thermal_crossover_frequency_hz", temperature_to_frequency(s.temperature_k), "Hz",
          "temperature_frequency_crossover");
    b.add("one_thz_temperature_k", frequency_to_temperature(1e12), "K", "temperature_frequency_crossover", 48.0,
          0.01);

    b.note(std::string("convention: ") + std::string(convention_note));
    b.note("contrast is attributed entirely to the coupling ratio; interference in the collection optics is not modeled");
    b.note("power_efficiency is end-to-end: microwave coupling loss is not separated from conversion");
    if (s.reference_nep_w_per_hz)
    {
        const double tau = constants::h * s.rf_frequency_hz / (*s.reference_nep_w_per_hz * 1.3);
        b.note("sampling time that reproduces a 1.3 Hz counting bandwidth at the reference NEP: " +
               format_number(tau) + " s");
    }
    if (nep_measured)
        b.note("NEP from power/SNR/RBW differs from the published 1.6e-15 W/Hz; both are listed");
    return report;
}

std::string render_report(const Report& report)
{
    std::ostringstream os;
    os << "# wgm report v1\n";
    for (const auto& q : report.quantities)
    {
        os << q.key << " value=" << format_number(q.value) << " unit=" << q.unit << " op=" << q.operation;
        if (q.published_value)
            os << " paper=" << format_number(*q.published_value) << " tolerance=" << format_number(q.tolerance)
               << " deviation=" << format_number(q.deviation);
        os << " flag=" << to_string(q.flag) << '\n';
    }
    for (const auto& n : report.notes)
        os << "# note: " << n << '\n';
    return os.str();
}

std::map<std::string, ParsedQuantity> parse_report(std::string_view text)
{
    std::map<std::string, ParsedQuantity> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        std::string key;
        fields >> key;
        ParsedQuantity q;
        std::string field;
        while (fields >> field)
        {
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw ConfigError("malformed report field '" + field + "'");
            const std::string name = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            if (name == "value")
                q.value = std::stod(value);
            else if (name == "unit")
                q.unit = value;
            else if (name == "op")
                q.operation = value;
            else if (name == "flag")
                q.flag = comparison_flag_from_string(value);
        }
        out.emplace(key, q);
    }
    return out;
}
} // namespace wgm
