#include "wgm/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "wgm/errors.hpp"

namespace wgm
{
namespace
{
using nlohmann::json;

// Key-checked access to one config section.
class Section
{
public:
    Section(const json& root, std::string name, bool required, std::initializer_list<const char*> allowed)
        : name_(std::move(name))
    {
        if (!root.contains(name_))
        {
            if (required)
                throw ConfigError("missing section '" + name_ + "'");
            node_ = &empty_;
            return;
        }
        node_ = &root[name_];
        if (!node_->is_object())
            throw ConfigError("section '" + name_ + "' must be an object");
        const std::set<std::string> known(allowed.begin(), allowed.end());
        for (const auto& [key, _] : node_->items())
            if (!known.count(key))
                throw ConfigError("unknown key '" + path(key) + "'");
    }

    std::string path(std::string_view key) const { return name_ + "." + std::string(key); }
    bool has(const char* key) const { return node_->contains(key); }
    const json& raw(const char* key) const { return (*node_)[key]; }

    double number(const char* key) const
    {
        if (!has(key))
            throw ConfigError("missing key '" + path(key) + "'");
        const auto& v = (*node_)[key];
        if (!v.is_number())
            throw ConfigError("key '" + path(key) + "' must be a number");
        const double x = v.get<double>();
        if (!std::isfinite(x))
            throw ConfigError("key '" + path(key) + "' must be finite");
        return x;
    }

    double positive(const char* key) const
    {
        const double x = number(key);
        if (!(x > 0.0))
            throw ConfigError("key '" + path(key) + "' must be positive");
        return x;
    }

    double non_negative(const char* key) const
    {
        const double x = number(key);
        if (!(x >= 0.0))
            throw ConfigError("key '" + path(key) + "' must be non-negative");
        return x;
    }

    std::optional<double> optional_positive(const char* key) const
    {
        return has(key) ? std::optional<double>(positive(key)) : std::nullopt;
    }

    std::string text(const char* key, std::string fallback) const
    {
        if (!has(key))
            return fallback;
        const auto& v = (*node_)[key];
        if (!v.is_string())
            throw ConfigError("key '" + path(key) + "' must be a string");
        return v.get<std::string>();
    }

    void exactly_one(const char* a, const char* b) const
    {
        if (has(a) && has(b))
            throw ConfigError("keys '" + path(a) + "' and '" + path(b) + "' are mutually exclusive");
        if (!has(a) && !has(b))
            throw ConfigError("one of '" + path(a) + "' or '" + path(b) + "' is required");
    }

private:
    static inline const json empty_ = json::object();
    std::string name_;
    const json* node_ = nullptr;
};

std::string position_of(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            column = 1;
        }
        else
            ++column;
    }
    return std::to_string(line) + ":" + std::to_string(column);
}
} // namespace

const DispersionModel& Scenario::resonator_model() const
{
    return find_material(materials, resonator_material, resonator_axis);
}

const DispersionModel& Scenario::prism_model() const
{
    return find_material(materials, prism_material, Axis::isotropic);
}

Scenario scenario_from_json(const json& document)
{
    if (!document.is_object())
        throw ConfigError("scenario must be an object");
    static const std::set<std::string> sections = {"materials", "geometry", "pump", "microwave",
                                                   "optics", "conversion", "detection"};
    for (const auto& [key, _] : document.items())
        if (!sections.count(key))
            throw ConfigError("unknown section '" + key + "'");

    Scenario s;
    s.document = document;

    const Section mat(document, "materials", false,
                      {"temperature_k", "resonator", "resonator_axis", "prism", "models"});
    s.materials = shipped_materials();
    if (mat.has("models"))
    {
        const auto& models = mat.raw("models");
        if (!models.is_array())
            throw ConfigError("key 'materials.models' must be an array of material records");
        for (const auto& record : models)
        {
            DispersionModel m = model_from_json(record);
            bool replaced = false;
            for (auto& existing : s.materials)
                if (existing.name == m.name && existing.axis == m.axis)
                {
                    existing = m;
                    replaced = true;
                }
            if (!replaced)
                s.materials.push_back(std::move(m));
        }
    }
    if (mat.has("temperature_k"))
        s.disk_temperature_k = mat.positive("temperature_k");
    s.resonator_material = mat.text("resonator", s.resonator_material);
    s.resonator_axis = axis_from_string(mat.text("resonator_axis", std::string(to_string(s.resonator_axis))));
    s.prism_material = mat.text("prism", s.prism_material);
    (void)s.resonator_model();
    (void)s.prism_model();

    const Section geo(document, "geometry", true, {"major_radius_m", "rim_radius_m", "thickness_m"});
    s.geometry.major_radius_m = geo.positive("major_radius_m");
    s.geometry.thickness_m = geo.positive("thickness_m");
    s.rim_radius_given = geo.has("rim_radius_m");
    s.geometry.rim_radius_m = s.rim_radius_given ? geo.positive("rim_radius_m") : s.geometry.major_radius_m;
    if (s.geometry.rim_radius_m > s.geometry.major_radius_m)
        throw ConfigError("key 'geometry.rim_radius_m' must not exceed 'geometry.major_radius_m'");

    const Section pump(document, "pump", true, {"wavelength_m", "power_w"});
    s.pump_wavelength_m = pump.positive("wavelength_m");
    s.pump_power_w = pump.non_negative("power_w");

    const Section rf(document, "microwave", true, {"frequency_hz", "power_w"});
    s.rf_frequency_hz = rf.positive("frequency_hz");
    s.rf_power_w = rf.non_negative("power_w");

    const Section optics(document, "optics", true,
                         {"loaded_linewidth_hz", "q_factor", "coupling_ratio", "measured_fsr_hz",
                          "insertion_loss_db"});
    optics.exactly_one("loaded_linewidth_hz", "q_factor");
    s.loaded_linewidth_hz = optics.optional_positive("loaded_linewidth_hz");
    s.q_factor = optics.optional_positive("q_factor");
    s.coupling_ratio = optics.non_negative("coupling_ratio");
    s.measured_fsr_hz = optics.optional_positive("measured_fsr_hz");
    if (optics.has("insertion_loss_db"))
        s.insertion_loss_db = optics.non_negative("insertion_loss_db");

    const Section conv(document, "conversion", true, {"power_efficiency", "model", "dispersion_offset_hz"});
    conv.exactly_one("power_efficiency", "model");
    if (conv.has("power_efficiency"))
        s.power_efficiency = conv.non_negative("power_efficiency");
    else
    {
        if (!conv.raw("model").is_object())
            throw ConfigError("key 'conversion.model' must be an object");
        const json wrapped{{"conversion.model", conv.raw("model")}};
        const Section model(wrapped, "conversion.model", true,
                            {"cooperativity", "rf_coupling_rate_hz", "rf_absorption_rate_hz"});
        ConversionModelInputs inputs;
        inputs.cooperativity = model.non_negative("cooperativity");
        inputs.rf_coupling_rate_hz = model.non_negative("rf_coupling_rate_hz");
        inputs.rf_absorption_rate_hz = model.non_negative("rf_absorption_rate_hz");
        if (!(inputs.rf_coupling_rate_hz + inputs.rf_absorption_rate_hz > 0.0))
            throw ConfigError("conversion.model: microwave loss rates are all zero");
        s.model = inputs;
    }
    if (conv.has("dispersion_offset_hz"))
        s.dispersion_offset_hz = conv.number("dispersion_offset_hz");

    const Section det(document, "detection", true,
                      {"temperature_k", "noise_factor", "rbw_hz", "snr_db", "noise_floor_w",
                       "reference_nep_w_per_hz", "bandwidth_sampling_time_s", "projected_q",
                       "projected_sampling_time_s"});
    s.temperature_k = det.positive("temperature_k");
    const double factor = det.number("noise_factor");
    if (factor != 1.0 && factor != 2.0)
        throw ConfigError("key 'detection.noise_factor' must be 1 or 2");
    s.noise_factor = static_cast<int>(factor);
    s.rbw_hz = det.positive("rbw_hz");
    det.exactly_one("snr_db", "noise_floor_w");
    if (det.has("snr_db"))
        s.snr_db = det.number("snr_db");
    s.noise_floor_w = det.optional_positive("noise_floor_w");
    s.reference_nep_w_per_hz = det.optional_positive("reference_nep_w_per_hz");
    s.bandwidth_sampling_time_s = det.positive("bandwidth_sampling_time_s");
    s.projected_q = det.positive("projected_q");
    s.projected_sampling_time_s = det.positive("projected_sampling_time_s");

    return s;
}

Scenario parse_scenario(std::string_view text)
{
    json document;
    try
    {
        document = json::parse(text, nullptr, true, true);
    }
    catch (const json::parse_error& e)
    {
        throw ConfigError("parse error at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    return scenario_from_json(document);
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try
    {
        return parse_scenario(buffer.str());
    }
    catch (const ConfigError& e)
    {
        throw ConfigError(path + ": " + e.what());
    }
}
} // namespace wgm
