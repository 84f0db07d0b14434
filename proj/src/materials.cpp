#include "wgm/materials.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "wgm/errors.hpp"
#include "wgm_shipped_materials.hpp"

namespace wgm
{
namespace
{
std::string describe_window(const DispersionModel& model)
{
    std::ostringstream os;
    os << '[' << model.min_wavelength_um << ", " << model.max_wavelength_um << "] um";
    return os.str();
}
} // namespace

std::string_view to_string(Axis axis)
{
    switch (axis)
    {
    case Axis::ordinary: return "ordinary";
    case Axis::extraordinary: return "extraordinary";
    case Axis::isotropic: return "isotropic";
    }
    return "isotropic";
}

Axis axis_from_string(std::string_view text)
{
    if (text == "ordinary") return Axis::ordinary;
    if (text == "extraordinary") return Axis::extraordinary;
    if (text == "isotropic") return Axis::isotropic;
    throw ConfigError("unknown axis '" + std::string(text) + "'");
}

void DispersionModel::validate() const
{
    if (name.empty())
        throw ConfigError("material record without a name");
    if (!(min_wavelength_um > 0.0) || !(max_wavelength_um > min_wavelength_um))
        throw ConfigError("material '" + name + "': validity window must be non-empty and positive");
    if (terms.empty())
        throw ConfigError("material '" + name + "': no Sellmeier terms");
    for (const auto& term : terms)
    {
        if (!std::isfinite(term.strength) || !std::isfinite(term.resonance_um2))
            throw ConfigError("material '" + name + "': non-finite Sellmeier coefficient");
        // A pole inside the window would make the law meaningless there.
        if (term.resonance_um2 > 0.0)
        {
            const double pole = std::sqrt(term.resonance_um2);
            if (pole >= min_wavelength_um && pole <= max_wavelength_um)
                throw ConfigError("material '" + name + "': Sellmeier pole inside validity window");
        }
    }
    if (thermal && !(thermal->max_k > thermal->min_k && thermal->min_k > 0.0))
        throw ConfigError("material '" + name + "': thermal range must be non-empty and positive");
}

DispersionModel constant_index_model(double index, std::string name)
{
    if (!(index > 1.0))
        throw ArgumentError("constant index must exceed 1");
    DispersionModel model;
    model.name = std::move(name);
    model.axis = Axis::isotropic;
    model.terms = {{index * index - 1.0, 0.0}};
    model.min_wavelength_um = 1e-3;
    model.max_wavelength_um = 1e6;
    model.source = "constant index";
    return model;
}

double refractive_index(const DispersionModel& model, double wavelength_m, double temperature_k)
{
    if (!(wavelength_m > 0.0))
        throw ArgumentError("wavelength must be positive");
    const double lambda_um = wavelength_m * 1e6;
    // slack absorbs the m -> um conversion at the window edges
    const double slack = 1e-12 * model.max_wavelength_um;
    if (lambda_um < model.min_wavelength_um - slack || lambda_um > model.max_wavelength_um + slack)
    {
        std::ostringstream os;
        os << model.name << " (" << to_string(model.axis) << "): wavelength " << lambda_um
           << " um outside validity " << describe_window(model);
        throw DomainError(os.str());
    }

    const double l2 = lambda_um * lambda_um;
    double n2 = 1.0;
    for (const auto& term : model.terms)
        n2 += term.strength * l2 / (l2 - term.resonance_um2);
    double n = std::sqrt(n2);

    if (model.thermal)
    {
        const auto& th = *model.thermal;
        if (temperature_k < th.min_k || temperature_k > th.max_k)
        {
            std::ostringstream os;
            os << model.name << ": temperature " << temperature_k << " K outside [" << th.min_k
               << ", " << th.max_k << "] K";
            throw DomainError(os.str());
        }
        const double dt = temperature_k - th.reference_k;
        double power = dt;
        for (double coefficient : th.coefficients)
        {
            n += coefficient * power;
            power *= dt;
        }
    }

    if (!std::isfinite(n) || n <= 1.0)
        throw DomainError(model.name + ": law evaluates to a non-physical index at " +
                          std::to_string(lambda_um) + " um");
    return n;
}

nlohmann::json to_json(const DispersionModel& model)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : model.terms)
        terms.push_back({t.strength, t.resonance_um2});
    nlohmann::json record = {
        {"name", model.name},
        {"axis", std::string(to_string(model.axis))},
        {"terms", terms},
        {"validity_um", {model.min_wavelength_um, model.max_wavelength_um}},
        {"source", model.source},
    };
    if (model.thermal)
        record["thermal"] = {{"reference_k", model.thermal->reference_k},
                             {"coefficients", model.thermal->coefficients},
                             {"range_k", {model.thermal->min_k, model.thermal->max_k}}};
    return record;
}

DispersionModel model_from_json(const nlohmann::json& record)
{
    static const char* const allowed[] = {"name", "axis", "terms", "validity_um", "thermal", "source"};
    if (!record.is_object())
        throw ConfigError("material record must be an object");
    for (const auto& [key, _] : record.items())
    {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            throw ConfigError("material record: unknown key '" + key + "'");
    }

    DispersionModel model;
    try
    {
        model.name = record.at("name").get<std::string>();
        model.axis = axis_from_string(record.at("axis").get<std::string>());
        for (const auto& t : record.at("terms"))
        {
            if (!t.is_array() || t.size() != 2)
                throw ConfigError("material '" + model.name + "': each term is [B, C_um2]");
            model.terms.push_back({t[0].get<double>(), t[1].get<double>()});
        }
        const auto& window = record.at("validity_um");
        if (!window.is_array() || window.size() != 2)
            throw ConfigError("material '" + model.name + "': validity_um is [min, max]");
        model.min_wavelength_um = window[0].get<double>();
        model.max_wavelength_um = window[1].get<double>();
        if (record.contains("thermal") && !record["thermal"].is_null())
        {
            const auto& th = record["thermal"];
            ThermalCorrection thermal;
            thermal.reference_k = th.at("reference_k").get<double>();
            thermal.coefficients = th.at("coefficients").get<std::vector<double>>();
            const auto& range = th.at("range_k");
            if (!range.is_array() || range.size() != 2)
                throw ConfigError("material '" + model.name + "': thermal.range_k is [min, max]");
            thermal.min_k = range[0].get<double>();
            thermal.max_k = range[1].get<double>();
            model.thermal = std::move(thermal);
        }
        model.source = record.value("source", std::string{});
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ConfigError(std::string("material record: ") + e.what());
    }
    model.validate();
    return model;
}

std::vector<DispersionModel> parse_material_file(std::string_view text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text, nullptr, true, true);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw ConfigError(std::string("material file: ") + e.what());
    }
    if (!doc.contains("materials") || !doc["materials"].is_array())
        throw ConfigError("material file: missing 'materials' array");
    std::vector<DispersionModel> models;
    for (const auto& record : doc["materials"])
        models.push_back(model_from_json(record));
    return models;
}

std::vector<DispersionModel> load_material_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open material file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_material_file(buffer.str());
}

std::string dump_material_file(const std::vector<DispersionModel>& models)
{
    nlohmann::json doc = {{"format_version", 1}, {"materials", nlohmann::json::array()}};
    for (const auto& m : models)
        doc["materials"].push_back(to_json(m));
    return doc.dump(2) + "\n";
}

const std::vector<DispersionModel>& shipped_materials()
{
    static const std::vector<DispersionModel> models = parse_material_file(detail::shipped_materials_json);
    return models;
}

const DispersionModel& find_material(const std::vector<DispersionModel>& models,
                                     std::string_view name, Axis axis)
{
    for (const auto& m : models)
        if (m.name == name && m.axis == axis)
            return m;
    throw ConfigError("no material '" + std::string(name) + "' with axis " + std::string(to_string(axis)));
}
} // namespace wgm
