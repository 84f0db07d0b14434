#ifndef WGM_MATERIALS_HPP
#define WGM_MATERIALS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace wgm
{
enum class Axis
{
    ordinary,
    extraordinary,
    isotropic
};

std::string_view to_string(Axis axis);
Axis axis_from_string(std::string_view text);

// One Sellmeier term B * lambda^2 / (lambda^2 - C), lambda in um, C in um^2.
struct SellmeierTerm
{
    double strength = 0.0;
    double resonance_um2 = 0.0;
};

// n(T) = n(T_ref) + sum_k coefficients[k] * (T - T_ref)^(k+1)
struct ThermalCorrection
{
    double reference_k = 0.0;
    std::vector<double> coefficients;
    double min_k = 0.0;
    double max_k = 0.0;
};

// n^2(lambda) = 1 + sum of terms, optionally corrected in temperature.
struct DispersionModel
{
    std::string name;
    Axis axis = Axis::isotropic;
    std::vector<SellmeierTerm> terms;
    double min_wavelength_um = 0.0;
    double max_wavelength_um = 0.0;
    std::optional<ThermalCorrection> thermal;
    std::string source;

    // Throws ConfigError when the validity window or thermal range is malformed.
    void validate() const;
};

// Constant refractive index over a wide window; a single Sellmeier term with C = 0.
DispersionModel constant_index_model(double index, std::string name = "constant");

// Index at wavelength [m] and temperature [K]. Laws without thermal terms
// ignore the temperature.
double refractive_index(const DispersionModel& model, double wavelength_m, double temperature_k);

// Material data file (JSON): {"materials": [record, ...]}.
nlohmann::json to_json(const DispersionModel& model);
DispersionModel model_from_json(const nlohmann::json& record);

std::vector<DispersionModel> parse_material_file(std::string_view text);
std::vector<DispersionModel> load_material_file(const std::string& path);
std::string dump_material_file(const std::vector<DispersionModel>& models);

// Compiled-in copy of data/materials.json.
const std::vector<DispersionModel>& shipped_materials();

const DispersionModel& find_material(const std::vector<DispersionModel>& models,
                                     std::string_view name, Axis axis);

inline constexpr std::string_view lithium_niobate = "lithium_niobate_congruent";
inline constexpr std::string_view diamond = "diamond";
} // namespace wgm

#endif
