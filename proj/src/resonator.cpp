#include "wgm/resonator.hpp"

#include <cmath>
#include <string>

#include "wgm/constants.hpp"
#include "wgm/errors.hpp"

namespace wgm
{
void ResonatorGeometry::validate() const
{
    detail::require_positive(major_radius_m, "major radius");
    detail::require_positive(rim_radius_m, "rim radius");
    detail::require_positive(thickness_m, "thickness");
    if (rim_radius_m > major_radius_m)
        throw ArgumentError("rim radius must not exceed the major radius");
}

double OpticalMode::quality_factor() const
{
    return wgm::quality_factor(frequency_hz, loaded_linewidth_hz());
}

double free_spectral_range(double major_radius_m, double index)
{
    detail::require_positive(major_radius_m, "major radius");
    detail::require_positive(index, "index");
    return constants::c / (2.0 * constants::pi * major_radius_m * index);
}

double free_spectral_range(const ResonatorGeometry& geometry, const DispersionModel& material,
                           double wavelength_m, double temperature_k)
{
    return free_spectral_range(geometry.major_radius_m,
                               refractive_index(material, wavelength_m, temperature_k));
}

double quality_factor(double frequency_hz, double linewidth_hz)
{
    detail::require_positive(frequency_hz, "frequency");
    detail::require_positive(linewidth_hz, "linewidth");
    return frequency_hz / linewidth_hz;
}

double linewidth_from_q(double frequency_hz, double q)
{
    detail::require_positive(frequency_hz, "frequency");
    detail::require_positive(q, "quality factor");
    return frequency_hz / q;
}

double mode_frequency(const ResonatorGeometry& geometry, const DispersionModel& material,
                      std::int64_t orbital_momentum, double temperature_k, DispersionOrder order)
{
    if (orbital_momentum < 1)
        throw ArgumentError("orbital momentum must be >= 1");
    detail::require_positive(geometry.major_radius_m, "major radius");

    const auto l = static_cast<double>(orbital_momentum);
    const double effective_l =
        order == DispersionOrder::geometric ? l + airy_first_zero * std::cbrt(l / 2.0) : l;
    const double scale = effective_l * constants::c / (2.0 * constants::pi * geometry.major_radius_m);

    double nu = static_cast<double>(orbital_momentum) * constants::c /
                (2.0 * constants::pi * geometry.major_radius_m *
                 refractive_index(material, 1.56e-6, temperature_k));

    // Iterate to 1 Hz, then keep polishing while the step still shrinks so
    // second differences are not dominated by convergence noise.
    bool settled = false;
    double last_step = INFINITY;
    for (int i = 0; i < max_fixed_point_iterations; ++i)
    {
        const double next = scale / refractive_index(material, constants::c / nu, temperature_k);
        const double step = std::abs(next - nu);
        nu = next;
        if (!std::isfinite(nu))
            break;
        if (step <= fixed_point_tolerance_hz)
            settled = true;
        if (settled && (step == 0.0 || step >= last_step))
            return nu;
        last_step = step;
    }
    if (settled && std::isfinite(nu))
        return nu;
    throw NumericError("mode frequency fixed point did not converge for L = " +
                       std::to_string(orbital_momentum));
}

double local_dispersion(const ResonatorGeometry& geometry, const DispersionModel& material,
                        std::int64_t orbital_momentum, double temperature_k, DispersionOrder order)
{
    if (orbital_momentum < 2)
        throw ArgumentError("local dispersion needs L >= 2");
    const double below = mode_frequency(geometry, material, orbital_momentum - 1, temperature_k, order);
    const double at = mode_frequency(geometry, material, orbital_momentum, temperature_k, order);
    const double above = mode_frequency(geometry, material, orbital_momentum + 1, temperature_k, order);
    return above - 2.0 * at + below;
}

std::int64_t nearest_orbital_momentum(double frequency_hz, double fsr_hz)
{
    detail::require_positive(frequency_hz, "frequency");
    detail::require_positive(fsr_hz, "free spectral range");
    return std::llround(frequency_hz / fsr_hz);
}
} // namespace wgm
