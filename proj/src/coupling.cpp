#include "wgm/coupling.hpp"

#include <cmath>

#include "wgm/constants.hpp"
#include "wgm/errors.hpp"

namespace wgm
{
namespace
{
constexpr double deg_to_rad = constants::pi / 180.0;
}

double phase_match_angle(double core_index, double prism_index)
{
    detail::require_positive(core_index, "core index");
    detail::require_positive(prism_index, "prism index");
    if (core_index > prism_index)
        throw DomainError("no phase-matched angle exists: core index exceeds prism index");
    return std::asin(core_index / prism_index) / deg_to_rad;
}

RimRadius optimal_rim_radius(double major_radius_m, double incidence_angle_deg)
{
    detail::require_positive(major_radius_m, "major radius");
    if (!(incidence_angle_deg >= 0.0 && incidence_angle_deg <= 90.0))
        throw ArgumentError("incidence angle must lie in [0, 90] degrees");
    if (incidence_angle_deg == 90.0)
        return {0.0, true};
    const double c = std::cos(incidence_angle_deg * deg_to_rad);
    return {major_radius_m * c * c, false};
}

double fringe_axes_ratio(double major_radius_m, double rim_radius_m)
{
    detail::require_positive(major_radius_m, "major radius");
    detail::require_positive(rim_radius_m, "rim radius");
    if (rim_radius_m > major_radius_m)
        throw ArgumentError("rim radius must not exceed the major radius");
    return std::sqrt(major_radius_m / rim_radius_m);
}

PrismCouplerDesign design_prism_coupler(double core_index, double prism_index)
{
    PrismCouplerDesign design;
    design.core_index = core_index;
    design.prism_index = prism_index;
    design.incidence_angle_deg = phase_match_angle(core_index, prism_index);
    // cos^2 = 1 - sin^2 straight from the index ratio keeps both identities exact.
    const double s = core_index / prism_index;
    design.rim_ratio = 1.0 - s * s;
    if (!(design.rim_ratio > 0.0))
        throw DomainError("grazing incidence: matched rim radius is zero");
    design.fringe_axes_ratio = std::sqrt(1.0 / design.rim_ratio);
    return design;
}

double transmission(double detuning_hz, double intrinsic_rate_hz, double coupling_rate_hz)
{
    detail::require_positive(intrinsic_rate_hz, "intrinsic rate");
    detail::require_non_negative(coupling_rate_hz, "coupling rate");
    const double d2 = detuning_hz * detuning_hz;
    const double diff = intrinsic_rate_hz - coupling_rate_hz;
    const double sum = intrinsic_rate_hz + coupling_rate_hz;
    return (d2 + 0.25 * diff * diff) / (d2 + 0.25 * sum * sum);
}

double resonance_contrast(double intrinsic_rate_hz, double coupling_rate_hz)
{
    return 1.0 - transmission(0.0, intrinsic_rate_hz, coupling_rate_hz);
}

CouplingRatios coupling_ratio_from_contrast(double contrast)
{
    if (!(contrast > 0.0 && contrast <= 1.0))
        throw ArgumentError("contrast must lie in (0, 1]");
    const double s = std::sqrt(1.0 - contrast);
    return {(1.0 - s) / (1.0 + s), (1.0 + s) / (1.0 - s)};
}
} // namespace wgm
