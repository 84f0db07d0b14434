#ifndef WGM_COUPLING_HPP
#define WGM_COUPLING_HPP

namespace wgm
{
// Angles are degrees at the interface, radians internally.

struct RimRadius
{
    double radius_m = 0.0;
    bool degenerate = false; // grazing incidence, r -> 0
};

struct CouplingRatios
{
    double undercoupled = 0.0; // Gamma_c / Gamma_abs <= 1
    double overcoupled = 0.0;  // its reciprocal
};

struct PrismCouplerDesign
{
    double incidence_angle_deg = 0.0;
    double prism_index = 0.0;
    double core_index = 0.0;
    double rim_ratio = 0.0;         // r / R
    double fringe_axes_ratio = 0.0; // sqrt(R / r)
};

// sin(theta) = n_core / n_prism. DomainError if n_core > n_prism.
double phase_match_angle(double core_index, double prism_index);

// r = R cos^2(theta), theta in [0, 90] degrees.
RimRadius optimal_rim_radius(double major_radius_m, double incidence_angle_deg);

// Axes ratio of the first-order Newton fringe between rim and flat: sqrt(R / r).
double fringe_axes_ratio(double major_radius_m, double rim_radius_m);

// Design the coupler for the given indices; the rim ratio is the matched optimum.
// Throws DomainError at grazing incidence, where the rim ratio collapses to zero.
PrismCouplerDesign design_prism_coupler(double core_index, double prism_index);

// Single-port coupled-resonance transmission
//   T = (d^2 + (Ga - Gc)^2 / 4) / (d^2 + (Ga + Gc)^2 / 4)
double transmission(double detuning_hz, double intrinsic_rate_hz, double coupling_rate_hz);

// Resonance contrast 1 - T(0).
double resonance_contrast(double intrinsic_rate_hz, double coupling_rate_hz);

// Both roots x = Gc / Ga of ((1 - x) / (1 + x))^2 = 1 - contrast.
CouplingRatios coupling_ratio_from_contrast(double contrast);
} // namespace wgm

#endif
