#ifndef WGM_RESONATOR_HPP
#define WGM_RESONATOR_HPP

#include <cstdint>

#include "wgm/materials.hpp"

namespace wgm
{
// All rates and linewidths in this library are full widths in ordinary
// frequency (Hz). Loaded linewidth = intrinsic + coupling rate.

struct ResonatorGeometry
{
    double major_radius_m = 0.0;
    double rim_radius_m = 0.0;
    double thickness_m = 0.0;

    // 0 < r <= R, thickness > 0
    void validate() const;
};

struct OpticalMode
{
    std::int64_t orbital_momentum = 0;
    double frequency_hz = 0.0;
    double intrinsic_rate_hz = 0.0;
    double coupling_rate_hz = 0.0;

    double loaded_linewidth_hz() const { return intrinsic_rate_hz + coupling_rate_hz; }
    double quality_factor() const;
};

enum class DispersionOrder
{
    material = 0,  // n(lambda) only
    geometric = 1, // plus the leading Airy-zero term of the fundamental radial mode
};

// c / (2 pi R n)
double free_spectral_range(double major_radius_m, double index);
double free_spectral_range(const ResonatorGeometry& geometry, const DispersionModel& material,
                           double wavelength_m, double temperature_k);

double quality_factor(double frequency_hz, double linewidth_hz);
double linewidth_from_q(double frequency_hz, double q);

// Self-consistent resonance nu = L_eff c / (2 pi R n(c/nu, T)), with
// L_eff = L (material) or L + 1.8557 (L/2)^(1/3) (geometric).
// Throws NumericError if the fixed point does not settle to 1 Hz within 100 steps.
double mode_frequency(const ResonatorGeometry& geometry, const DispersionModel& material,
                      std::int64_t orbital_momentum, double temperature_k,
                      DispersionOrder order = DispersionOrder::material);

// nu(L+1) - 2 nu(L) + nu(L-1)
double local_dispersion(const ResonatorGeometry& geometry, const DispersionModel& material,
                        std::int64_t orbital_momentum, double temperature_k,
                        DispersionOrder order = DispersionOrder::material);

// Nearest orbital momentum to a target frequency, round(nu / FSR).
std::int64_t nearest_orbital_momentum(double frequency_hz, double fsr_hz);

inline constexpr double airy_first_zero = 1.8557;
inline constexpr int max_fixed_point_iterations = 100;
inline constexpr double fixed_point_tolerance_hz = 1.0;
} // namespace wgm

#endif
