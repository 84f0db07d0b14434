#ifndef WGM_CONSTANTS_HPP
#define WGM_CONSTANTS_HPP

#include <numbers>

// Exact SI defining constants (2019 redefinition).
namespace wgm::constants
{
inline constexpr double c = 299792458.0;          // m/s
inline constexpr double h = 6.62607015e-34;       // J s
inline constexpr double hbar = h / (2.0 * std::numbers::pi);
inline constexpr double k_B = 1.380649e-23;       // J/K
inline constexpr double pi = std::numbers::pi;
} // namespace wgm::constants

#endif
