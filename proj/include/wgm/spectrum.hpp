#ifndef WGM_SPECTRUM_HPP
#define WGM_SPECTRUM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wgm/csv.hpp"
#include "wgm/scenario.hpp"

namespace wgm
{
enum class SpectrumKind
{
    transmission,
    sidebands, // optical output spectrum
};

SpectrumKind spectrum_kind_from_string(std::string_view text);
std::string_view to_string(SpectrumKind kind);

// Abscissa is the offset from the pump frequency in Hz.
struct SpectrumTrace
{
    SpectrumKind kind = SpectrumKind::transmission;
    std::vector<double> offset_hz;
    std::vector<double> ordinate; // transmission (1) or W per RBW bin
    double rbw_hz = 0.0;
    double insertion_loss_db = 0.0;
    double noise_floor_w = 0.0;
    std::vector<std::string> warnings;
};

// transmission: Lorentzian dip times the broadband insertion loss.
// sidebands: pump and both sideband lines (at +-(nu_rf + dispersion offset))
// binned with an RBW-wide rectangle over a flat noise floor.
SpectrumTrace emit_spectrum(const Scenario& scenario, SpectrumKind kind, double span_hz, int points);

CsvTable to_csv(const SpectrumTrace& trace);

inline constexpr int min_points_per_fwhm = 10;
} // namespace wgm

#endif
