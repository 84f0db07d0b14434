#include "wgm/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "wgm/constants.hpp"
#include "wgm/conversion.hpp"
#include "wgm/coupling.hpp"
#include "wgm/errors.hpp"
#include "wgm/report.hpp"

namespace wgm
{
SpectrumKind spectrum_kind_from_string(std::string_view text)
{
    if (text == "transmission") return SpectrumKind::transmission;
    if (text == "sidebands" || text == "output-spectrum") return SpectrumKind::sidebands;
    throw ConfigError("unknown spectrum kind '" + std::string(text) + "'");
}

std::string_view to_string(SpectrumKind kind)
{
    return kind == SpectrumKind::transmission ? "transmission" : "output-spectrum";
}

SpectrumTrace emit_spectrum(const Scenario& s, SpectrumKind kind, double span_hz, int points)
{
    detail::require_positive(span_hz, "span");
    if (points < 2)
        throw ArgumentError("a spectrum needs at least two points");

    const Report report = run_report(s);
    SpectrumTrace trace;
    trace.kind = kind;
    trace.rbw_hz = s.rbw_hz;
    trace.insertion_loss_db = s.insertion_loss_db;

    const double step = span_hz / (points - 1);
    trace.offset_hz.resize(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        trace.offset_hz[static_cast<std::size_t>(i)] = -0.5 * span_hz + i * step;

    const auto check_resolution = [&](double fwhm, const char* what) {
        if (fwhm / step < min_points_per_fwhm)
            trace.warnings.push_back(std::string("grid too coarse: fewer than 10 points per ") + what);
    };

    if (kind == SpectrumKind::transmission)
    {
        const double intrinsic = report.at("intrinsic_rate_hz").value;
        const double coupling = report.at("coupling_rate_hz").value;
        const double loss = std::pow(10.0, -s.insertion_loss_db / 10.0);
        check_resolution(intrinsic + coupling, "loaded linewidth");
        trace.ordinate.reserve(trace.offset_hz.size());
        for (double f : trace.offset_hz)
            trace.ordinate.push_back(loss * transmission(f, intrinsic, coupling));
        return trace;
    }

    const double sideband = report.at("sideband_power_w").value;
    trace.noise_floor_w = s.noise_floor_w ? *s.noise_floor_w : report.at("noise_floor_w").value;
    const double wa = report.at("weight_anti_stokes").value;
    const double ws = report.at("weight_stokes").value;
    const double wmax = std::max(wa, ws);
    const double offset = s.rf_frequency_hz + s.dispersion_offset_hz;

    struct Line
    {
        double offset_hz;
        double power_w;
    };
    const Line lines[] = {
        {0.0, s.pump_power_w},
        {offset, wmax > 0.0 ? sideband * wa / wmax : sideband},
        {-offset, wmax > 0.0 ? sideband * ws / wmax : sideband},
    };
    check_resolution(s.rbw_hz, "resolution bandwidth");
    trace.ordinate.reserve(trace.offset_hz.size());
    for (double f : trace.offset_hz)
    {
        double bin = trace.noise_floor_w;
        for (const Line& line : lines)
            if (f >= line.offset_hz - 0.5 * s.rbw_hz && f < line.offset_hz + 0.5 * s.rbw_hz)
                bin += line.power_w;
        trace.ordinate.push_back(bin);
    }
    return trace;
}

CsvTable to_csv(const SpectrumTrace& trace)
{
    CsvTable table;
    table.comments.push_back("kind=" + std::string(to_string(trace.kind)));
    if (trace.kind == SpectrumKind::transmission)
        table.comments.push_back("insertion_loss_db=" + format_number(trace.insertion_loss_db));
    else
    {
        table.comments.push_back("rbw_hz=" + format_number(trace.rbw_hz));
        table.comments.push_back("noise_floor_w=" + format_number(trace.noise_floor_w));
    }
    for (const auto& w : trace.warnings)
        table.comments.push_back("warning: " + w);
    table.columns = {"offset_hz", trace.kind == SpectrumKind::transmission ? "transmission" : "power_w"};
    table.rows.reserve(trace.offset_hz.size());
    for (std::size_t i = 0; i < trace.offset_hz.size(); ++i)
        table.rows.push_back({trace.offset_hz[i], trace.ordinate[i]});
    return table;
}
} // namespace wgm
