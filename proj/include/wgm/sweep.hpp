#ifndef WGM_SWEEP_HPP
#define WGM_SWEEP_HPP

#include <string>
#include <string_view>

#include "wgm/csv.hpp"
#include "wgm/scenario.hpp"

namespace wgm
{
enum class SweepScale
{
    linear,
    logarithmic
};

struct SweepAxis
{
    std::string key; // dotted config path, e.g. "optics.q_factor"
    double low = 0.0;
    double high = 0.0;
    SweepScale scale = SweepScale::linear;
    int count = 2;

    std::vector<double> values() const;
};

// "<key>=<lo>:<hi>:<lin|log>:<n>"
SweepAxis parse_sweep_axis(std::string_view spec);

// One row per point: the swept value, then every report scalar. Points are
// evaluated concurrently; rows are ordered by swept value.
CsvTable run_sweep(const Scenario& scenario, const SweepAxis& axis, unsigned threads = 0);
} // namespace wgm

#endif
