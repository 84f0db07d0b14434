#ifndef WGM_REPORT_HPP
#define WGM_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wgm/scenario.hpp"

namespace wgm
{
enum class ComparisonFlag
{
    match_within_tolerance,
    known_discrepancy,
    no_published_value,
};

std::string_view to_string(ComparisonFlag flag);
ComparisonFlag comparison_flag_from_string(std::string_view text);

struct Quantity
{
    std::string key;
    double value = 0.0;
    std::string unit;
    std::string operation; // producing operation
    std::optional<double> published_value;
    double tolerance = 0.0; // relative
    double deviation = 0.0; // (value - published) / published
    ComparisonFlag flag = ComparisonFlag::no_published_value;
};

struct Report
{
    std::vector<Quantity> quantities;
    std::vector<std::string> notes;

    const Quantity& at(std::string_view key) const;
    const Quantity* find(std::string_view key) const;
};

Report run_report(const Scenario& scenario);

// Line-oriented key/value text; identical inputs give identical bytes.
std::string render_report(const Report& report);

struct ParsedQuantity
{
    double value = 0.0;
    std::string unit;
    std::string operation;
    ComparisonFlag flag = ComparisonFlag::no_published_value;
};
std::map<std::string, ParsedQuantity> parse_report(std::string_view text);

// Number formatting shared by report and CSV output (12 significant digits, scientific).
std::string format_number(double value);

inline constexpr std::string_view convention_note =
    "bandwidths in ordinary frequency (Hz), photon energy h*nu, rates are full widths in Hz";
} // namespace wgm

#endif
