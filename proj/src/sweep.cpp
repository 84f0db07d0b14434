#include "wgm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <thread>

#include "wgm/errors.hpp"
#include "wgm/report.hpp"

namespace wgm
{
std::vector<double> SweepAxis::values() const
{
    if (count < 2)
        throw ConfigError("sweep needs at least two points");
    if (scale == SweepScale::logarithmic && !(low > 0.0 && high > 0.0))
        throw ConfigError("logarithmic sweep needs positive endpoints");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
    {
        const double t = static_cast<double>(i) / (count - 1);
        double v = scale == SweepScale::linear ? low + t * (high - low)
                                               : low * std::pow(high / low, t);
        if (i == count - 1)
            v = high;
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

SweepAxis parse_sweep_axis(std::string_view spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("sweep axis must be <key>=<lo>:<hi>:<lin|log>:<n>");
    SweepAxis axis;
    axis.key = std::string(spec.substr(0, eq));

    std::vector<std::string> parts;
    std::string_view rest = spec.substr(eq + 1);
    while (true)
    {
        const auto colon = rest.find(':');
        parts.emplace_back(rest.substr(0, colon));
        if (colon == std::string_view::npos)
            break;
        rest = rest.substr(colon + 1);
    }
    if (parts.size() != 4)
        throw ConfigError("sweep axis must be <key>=<lo>:<hi>:<lin|log>:<n>");
    try
    {
        std::size_t used = 0;
        axis.low = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("lo");
        axis.high = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("hi");
        axis.count = std::stoi(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument("n");
    }
    catch (const std::exception&)
    {
        throw ConfigError("sweep axis: malformed number in '" + std::string(spec) + "'");
    }
    if (parts[2] == "lin")
        axis.scale = SweepScale::linear;
    else if (parts[2] == "log")
        axis.scale = SweepScale::logarithmic;
    else
        throw ConfigError("sweep scale must be lin or log");
    if (axis.count < 2)
        throw ConfigError("sweep needs at least two points");
    return axis;
}

namespace
{
nlohmann::json::json_pointer pointer_for(const std::string& key)
{
    std::string path = "/" + key;
    std::replace(path.begin(), path.end(), '.', '/');
    return nlohmann::json::json_pointer(path);
}

Report evaluate_point(const nlohmann::json& base, const nlohmann::json::json_pointer& where, double value)
{
    nlohmann::json document = base;
    document[where] = value;
    return run_report(scenario_from_json(document));
}
} // namespace

CsvTable run_sweep(const Scenario& scenario, const SweepAxis& axis, unsigned threads)
{
    const auto where = pointer_for(axis.key);
    if (!scenario.document.contains(where) || !scenario.document[where].is_number())
        throw ConfigError("sweep key '" + axis.key + "' is not a numeric key of the scenario");

    const std::vector<double> values = axis.values();
    std::vector<Report> reports(values.size());

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> workers;
    const std::size_t stride = threads;
    for (std::size_t w = 0; w < std::min<std::size_t>(stride, values.size()); ++w)
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < values.size(); i += stride)
                reports[i] = evaluate_point(scenario.document, where, values[i]);
        }));
    for (auto& f : workers)
        f.get();

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    CsvTable table;
    table.comments.push_back("sweep " + axis.key);
    table.columns.push_back(axis.key);
    for (const auto& q : reports.front().quantities)
        table.columns.push_back(q.key);
    for (std::size_t i : order)
    {
        if (reports[i].quantities.size() != reports.front().quantities.size())
            throw ConfigError("sweep point at " + format_number(values[i]) +
                              " produced a different set of report quantities");
        std::vector<double> row{values[i]};
        for (const auto& q : reports[i].quantities)
            row.push_back(q.value);
        table.rows.push_back(std::move(row));
    }
    return table;
}
} // namespace wgm
