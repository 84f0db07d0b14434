// Command-line front end: report, spectrum, sweep, feasibility.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wgm/csv.hpp"
#include "wgm/errors.hpp"
#include "wgm/report.hpp"
#include "wgm/scenario.hpp"
#include "wgm/spectrum.hpp"
#include "wgm/sweep.hpp"

namespace
{
enum ExitCode
{
    ok = 0,
    config_error = 1,
    domain_error = 2,
    numeric_error = 3,
};

void emit(const std::string& out, const std::string& text)
{
    if (out.empty())
        std::cout << text;
    else
        wgm::save_text(out, text);
}

void print_feasibility(const wgm::Report& report)
{
    static const char* const keys[] = {
        "nep_theory_w_per_hz", "projected_linewidth_hz", "min_countable_frequency_hz",
        "counting_feasible_at_signal", "effective_temperature_k", "thermal_crossover_frequency_hz",
        "max_counting_bandwidth_reference_hz", "max_counting_bandwidth_measured_hz", "unity_max_bandwidth_hz",
    };
    std::cout << "# convention: " << wgm::convention_note << '\n';
    for (const char* key : keys)
        if (const auto* q = report.find(key))
            std::cout << q->key << " = " << wgm::format_number(q->value) << ' ' << q->unit << '\n';
    const bool feasible = report.at("counting_feasible_at_signal").value != 0.0;
    std::cout << "verdict: photon counting at the signal frequency is "
              << (feasible ? "feasible" : "not feasible") << '\n';
}
} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Whispering-gallery sub-THz upconverter design and analysis"};
    app.require_subcommand(1);

    std::string config;
    std::string out;

    auto* report_cmd = app.add_subcommand("report", "Derived quantities with published comparisons");
    report_cmd->add_option("--config", config, "Scenario file")->required();
    report_cmd->add_option("--out", out, "Output file (default stdout)");

    std::string kind;
    double span_hz = 0.0;
    int points = 0;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Synthetic transmission or output spectrum (CSV)");
    spectrum_cmd->add_option("--config", config, "Scenario file")->required();
    spectrum_cmd->add_option("--kind", kind, "transmission|sidebands")
        ->required()
        ->check(CLI::IsMember({"transmission", "sidebands"}));
    spectrum_cmd->add_option("--span-hz", span_hz, "Total span around the pump")->required();
    spectrum_cmd->add_option("--points", points, "Grid points")->required();
    spectrum_cmd->add_option("--out", out, "CSV file")->required();

    std::string vary;
    unsigned threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep (CSV)");
    sweep_cmd->add_option("--config", config, "Scenario file")->required();
    sweep_cmd->add_option("--vary", vary, "<key>=<lo>:<hi>:<lin|log>:<n>")->required();
    sweep_cmd->add_option("--out", out, "CSV file")->required();
    sweep_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");

    auto* feasibility_cmd = app.add_subcommand("feasibility", "Photon-counting feasibility summary");
    feasibility_cmd->add_option("--config", config, "Scenario file")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try
    {
        const wgm::Scenario scenario = wgm::load_scenario(config);
        if (report_cmd->parsed())
            emit(out, wgm::render_report(wgm::run_report(scenario)));
        else if (spectrum_cmd->parsed())
        {
            const auto trace = wgm::emit_spectrum(scenario, wgm::spectrum_kind_from_string(kind), span_hz, points);
            for (const auto& w : trace.warnings)
                std::cerr << "warning: " << w << '\n';
            wgm::save_text(out, wgm::write_csv(wgm::to_csv(trace)));
        }
        else if (sweep_cmd->parsed())
            wgm::save_text(out, wgm::write_csv(wgm::run_sweep(scenario, wgm::parse_sweep_axis(vary), threads)));
        else if (feasibility_cmd->parsed())
            print_feasibility(wgm::run_report(scenario));
    }
    catch (const wgm::ConfigError& e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    }
    catch (const wgm::NumericError& e)
    {
        std::cerr << "numeric error: " << e.what() << '\n';
        return numeric_error;
    }
    catch (const wgm::DomainError& e)
    {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain_error;
    }
    catch (const wgm::ArgumentError& e)
    {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain_error;
    }
    return ok;
}
