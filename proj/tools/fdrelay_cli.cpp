// Outage sweep runner: analytic and Monte-Carlo outage curves as CSV/JSON.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fdrelay/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full-duplex multi-relay outage probability: closed forms and Monte-Carlo sweeps"};

    std::string preset;
    std::string config_path;
    std::string scheme = "all";
    std::string mode;
    std::string mi;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out = "-";
    unsigned workers = 0;

    auto* preset_opt = app.add_option("--preset", preset, "Built-in scenario")
                           ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));
    auto* config_opt = app.add_option("--config", config_path, "JSON scenario document")->check(CLI::ExistingFile);
    preset_opt->excludes(config_opt);
    auto* scheme_opt = app.add_option("--scheme", scheme, "Schemes to simulate (default: all for presets)")->check(CLI::IsMember({"multi", "os", "ps", "all"}));
    app.add_option("--mode", mode, "Relay synchronisation (overrides the scenario)")
        ->check(CLI::IsMember({"async", "sync"}));
    app.add_option("--mi", mi, "Destination mutual-information rule (overrides the scenario)")
        ->check(CLI::IsMember({"exact", "approx"}));
    auto* trials_opt = app.add_option("--trials", trials, "Monte-Carlo trials per point")->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed, "Random seed");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out, "Output path, '-' for stdout");
    app.add_option("--workers", workers, "Worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        fdrelay::SweepSpec spec;
        if (!preset.empty()) {
            spec = fdrelay::make_preset(preset).sweep;
            spec.trials = trials;
            spec.seed = seed;
        } else if (!config_path.empty()) {
            spec = fdrelay::sweep_from_json(read_file(config_path));
            if (trials_opt->count() > 0) spec.trials = trials;
            if (seed_opt->count() > 0) spec.seed = seed;
        } else {
            std::cerr << "one of --preset or --config is required\n" << app.help();
            return 2;
        }
        if (!mode.empty()) {
            const auto m = fdrelay::parse_sync_mode(mode);
            if (m != spec.base.sync_mode) {
                spec.base = fdrelay::with_sync_mode(spec.base, m);
            }
        }
        if (!mi.empty()) {
            spec.base.mi_mode = fdrelay::parse_mi_mode(mi);
        }
        if (scheme_opt->count() > 0) {
            if (scheme == "all") {
                spec.schemes = {fdrelay::SchemeKind::multi_relay, fdrelay::SchemeKind::os_selection,
                                fdrelay::SchemeKind::ps_selection};
            } else {
                spec.schemes = {fdrelay::parse_scheme(scheme)};
            }
        }
        const auto result = fdrelay::run_sweep(spec, workers);
        fdrelay::emit(result, fdrelay::parse_output_format(format), out);
    } catch (const std::exception& e) {
        std::cerr << "fdrelay: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
