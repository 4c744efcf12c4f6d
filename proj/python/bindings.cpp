#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdrelay/analytic.hpp"
#include "fdrelay/channel.hpp"
#include "fdrelay/fde.hpp"
#include "fdrelay/mc.hpp"
#include "fdrelay/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace fdrelay;

namespace {

std::string emit_string(const SweepResult& result, const std::string& format) {
    return parse_output_format(format) == OutputFormat::csv ? to_csv(result) : to_json(result);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Closed-form and Monte-Carlo outage of full-duplex multi-relay SDF cooperative links.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<SyncMode>(m, "SyncMode")
        .value("asynchronous", SyncMode::asynchronous)
        .value("synchronous", SyncMode::synchronous);
    py::enum_<MiMode>(m, "MiMode").value("exact", MiMode::exact).value("approximate", MiMode::approximate);
    py::enum_<RelayPowerPolicy>(m, "RelayPowerPolicy")
        .value("shared_budget", RelayPowerPolicy::shared_budget)
        .value("fixed_per_relay", RelayPowerPolicy::fixed_per_relay);
    py::enum_<SchemeKind>(m, "SchemeKind")
        .value("multi_relay", SchemeKind::multi_relay)
        .value("os_selection", SchemeKind::os_selection)
        .value("ps_selection", SchemeKind::ps_selection);
    py::enum_<CombineMethod>(m, "CombineMethod")
        .value("binomial", CombineMethod::binomial)
        .value("enumeration", CombineMethod::enumeration);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("n_relays", &SystemConfig::n_relays)
        .def_readwrite("p_source", &SystemConfig::p_source)
        .def_readwrite("e_relay_budget", &SystemConfig::e_relay_budget)
        .def_readwrite("var_sd", &SystemConfig::var_sd)
        .def_readwrite("var_sr", &SystemConfig::var_sr)
        .def_readwrite("var_rd", &SystemConfig::var_rd)
        .def_readwrite("var_rsi", &SystemConfig::var_rsi)
        .def_readwrite("var_iri", &SystemConfig::var_iri)
        .def_readwrite("rate", &SystemConfig::rate)
        .def_readwrite("block_len", &SystemConfig::block_len)
        .def_readwrite("cp_len", &SystemConfig::cp_len)
        .def_readwrite("delays", &SystemConfig::delays)
        .def_readwrite("sync_mode", &SystemConfig::sync_mode)
        .def_readwrite("mi_mode", &SystemConfig::mi_mode)
        .def_readwrite("relay_power_policy", &SystemConfig::relay_power_policy)
        .def_readwrite("selection_iri", &SystemConfig::selection_iri)
        .def(py::self == py::self)
        .def("__repr__", [](const SystemConfig& c) {
            return "<SystemConfig N=" + std::to_string(c.n_relays) + " mode=" + to_string(c.sync_mode) + ">";
        });

    py::class_<OutageEstimate>(m, "OutageEstimate")
        .def_readonly("p_hat", &OutageEstimate::p_hat)
        .def_readonly("trials", &OutageEstimate::trials)
        .def_readonly("outage_count", &OutageEstimate::outage_count)
        .def_readonly("stderr", &OutageEstimate::std_error);

    m.def("validate_config", &validate_config, "cfg"_a);
    m.def("default_delays", &default_delays, "n_relays"_a, "mode"_a);
    m.def("db_to_linear", &db_to_linear, "x_db"_a);
    m.def("lower_incomplete_gamma_int", &lower_incomplete_gamma_int, "n"_a, "x"_a);
    m.def("erlang_cdf", &erlang_cdf, "k"_a, "mean_scale"_a, "x"_a);
    m.def("eta", py::overload_cast<double, int, int>(&eta), "rate"_a, "block_len"_a, "cp_len"_a);

    m.def(
        "link_outages",
        [](const SystemConfig& cfg, std::optional<double> relay_interference) {
            const auto p = link_outages(cfg, relay_interference.value_or(relay_interference_power(cfg)));
            return py::dict("p_sd"_a = p.p_sd, "p_sr"_a = p.p_sr, "eta"_a = p.eta, "gbar_sd"_a = p.gbar_sd,
                            "gbar_rd"_a = p.gbar_rd, "gbar_syn"_a = p.gbar_syn);
        },
        "cfg"_a, "relay_interference_power"_a = py::none());
    m.def("p_cond_async", &p_cond_async, "decoding"_a, "cfg"_a);
    m.def("p_cond_sync", &p_cond_sync, "decoding"_a, "cfg"_a);
    m.def(
        "total_outage",
        [](const SystemConfig& cfg, std::optional<SyncMode> mode, CombineMethod method) {
            return total_outage(cfg, mode.value_or(cfg.sync_mode), method);
        },
        "cfg"_a, "mode"_a = py::none(), "method"_a = CombineMethod::binomial);

    m.def(
        "estimate_outage",
        [](const SystemConfig& cfg, SchemeKind kind, std::uint64_t trials, std::uint64_t seed,
           std::optional<MiMode> mi, unsigned workers) {
            py::gil_scoped_release release;
            return estimate_outage(cfg, {kind, mi.value_or(cfg.mi_mode)}, trials, seed, workers);
        },
        "cfg"_a, "scheme"_a = SchemeKind::multi_relay, "trials"_a = 100000, "seed"_a = 1, "mi_mode"_a = py::none(),
        "workers"_a = 0);

    m.def(
        "lambda_spectrum",
        [](const SystemConfig& cfg, cplx h_sd, std::vector<cplx> h_rd, std::vector<int> decoding,
           double relay_power) {
            ChannelRealization real;
            real.h_sd = h_sd;
            real.h_rd = std::move(h_rd);
            real.h_sr.assign(real.h_rd.size(), cplx{});
            return lambda_spectrum(real, DecodeSet{std::move(decoding)}, cfg, relay_power).lambda;
        },
        "cfg"_a, "h_sd"_a, "h_rd"_a, "decoding"_a, "relay_power"_a);
    m.def(
        "exact_rate",
        [](const std::vector<double>& gamma, const SystemConfig& cfg) {
            return exact_rate(BinSpectrum{{}, gamma}, cfg);
        },
        "gamma"_a, "cfg"_a);

    m.def("preset_config", [](const std::string& name) { return make_preset(name).sweep.base; }, "name"_a);
    m.def(
        "run_preset",
        [](const std::string& name, std::uint64_t trials, std::uint64_t seed, const std::string& format,
           unsigned workers) {
            SweepSpec spec = make_preset(name).sweep;
            spec.trials = trials;
            spec.seed = seed;
            py::gil_scoped_release release;
            return emit_string(run_sweep(spec, workers), format);
        },
        "name"_a, "trials"_a = 10000, "seed"_a = 1, "format"_a = "csv", "workers"_a = 0,
        "Runs a built-in sweep and returns the CSV or JSON text.");
    m.def(
        "run_sweep_json",
        [](const std::string& document, const std::string& format, unsigned workers) {
            SweepSpec spec = sweep_from_json(document);
            py::gil_scoped_release release;
            return emit_string(run_sweep(spec, workers), format);
        },
        "document"_a, "format"_a = "csv", "workers"_a = 0);
    m.def("config_from_json", &config_from_json, "document"_a);
}
