// Copyright 2026 The dressedphase Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file cli.hpp
 * Command-line front end: argument parsing into a RunConfig, scenario
 * dispatch, and JSON / CSV serialization.
 *
 * JSON output is an object {checks, inputs, outputs, scenario} with keys
 * sorted at every level, two-space indentation, floating-point numbers
 * written as %.16e (17 significant digits) and a trailing newline.
 */
#pragma once

#include "selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace dressed::cli {

enum class Subcommand { PstCycle, PstTransfer, QubitGate, Surface, DarkState, BosonRing, Selftest };
enum class OutputFormat { Json, Csv };

inline const char *subcommand_name(Subcommand s) {
    switch (s) {
    case Subcommand::PstCycle:
        return "pst-cycle";
    case Subcommand::PstTransfer:
        return "pst-transfer";
    case Subcommand::QubitGate:
        return "qubit-gate";
    case Subcommand::Surface:
        return "surface";
    case Subcommand::DarkState:
        return "dark-state";
    case Subcommand::BosonRing:
        return "boson-ring";
    case Subcommand::Selftest:
        return "selftest";
    }
    return "?";
}

struct RunConfig {
    Subcommand subcommand = Subcommand::Selftest;
    std::map<std::string, double> parameters;
    OutputFormat outputFormat = OutputFormat::Json;
    std::optional<std::string> outputPath; ///< empty: standard output
    std::uint64_t seed = kDefaultSelftestSeed;

    [[nodiscard]] double param(const std::string &key) const { return parameters.at(key); }
    [[nodiscard]] std::size_t count(const std::string &key) const {
        return static_cast<std::size_t>(parameters.at(key));
    }
};

/// Parse failure or help request; `exitCode` is 0 for help, 2 otherwise.
struct UsageExit {
    int exitCode;
    std::string message;
};

namespace detail {

struct Options {
    std::string format = "json";
    std::string output;
};

inline void add_io_options(CLI::App *sub, Options &io) {
    sub->add_option("--format", io.format, "output format: json, or csv (surface only)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", io.output, "output file path (default: standard output)");
}

inline std::pair<std::size_t, std::size_t> parse_grid(const std::string &text) {
    const auto x = text.find('x');
    if (x == std::string::npos) {
        throw CLI::ValidationError("--grid", "expected <xi>x<gamma>, e.g. 81x81");
    }
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a = text.substr(0, x);
        const std::string b = text.substr(x + 1);
        const long long gx = std::stoll(a, &used_a);
        const long long gy = std::stoll(b, &used_b);
        if (used_a != a.size() || used_b != b.size() || gx < 1 || gy < 1 || gx > 4096 || gy > 4096) {
            throw std::invalid_argument("bad grid");
        }
        return {static_cast<std::size_t>(gx), static_cast<std::size_t>(gy)};
    } catch (const std::exception &) {
        throw CLI::ValidationError("--grid", "expected two positive integers <xi>x<gamma>, e.g. 81x81");
    }
}

} // namespace detail

inline RunConfig parse_args(const std::vector<std::string> &argv) {
    CLI::App app{"Dressed-state gate phases: dynamical and geometric parts for worked quantum examples.",
                 "dressedphase"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "show help for every subcommand");

    detail::Options io;
    int sites = 4;
    std::size_t samples = kDefaultSamplesPerSegment;
    double varpi_delta = kPi / 3;
    double theta0 = kPi / 4;
    double surface_theta0 = 1.0;
    int surface_n = 1;
    std::string grid = "81x81";
    std::size_t surface_samples = kDefaultSurfaceSamples;
    std::size_t threads = 1;
    double theta_c = kPi / 2;
    double duration = 2000.0;
    std::size_t dark_samples = kDefaultSamplesPerSegment;
    int nu = 7;
    int nl = 5;
    std::uint64_t seed = kDefaultSelftestSeed;

    auto *cycle = app.add_subcommand("pst-cycle", "full revival of an engineered XY chain (gate G = I)");
    cycle->add_option("--n", sites, "chain length N (sites, >= 2)")->check(CLI::Range(2, 64));
    cycle->add_option("--samples", samples, "trajectory samples per segment")->check(CLI::Range(3, 10000000));
    detail::add_io_options(cycle, io);

    auto *transfer = app.add_subcommand("pst-transfer", "site 1 -> site N transfer with the mirror gate");
    transfer->add_option("--n", sites, "chain length N (sites, >= 2)")->check(CLI::Range(2, 64));
    transfer->add_option("--samples", samples, "trajectory samples per segment")->check(CLI::Range(3, 10000000));
    detail::add_io_options(transfer, io);

    auto *qubit = app.add_subcommand("qubit-gate", "two-stage drive realizing G = exp(-i θ0 σx)");
    qubit->add_option("--varpi-delta", varpi_delta, "ϖδ, phase of the σz stage (radians, non-zero)");
    qubit->add_option("--theta0", theta0, "θ0, gate rotation angle (radians, in (0, 2π))");
    qubit->add_option("--samples", samples, "trajectory samples per segment")->check(CLI::Range(1, 10000000));
    detail::add_io_options(qubit, io);

    auto *surface = app.add_subcommand(
        "surface", "geometric phase of cos ξ|↑> + sin ξ e^{iγ}|↓> over a (ξ, γ) grid, ϖδ = π n");
    surface->add_option("--theta0", surface_theta0, "θ0, gate rotation angle (radians, in (0, 2π))");
    surface->add_option("--n", surface_n, "n, integer with ϖδ = π n (non-zero)");
    surface->add_option("--grid", grid, "grid size <ξ points>x<γ points>; ξ spans [0, π], γ spans [0, 2π]");
    surface->add_option("--samples", surface_samples, "trajectory samples per segment")
        ->check(CLI::Range(1, 10000000));
    surface->add_option("--threads", threads, "worker threads for the grid sweep")->check(CLI::Range(1, 256));
    detail::add_io_options(surface, io);

    auto *dark = app.add_subcommand("dark-state", "Λ-system dark state carried around a cap loop");
    dark->add_option("--theta-c", theta_c, "θ_c, polar angle of the loop (radians, in [0, π])");
    dark->add_option("--duration", duration, "loop duration in inverse gap units (> 0)");
    dark->add_option("--samples", dark_samples, "integration steps per loop leg")->check(CLI::Range(1, 100000000));
    detail::add_io_options(dark, io);

    auto *ring = app.add_subcommand("boson-ring", "interference at site B of a two-arm bosonic ring");
    ring->add_option("--nu", nu, "N_U, sites on the upper arm (>= 2)")->check(CLI::Range(2, 64));
    ring->add_option("--nl", nl, "N_L, sites on the lower arm (>= 2)")->check(CLI::Range(2, 64));
    detail::add_io_options(ring, io);

    auto *self = app.add_subcommand("selftest", "invariant sweep and scenario matrix; exit 0 iff all pass");
    self->add_option("--seed", seed, "seed for the randomized invariants");
    detail::add_io_options(self, io);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        // Without a subcommand the overview lists every subcommand's options.
        throw UsageExit{0, app.get_subcommands().empty() ? app.help("", CLI::AppFormatMode::All) : app.help()};
    } catch (const CLI::CallForAllHelp &) {
        throw UsageExit{0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError &e) {
        std::string what = e.what();
        if (const auto nl_pos = what.find('\n'); nl_pos != std::string::npos) {
            what = what.substr(0, nl_pos);
        }
        throw UsageExit{2, "dressedphase: " + what};
    }

    RunConfig config;
    config.seed = seed;
    config.outputFormat = io.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (!io.output.empty()) {
        config.outputPath = io.output;
    }
    auto fail = [](const std::string &msg) { throw UsageExit{2, "dressedphase: " + msg}; };

    if (cycle->parsed() || transfer->parsed()) {
        config.subcommand = cycle->parsed() ? Subcommand::PstCycle : Subcommand::PstTransfer;
        config.parameters = {{"N", sites}, {"samples", static_cast<double>(samples)}};
    } else if (qubit->parsed()) {
        config.subcommand = Subcommand::QubitGate;
        if (varpi_delta == 0.0 || !std::isfinite(varpi_delta)) {
            fail("--varpi-delta must be finite and non-zero");
        }
        if (!(theta0 > 0.0 && theta0 < kTwoPi)) {
            fail("--theta0 must lie in (0, 2π)");
        }
        config.parameters = {
            {"varpi_delta", varpi_delta}, {"theta0", theta0}, {"samples", static_cast<double>(samples)}};
    } else if (surface->parsed()) {
        config.subcommand = Subcommand::Surface;
        std::pair<std::size_t, std::size_t> g;
        try {
            g = detail::parse_grid(grid);
        } catch (const CLI::ValidationError &e) {
            fail(e.what());
        }
        if (surface_n == 0) {
            fail("--n must be a non-zero integer");
        }
        if (!(surface_theta0 > 0.0 && surface_theta0 < kTwoPi)) {
            fail("--theta0 must lie in (0, 2π)");
        }
        config.parameters = {{"theta0", surface_theta0},
                             {"n", surface_n},
                             {"grid_xi", static_cast<double>(g.first)},
                             {"grid_gamma", static_cast<double>(g.second)},
                             {"samples", static_cast<double>(surface_samples)},
                             {"threads", static_cast<double>(threads)}};
    } else if (dark->parsed()) {
        config.subcommand = Subcommand::DarkState;
        if (!(theta_c >= 0.0 && theta_c <= kPi)) {
            fail("--theta-c must lie in [0, π]");
        }
        if (!(duration > 0.0) || !std::isfinite(duration)) {
            fail("--duration must be positive");
        }
        config.parameters = {
            {"theta_c", theta_c}, {"duration", duration}, {"samples", static_cast<double>(dark_samples)}};
    } else if (ring->parsed()) {
        config.subcommand = Subcommand::BosonRing;
        config.parameters = {{"N_U", nu}, {"N_L", nl}};
    } else {
        config.subcommand = Subcommand::Selftest;
    }
    if (config.outputFormat == OutputFormat::Csv && config.subcommand != Subcommand::Surface) {
        fail("--format csv is only available for the surface subcommand");
    }
    return config;
}

// ---------------------------------------------------------------------------
// Serialization.

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace detail {

inline void write_json(const nlohmann::json &j, std::string &out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case nlohmann::json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto &[key, value] : j.items()) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += pad + nlohmann::json(key).dump() + ": ";
            write_json(value, out, depth + 1);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case nlohmann::json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto &value : j) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += pad;
            write_json(value, out, depth + 1);
        }
        out += "\n" + close_pad + "]";
        return;
    }
    case nlohmann::json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

inline nlohmann::json to_json(const ReportValue &v) {
    return std::visit([](const auto &x) { return nlohmann::json(x); }, v);
}

} // namespace detail

inline std::string dump_json(const nlohmann::json &j) {
    std::string out;
    detail::write_json(j, out, 0);
    out += "\n";
    return out;
}

inline nlohmann::json report_json(const ScenarioReport &report) {
    nlohmann::json j;
    j["scenario"] = report.scenarioName;
    j["inputs"] = nlohmann::json::object();
    for (const auto &[k, v] : report.inputs) {
        j["inputs"][k] = detail::to_json(v);
    }
    j["outputs"] = nlohmann::json::object();
    for (const auto &[k, v] : report.outputs) {
        j["outputs"][k] = detail::to_json(v);
    }
    j["checks"] = nlohmann::json::array();
    for (const auto &c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"observed", c.observed},
                               {"tolerance", c.tolerance},
                               {"pass", c.passed}});
    }
    return j;
}

inline std::string emit_report(const ScenarioReport &report, const RunConfig &config) {
    if (config.outputFormat != OutputFormat::Json) {
        throw std::invalid_argument("emit_report: scenario reports serialize to JSON only");
    }
    report.validate();
    return dump_json(report_json(report));
}

inline std::string emit_report(const IntensityReport &report, const RunConfig &config) {
    return emit_report(report.to_report(), config);
}

inline std::string emit_report(const DarkStateReport &report, const RunConfig &config) {
    return emit_report(report.to_report(), config);
}

inline std::string surface_csv(const SurfaceResult &surface) {
    std::string out = "xi,gamma,beta_numeric,beta_paper,re_exp_i_beta_numeric,re_exp_i_beta_paper\n";
    for (const auto &p : surface.points) {
        out += format_double(p.xi) + "," + format_double(p.gamma) + "," + format_double(p.betaNumeric) + "," +
               format_double(p.betaClosedForm) + "," + format_double(std::cos(p.betaNumeric)) + "," +
               format_double(std::cos(p.betaClosedForm)) + "\n";
    }
    return out;
}

inline std::string emit_report(const SurfaceResult &surface, const RunConfig &config) {
    if (config.outputFormat == OutputFormat::Csv) {
        return surface_csv(surface);
    }
    return emit_report(surface.report, config);
}

inline nlohmann::json selftest_json(const SelftestSummary &summary) {
    nlohmann::json j;
    j["seed"] = summary.seed;
    j["passed"] = summary.all_passed();
    j["items"] = nlohmann::json::array();
    std::int64_t failures = 0;
    for (const auto &item : summary.items) {
        failures += item.passed ? 0 : 1;
        j["items"].push_back(
            {{"name", item.name}, {"observed", item.observed}, {"tolerance", item.tolerance}, {"pass", item.passed}});
    }
    j["failures"] = failures;
    j["total"] = static_cast<std::int64_t>(summary.items.size());
    return j;
}

// ---------------------------------------------------------------------------
// Dispatch.

struct RunResult {
    int exitCode = 0;
    std::string payload;
    std::string diagnostic; ///< for standard error
};

/// Runs the configured scenario and serializes its result; writes nothing.
inline RunResult execute(const RunConfig &config) {
    RunResult result;
    switch (config.subcommand) {
    case Subcommand::PstCycle:
        result.payload = emit_report(scenario_pst_cycle(config.count("N"), config.count("samples")), config);
        break;
    case Subcommand::PstTransfer:
        result.payload = emit_report(scenario_pst_transfer(config.count("N"), config.count("samples")), config);
        break;
    case Subcommand::QubitGate:
        result.payload = emit_report(
            scenario_qubit_gate(config.param("varpi_delta"), config.param("theta0"), config.count("samples")), config);
        break;
    case Subcommand::Surface:
        result.payload = emit_report(
            scenario_superposition_surface(config.count("grid_xi"), config.count("grid_gamma"), config.param("theta0"),
                                           static_cast<int>(config.param("n")), config.count("samples"),
                                           config.count("threads")),
            config);
        break;
    case Subcommand::DarkState:
        result.payload = emit_report(
            scenario_dark_state_loop(config.param("theta_c"), config.param("duration"), config.count("samples")),
            config);
        break;
    case Subcommand::BosonRing:
        result.payload = emit_report(scenario_boson_ring(config.count("N_U"), config.count("N_L")), config);
        break;
    case Subcommand::Selftest: {
        const auto summary = run_selftest(config.seed);
        result.payload = dump_json(selftest_json(summary));
        if (!summary.all_passed()) {
            result.exitCode = 1;
            for (const auto &item : summary.items) {
                if (!item.passed) {
                    result.diagnostic = "selftest: check failed: " + item.name;
                    break;
                }
            }
        }
        break;
    }
    }
    return result;
}

/// Full CLI behaviour; returns the process exit code.
inline int run(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    RunConfig config;
    try {
        config = parse_args(argv);
    } catch (const UsageExit &e) {
        (e.exitCode == 0 ? out : err) << e.message << (e.message.ends_with('\n') ? "" : "\n");
        return e.exitCode;
    }
    RunResult result;
    try {
        result = execute(config);
    } catch (const std::exception &e) {
        err << "dressedphase: " << e.what() << "\n";
        return 1;
    }
    if (config.outputPath) {
        std::ofstream file(*config.outputPath, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "dressedphase: cannot open output file " << *config.outputPath << "\n";
            return 1;
        }
        file << result.payload;
        file.flush();
        if (!file) {
            err << "dressedphase: failed writing " << *config.outputPath << "\n";
            return 1;
        }
    } else {
        out << result.payload;
    }
    if (!result.diagnostic.empty()) {
        err << result.diagnostic << "\n";
    }
    return result.exitCode;
}

} // namespace dressed::cli
