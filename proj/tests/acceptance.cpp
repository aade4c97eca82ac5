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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Findings are printed but never change the outcome.

#include "dressed/cli.hpp"
#include "dressed/random.hpp"
#include "dressed/scenarios.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

using namespace dressed;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    std::vector<std::string> findings;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char *pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

Outcome chain_revival() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t n : {3, 4, 5, 6, 7, 8}) {
        const auto report = scenario_pst_cycle(n);
        const double expected = n % 2 == 0 ? -1.0 : 1.0;
        const double err = std::abs(Complex(report.output("e_i_beta_re"), report.output("e_i_beta_im")) - expected);
        worst = std::max(worst, err);
        o.require(err <= 1e-8, "N=" + std::to_string(n) + " e^{i beta} off by " + fmt("%.3e", err));
        o.require(std::abs(report.output("dynamical_phase")) <= 1e-9, "N=" + std::to_string(n) + " D != 0");
    }
    o.detail = o.passed ? "max |e^{i beta} - (-1)^{N-1}| = " + fmt("%.3e", worst) : o.detail;
    return o;
}

Outcome chain_transfer() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto report = scenario_pst_transfer(n);
        const double a = report.check("e_i_beta_minus_r").observed;
        const double b = report.check("e_i_beta_squared_minus_r_squared").observed;
        worst = std::max({worst, a, b});
        o.require(a <= 1e-8 && b <= 1e-8, "N=" + std::to_string(n));
    }
    o.detail = o.passed ? "max residual " + fmt("%.3e", worst) : o.detail;
    return o;
}

Outcome qubit_grid() {
    Outcome o;
    double worst = 0.0;
    for (double vd : {kPi / 6, kPi / 3, 1.0, 2.0}) {
        for (double theta0 : {kPi / 8, kPi / 4, 1.0}) {
            const auto report = scenario_qubit_gate(vd, theta0);
            const double c2 = std::cos(2 * theta0);
            const double errs[] = {
                std::abs(report.output("dynamical_up") - vd * c2),
                std::abs(report.output("dynamical_down") + vd * c2),
                phase_distance(report.output("beta_up"), -vd * (1 - c2)),
                phase_distance(report.output("beta_down"), vd * (1 - c2)),
            };
            for (double e : errs) {
                worst = std::max(worst, e);
                o.require(e <= 1e-8, "varpi delta " + fmt("%.4f", vd) + ", theta0 " + fmt("%.4f", theta0));
            }
        }
    }
    o.detail = o.passed ? "max deviation " + fmt("%.3e", worst) : o.detail;
    return o;
}

Outcome gate_realization() {
    Outcome o;
    Rng rng(20240611);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 2 + trial % 7;
        const ComplexMatrix g = random_unitary(n, rng);
        const ComplexMatrix u = total_propagator(random_schedule(n, rng));
        const auto eig = unitary_eig(dressed_operator(g, u));
        for (Eigen::Index k = 0; k < n; ++k) {
            worst = std::max(worst, gate_realization_residual(g, u, StateVector(eig.vectors.col(k)),
                                                              eig.phases[static_cast<std::size_t>(k)]));
        }
    }
    o.require(worst <= 1e-9, "residual " + fmt("%.3e", worst));
    o.detail = o.passed ? "200 pairs, max residual " + fmt("%.3e", worst) : o.detail;
    return o;
}

Outcome superposition() {
    Outcome o;
    const double theta0 = 1.0;
    for (int n : {1, 2}) {
        const auto surface = scenario_superposition_surface(81, 81, theta0, n, kDefaultSurfaceSamples, 4);
        const double pm = surface.report.output("pm_gate_deviation");
        o.require(pm <= 1e-9, "n=" + std::to_string(n) + " ||U -+ G|| = " + fmt("%.3e", pm));
        o.require(surface.report.output("unrealized_points") == 0.0, "n=" + std::to_string(n) + " unrealized points");
        double on_lines = 0.0;
        for (const auto &p : surface.points) {
            if (std::abs(std::sin(p.gamma)) <= 1e-12) {
                on_lines = std::max(on_lines, phase_distance(p.betaNumeric, p.betaClosedForm));
            }
        }
        o.require(on_lines <= 1e-6, "n=" + std::to_string(n) + " gamma in {0, pi}: " + fmt("%.3e", on_lines));
        const std::string path = "surface_n" + std::to_string(n) + ".csv";
        std::ofstream(path) << cli::surface_csv(surface);
        o.findings.push_back("n=" + std::to_string(n) + ": max |beta - closed form| on gamma in {0, pi} = " +
                             fmt("%.3e", on_lines) + ", off those lines = " +
                             fmt("%.3e", surface.report.output("max_discrepancy_off_lines")) + " (written " + path +
                             ")");
    }
    if (o.passed) {
        o.detail = "81x81 surfaces for n = 1, 2";
    }
    return o;
}

Outcome dark_state() {
    Outcome o;
    for (double cap : {kPi / 4, kPi / 2}) {
        const std::string label = "theta_c=" + fmt("%.4f", cap);
        const double oracle = -kTwoPi * std::sin(cap / 2) * std::sin(cap / 2);
        double previous = std::numeric_limits<double>::infinity();
        for (double duration : {2000.0, 4000.0, 8000.0}) {
            const auto r = scenario_dark_state_loop(cap, duration, static_cast<std::size_t>(duration));
            const double err = phase_distance(r.adiabaticPhase, oracle);
            o.require(r.dynamicalResidual <= 1e-9, label + " branch D = " + fmt("%.3e", r.dynamicalResidual));
            if (duration == 2000.0) {
                o.require(err <= 5e-2, label + " adiabatic error " + fmt("%.3e", err));
                o.findings.push_back(label + ": adiabatic phase " + fmt("%.6f", r.adiabaticPhase) + " vs " +
                                     fmt("%.6f", oracle) + "; solid-angle integral " + fmt("%.6f", r.solidAngle) +
                                     " (recorded only)");
            }
            o.require(err < previous, label + " no improvement at T=" + fmt("%.0f", duration));
            o.findings.push_back(label + ", T=" + fmt("%.0f", duration) + ": error " + fmt("%.3e", err) +
                                 ", full <psi|H|psi> integral " + fmt("%.3e", r.dynamicalIntegral));
            previous = err;
        }
    }
    if (o.passed) {
        o.detail = "theta_c = pi/4, pi/2; T = 2000, 4000, 8000";
    }
    return o;
}

Outcome boson_ring() {
    Outcome o;
    const std::pair<std::pair<std::size_t, std::size_t>, double> cases[] = {{{7, 5}, 0.0}, {{5, 5}, 4.0}, {{6, 5}, 2.0}};
    for (const auto &[arms, expected] : cases) {
        const auto r = scenario_boson_ring(arms.first, arms.second);
        o.require(std::abs(r.intensityFactor - expected) <= 1e-9,
                  std::to_string(arms.first) + "x" + std::to_string(arms.second) + ": " + fmt("%.3e", r.intensityFactor));
        if (r.coupledRingAmplitude) {
            o.findings.push_back(std::to_string(arms.first) + "x" + std::to_string(arms.second) +
                                 " coupled ring |<B|U|A>|^2 = " + fmt("%.3e", std::norm(*r.coupledRingAmplitude)));
        }
    }
    if (o.passed) {
        o.detail = "I(7,5) = 0, I(5,5) = 4, I(6,5) = 2";
    }
    return o;
}

Outcome hygiene() {
    Outcome o;
    Rng rng(7);
    double unitarity = 0.0;
    double eigen = 0.0;
    double reparam = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 2 + trial % 7;
        const ComplexMatrix g = random_unitary(n, rng);
        const auto schedule = random_schedule(n, rng, 128);
        const ComplexMatrix u = total_propagator(schedule);
        unitarity = std::max(unitarity, unitary_deviation(u));
        const auto eig = unitary_eig(dressed_operator(g, u));
        for (Eigen::Index k = 0; k < n; ++k) {
            const ComplexVector v = eig.vectors.col(k);
            eigen = std::max(eigen, (g.adjoint() * u * v - std::polar(1.0, eig.phases[static_cast<std::size_t>(k)]) * v).norm());
        }
        if (trial < 10) {
            const StateVector psi(eig.vectors.col(0));
            const auto base = phase_breakdown(g, schedule, psi, 128);
            for (double c : {0.5, 3.0}) {
                const auto other = phase_breakdown(g, reparameterize(schedule, c), psi, 128);
                reparam = std::max({reparam, phase_distance(other.totalPhase, base.totalPhase),
                                    std::abs(other.dynamicalPart - base.dynamicalPart),
                                    phase_distance(other.geometricPart, base.geometricPart)});
            }
        }
    }
    const auto cycle = scenario_pst_cycle(4, 2000);
    unitarity = std::max(unitarity, cycle.output("unitarity_deviation"));
    const double estimator = phase_distance(cycle.output("open_path_beta"), cycle.output("beta"));
    o.require(unitarity <= 1e-10, "unitarity " + fmt("%.3e", unitarity));
    o.require(eigen <= 1e-9, "eigenresidual " + fmt("%.3e", eigen));
    o.require(reparam <= 1e-8, "reparameterization " + fmt("%.3e", reparam));
    o.require(estimator <= 5e-3, "estimator " + fmt("%.3e", estimator));
    if (o.passed) {
        o.detail = "unitarity " + fmt("%.1e", unitarity) + ", eigenresidual " + fmt("%.1e", eigen) +
                   ", reparameterization " + fmt("%.1e", reparam) + ", estimator " + fmt("%.1e", estimator);
    }
    return o;
}

} // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"cyclic chain phase", chain_revival},
        {"transfer-gate phase", chain_transfer},
        {"qubit-gate phases", qubit_grid},
        {"gate realization", gate_realization},
        {"superposition condition", superposition},
        {"dark-state loop", dark_state},
        {"boson ring intensity", boson_ring},
        {"numerical hygiene", hygiene},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, fn] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = fn();
        } catch (const std::exception &e) {
            outcome.passed = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += outcome.passed ? 0 : 1;
        std::printf("%s %d %s: %s (%.2fs)\n", outcome.passed ? "PASS" : "FAIL", index, name, outcome.detail.c_str(),
                    seconds);
        for (const auto &f : outcome.findings) {
            std::printf("     finding: %s\n", f.c_str());
        }
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
