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
 * @file selftest.hpp
 * Invariant sweep plus the scenario matrix, summarized as a list of named
 * pass/fail items. `toleranceScale` multiplies every tolerance; values
 * below one tighten the suite.
 */
#pragma once

#include "random.hpp"
#include "scenarios.hpp"

#include <cstdint>

namespace dressed {

inline constexpr std::uint64_t kDefaultSelftestSeed = 20240611;

struct SelftestItem {
    std::string name;
    double observed;
    double tolerance;
    bool passed;
};

struct SelftestSummary {
    std::uint64_t seed = 0;
    std::vector<SelftestItem> items;

    [[nodiscard]] bool all_passed() const {
        for (const auto &item : items) {
            if (!item.passed) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

inline void record(SelftestSummary &summary, std::string name, double observed, double tolerance, double scale) {
    const double tol = tolerance * scale;
    summary.items.push_back({std::move(name), observed, tol, std::isfinite(observed) && observed <= tol});
}

inline void record_report(SelftestSummary &summary, const ScenarioReport &report, const std::string &label,
                          double scale) {
    for (const auto &c : report.checks) {
        record(summary, label + "/" + c.name, std::abs(c.observed - c.expected), c.tolerance, scale);
    }
}

} // namespace detail

inline SelftestSummary run_selftest(std::uint64_t seed = kDefaultSelftestSeed, double toleranceScale = 1.0) {
    SelftestSummary summary;
    summary.seed = seed;
    Rng rng(seed);

    // Unitarity and gate realization on random models.
    double worst_unitarity = 0.0;
    double worst_realization = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index dim = 2 + trial % 7;
        const ComplexMatrix gate = random_unitary(dim, rng);
        const auto schedule = random_schedule(dim, rng);
        const ComplexMatrix u = total_propagator(schedule);
        worst_unitarity = std::max(worst_unitarity, unitary_deviation(u));
        const auto decomp = dressed_eigensystem(gate, u);
        for (std::size_t k = 0; k < decomp.size(); ++k) {
            worst_realization = std::max(
                worst_realization,
                gate_realization_residual(gate, u, decomp.dressedStates[k], decomp.eigenphases[k]));
        }
    }
    detail::record(summary, "invariant/propagator_unitarity", worst_unitarity, 1e-10, toleranceScale);
    detail::record(summary, "invariant/gate_realization", worst_realization, 1e-9, toleranceScale);

    // Reparameterization: (H, d) and (c H(c s), d / c) give the same phases.
    double worst_reparam = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        const Eigen::Index dim = 2 + trial % 3;
        const ComplexMatrix gate = random_unitary(dim, rng);
        const auto schedule = random_schedule(dim, rng, 128);
        const auto decomp = dressed_eigensystem(gate, total_propagator(schedule));
        const StateVector &psi = decomp.dressedStates.front();
        const auto base = phase_breakdown(gate, schedule, psi, 128);
        for (double c : {2.0, 10.0}) {
            const auto fast = phase_breakdown(gate, reparameterize(schedule, c), psi, 128);
            worst_reparam = std::max({worst_reparam, phase_distance(base.totalPhase, fast.totalPhase),
                                      std::abs(base.dynamicalPart - fast.dynamicalPart),
                                      phase_distance(base.geometricPart, fast.geometricPart)});
        }
    }
    detail::record(summary, "invariant/reparameterization", worst_reparam, 1e-8, toleranceScale);

    // Discrete estimator against phi + D on the revival of a 4-site chain.
    {
        const auto report = scenario_pst_cycle(4, 2000);
        detail::record(summary, "invariant/estimator_consistency",
                       phase_distance(report.output("open_path_beta"), report.output("beta")), 5e-3, toleranceScale);
    }

    for (std::size_t n : {3, 4, 5, 6, 7, 8}) {
        detail::record_report(summary, scenario_pst_cycle(n, 200), "pst-cycle/N=" + std::to_string(n), toleranceScale);
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        detail::record_report(summary, scenario_pst_transfer(n, 50), "pst-transfer/N=" + std::to_string(n),
                              toleranceScale);
    }
    for (double vd : {kPi / 6, kPi / 3, 1.0, 2.0}) {
        for (double theta0 : {kPi / 8, kPi / 4, 1.0}) {
            detail::record_report(summary, scenario_qubit_gate(vd, theta0, 100), "qubit-gate", toleranceScale);
        }
    }
    for (int n : {1, 2}) {
        detail::record_report(summary, scenario_superposition_surface(9, 9, 1.0, n, 64).report,
                              "surface/n=" + std::to_string(n), toleranceScale);
    }
    for (double cap : {kPi / 4, kPi / 2}) {
        detail::record_report(summary, scenario_dark_state_loop(cap, 2000.0, 2000).to_report(), "dark-state",
                              toleranceScale);
    }
    for (auto [nu, nl] : {std::pair<std::size_t, std::size_t>{7, 5}, {5, 5}, {6, 5}}) {
        detail::record_report(summary, scenario_boson_ring(nu, nl).to_report(),
                              "boson-ring/" + std::to_string(nu) + "x" + std::to_string(nl), toleranceScale);
    }
    return summary;
}

} // namespace dressed
