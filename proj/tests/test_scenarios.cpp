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

#include "dressed/scenarios.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dressed;
using Catch::Matchers::WithinAbs;

namespace {

void require_all_passed(const ScenarioReport &report) {
    for (const auto &c : report.checks) {
        INFO(report.scenarioName << "/" << c.name << ": observed " << c.observed << ", expected " << c.expected);
        CHECK(c.passed);
    }
    CHECK_NOTHROW(report.validate());
}

} // namespace

TEST_CASE("chain revival", "[scenarios]") {
    SECTION("N = 4: e^{i beta} = -1, D = 0") {
        const auto report = scenario_pst_cycle(4);
        require_all_passed(report);
        CHECK_THAT(report.output("e_i_beta_re"), WithinAbs(-1.0, 1e-8));
        CHECK_THAT(report.output("dynamical_phase"), WithinAbs(0.0, 1e-9));
        CHECK_THAT(report.output("cycle_time"), WithinAbs(kTwoPi, 1e-6));
    }
    SECTION("N = 5: e^{i beta} = +1") {
        const auto report = scenario_pst_cycle(5, 500);
        require_all_passed(report);
        CHECK_THAT(report.output("e_i_beta_re"), WithinAbs(1.0, 1e-8));
    }
    SECTION("N = 2..10 at two sampling levels") {
        for (std::size_t n = 2; n <= 10; ++n) {
            const auto coarse = scenario_pst_cycle(n, 100);
            const auto fine = scenario_pst_cycle(n, 400);
            require_all_passed(coarse);
            require_all_passed(fine);
            CHECK(phase_distance(coarse.output("beta"), fine.output("beta")) <= 1e-9);
            CHECK(phase_distance(fine.output("beta"), kPi * static_cast<double>(n - 1)) <= 1e-8);
        }
    }
}

TEST_CASE("chain transfer", "[scenarios]") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto report = scenario_pst_transfer(n, 100);
        require_all_passed(report);
        const Complex r(report.output("r_re"), report.output("r_im"));
        const Complex e_beta(report.output("e_i_beta_re"), report.output("e_i_beta_im"));
        CHECK(std::abs(r - oracle::chain_signature(n)) <= 1e-8);
        CHECK(std::abs(e_beta - oracle::chain_signature(n)) <= 1e-8);
    }
}

TEST_CASE("two-stage qubit gate", "[scenarios]") {
    SECTION("varpi delta = pi/3, theta0 = pi/4") {
        const auto report = scenario_qubit_gate(kPi / 3, kPi / 4);
        require_all_passed(report);
        CHECK_THAT(report.output("dynamical_up"), WithinAbs(0.0, 1e-8));
        CHECK(phase_distance(report.output("beta_up"), -kPi / 3) <= 1e-8);
        CHECK(phase_distance(report.output("beta_down"), kPi / 3) <= 1e-8);
    }
    SECTION("grid of drives") {
        for (double vd : {-1.0, 0.4, kPi / 2, 2.7}) {
            for (double theta0 : {0.2, 0.9, 1.4}) {
                require_all_passed(scenario_qubit_gate(vd, theta0, 50));
            }
        }
    }
    SECTION("varpi delta = 0 is rejected") {
        CHECK_THROWS_AS(scenario_qubit_gate(0.0, 1.0), std::invalid_argument);
    }
}

TEST_CASE("superposition surface", "[scenarios]") {
    SECTION("9 x 9, n = 1") {
        const auto surface = scenario_superposition_surface(9, 9, 1.0, 1, 64);
        require_all_passed(surface.report);
        REQUIRE(surface.points.size() == 81);
        CHECK(surface.points.front().xi == 0.0);
        CHECK(surface.points.front().gamma == 0.0);
        CHECK_THAT(surface.points.back().xi, WithinAbs(kPi, 1e-15));
        CHECK_THAT(surface.points.back().gamma, WithinAbs(kTwoPi, 1e-15));
        // gamma = 0 and gamma = pi lines, the xi = 0, pi/2, pi lines.
        CHECK(surface.report.output("points_on_agreeing_lines") >= 9 * 3 + 9 * 3 - 9);
    }
    SECTION("numeric phase matches pi n + D from the hand-derived integral") {
        const double theta0 = 0.8;
        const auto surface = scenario_superposition_surface(5, 7, theta0, 2, 400);
        for (const auto &p : surface.points) {
            const double d = oracle::qubit_dynamical_integral(p.xi, p.gamma, 2 * kPi, theta0);
            CHECK(phase_distance(p.betaNumeric, 2 * kPi + d) <= 1e-5);
        }
    }
    SECTION("threaded sweep is bit-identical to the sequential one") {
        const auto one = scenario_superposition_surface(7, 11, 0.6, 1, 32, 1);
        const auto many = scenario_superposition_surface(7, 11, 0.6, 1, 32, 5);
        REQUIRE(one.points.size() == many.points.size());
        for (std::size_t i = 0; i < one.points.size(); ++i) {
            CHECK(one.points[i].betaNumeric == many.points[i].betaNumeric);
            CHECK(one.points[i].betaClosedForm == many.points[i].betaClosedForm);
        }
    }
    SECTION("invalid arguments") {
        CHECK_THROWS_AS(scenario_superposition_surface(0, 3, 1.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(scenario_superposition_surface(3, 3, 1.0, 0), std::invalid_argument);
    }
}

TEST_CASE("dark-state loop", "[scenarios][slow]") {
    SECTION("theta_c = pi/2") {
        const auto report = scenario_dark_state_loop(kPi / 2);
        require_all_passed(report.to_report());
        CHECK(phase_distance(report.connectionPhase, oracle::cap_connection_phase(kPi / 2)) <= 1e-6);
        CHECK(phase_distance(report.adiabaticPhase, -kPi) <= 5e-2);
        CHECK_THAT(report.solidAngle, WithinAbs(kTwoPi, 1e-12));
        CHECK_FALSE(report.adiabaticityFailure);
    }
    SECTION("connection phase for several caps") {
        for (double cap : {0.3, kPi / 4, 2.0}) {
            const auto report = scenario_dark_state_loop(cap, 1000.0, 1000);
            CHECK(phase_distance(report.connectionPhase, oracle::cap_connection_phase(cap)) <= 1e-6);
            CHECK(phase_distance(report.adiabaticPhase, report.connectionPhase) <= 5e-2);
            CHECK(report.dynamicalResidual <= 1e-9);
        }
    }
    SECTION("theta_c = 0 gives zero phases") {
        const auto report = scenario_dark_state_loop(0.0, 300.0, 300);
        CHECK(report.connectionPhase == 0.0);
        CHECK_THAT(report.adiabaticPhase, WithinAbs(0.0, 1e-12));
        CHECK_THAT(report.finalOverlap, WithinAbs(1.0, 1e-12));
    }
    SECTION("a fast loop is flagged as non-adiabatic") {
        const auto report = scenario_dark_state_loop(kPi / 2, 3.0, 300);
        CHECK(report.adiabaticityFailure);
        CHECK_FALSE(report.to_report().all_passed());
    }
    SECTION("invalid arguments") {
        CHECK_THROWS_AS(scenario_dark_state_loop(-0.1), std::invalid_argument);
        CHECK_THROWS_AS(scenario_dark_state_loop(1.0, 0.0), std::invalid_argument);
    }
}

TEST_CASE("bosonic ring", "[scenarios]") {
    SECTION("7 + 5: destructive") {
        const auto report = scenario_boson_ring(7, 5);
        require_all_passed(report.to_report());
        CHECK_THAT(report.intensityFactor, WithinAbs(0.0, 1e-9));
        CHECK(report.coupledRingAmplitude.has_value());
    }
    SECTION("equal arms: constructive") {
        CHECK_THAT(scenario_boson_ring(5, 5).intensityFactor, WithinAbs(4.0, 1e-9));
    }
    SECTION("odd difference: half") {
        CHECK_THAT(scenario_boson_ring(6, 5).intensityFactor, WithinAbs(2.0, 1e-9));
    }
    SECTION("swapping the arms leaves the intensity alone") {
        for (std::size_t nu = 2; nu <= 9; ++nu) {
            for (std::size_t nl = 2; nl <= 9; ++nl) {
                const auto a = scenario_boson_ring(nu, nl);
                const auto b = scenario_boson_ring(nl, nu);
                CHECK_THAT(a.intensityFactor - b.intensityFactor, WithinAbs(0.0, 1e-9));
                require_all_passed(a.to_report());
            }
        }
    }
}
