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

#include "dressed/linalg.hpp"
#include "dressed/models.hpp"
#include "dressed/random.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dressed;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

double eigen_residual(const ComplexMatrix &h, const HermitianEigensystem &eig) {
    double worst = 0.0;
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
        worst = std::max(worst, (h * eig.vectors.col(k) - eig.values[k] * eig.vectors.col(k)).norm());
    }
    return worst;
}

ComplexMatrix diag_unitary(const std::vector<double> &phases) {
    const auto n = static_cast<Eigen::Index>(phases.size());
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        d(k, k) = std::polar(1.0, phases[static_cast<std::size_t>(k)]);
    }
    return d;
}

double unitary_eig_residual(const ComplexMatrix &w, const UnitaryEigensystem &eig) {
    double worst = 0.0;
    for (Eigen::Index k = 0; k < w.rows(); ++k) {
        const ComplexVector v = eig.vectors.col(k);
        worst = std::max(worst, (w * v - std::polar(1.0, eig.phases[static_cast<std::size_t>(k)]) * v).norm());
    }
    return worst;
}

} // namespace

TEST_CASE("hermitian_eig on textbook matrices", "[linalg]") {
    SECTION("zero matrix") {
        const auto eig = hermitian_eig(ComplexMatrix::Zero(2, 2));
        CHECK(eig.values[0] == 0.0);
        CHECK(eig.values[1] == 0.0);
        CHECK(unitary_deviation(eig.vectors) < 1e-12);
    }
    SECTION("diag(1, -1) sorts ascending") {
        const auto eig = hermitian_eig(pauli_z());
        CHECK_THAT(eig.values[0], WithinAbs(-1.0, 1e-15));
        CHECK_THAT(eig.values[1], WithinAbs(1.0, 1e-15));
    }
    SECTION("sigma_x has eigenvectors (1, -+1)/sqrt2") {
        const auto eig = hermitian_eig(pauli_x());
        CHECK_THAT(eig.values[0], WithinAbs(-1.0, 1e-15));
        CHECK_THAT(eig.values[1], WithinAbs(1.0, 1e-15));
        const ComplexVector v0 = eig.vectors.col(0);
        const ComplexVector v1 = eig.vectors.col(1);
        CHECK_THAT(std::abs(v0[0] + v0[1]), WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(v1[0] - v1[1]), WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(v0[0]), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    }
}

TEST_CASE("hermitian_eig residuals on random matrices", "[linalg]") {
    Rng rng(7);
    for (Eigen::Index n = 1; n <= 10; ++n) {
        const ComplexMatrix h = random_hermitian(n, rng, 3.0);
        const auto eig = hermitian_eig(h);
        CHECK(eigen_residual(h, eig) <= 1e-10 * std::max(1.0, h.norm()));
        CHECK(unitary_deviation(eig.vectors) <= 1e-10);
        for (Eigen::Index k = 1; k < n; ++k) {
            CHECK(eig.values[k - 1] <= eig.values[k]);
        }
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input with the asymmetry", "[linalg][errors]") {
    ComplexMatrix m = pauli_x();
    m(0, 1) = 1.25;
    REQUIRE_THROWS_AS(hermitian_eig(m), std::invalid_argument);
    REQUIRE_THROWS_WITH(hermitian_eig(m), ContainsSubstring("0.25"));
    REQUIRE_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("evolve_exp closed forms", "[linalg]") {
    SECTION("sigma_z for pi/2 is diag(-i, i)") {
        const ComplexMatrix u = evolve_exp(pauli_z(), kPi / 2);
        CHECK_THAT(std::abs(u(0, 0) - Complex(0, -1)), WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(u(1, 1) - Complex(0, 1)), WithinAbs(0.0, 1e-15));
        CHECK(std::abs(u(0, 1)) < 1e-15);
    }
    SECTION("zero time is the identity") {
        Rng rng(3);
        const ComplexMatrix h = random_hermitian(5, rng);
        CHECK(max_norm(evolve_exp(h, 0.0) - ComplexMatrix::Identity(5, 5)) == 0.0);
    }
    SECTION("sigma_x for pi is -I") {
        CHECK(max_norm(evolve_exp(pauli_x(), kPi) + ComplexMatrix::Identity(2, 2)) < 1e-14);
    }
}

TEST_CASE("evolve_exp matches a Taylor-series exponential", "[linalg][oracle]") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 2 + trial % 7;
        const ComplexMatrix h = random_hermitian(n, rng);
        const double t = 0.1 + 0.3 * trial;
        const ComplexMatrix u = evolve_exp(h, t);
        CHECK(unitary_deviation(u) <= 1e-10);
        CHECK(max_norm(u - oracle::taylor_expm(h, t)) <= 1e-10);
    }
}

TEST_CASE("unitary_eig on diagonal and degenerate unitaries", "[linalg]") {
    SECTION("identity has all phases zero") {
        const auto eig = unitary_eig(ComplexMatrix::Identity(4, 4));
        for (double p : eig.phases) {
            CHECK(p == 0.0);
        }
        CHECK(unitary_deviation(eig.vectors) < 1e-12);
    }
    SECTION("diag(e^{i pi/4}, e^{-i pi/4})") {
        const auto eig = unitary_eig(diag_unitary({kPi / 4, -kPi / 4}));
        REQUIRE(eig.phases.size() == 2);
        CHECK_THAT(eig.phases[0], WithinAbs(-kPi / 4, 1e-14));
        CHECK_THAT(eig.phases[1], WithinAbs(kPi / 4, 1e-14));
    }
    SECTION("-I lands on the +pi branch") {
        const auto eig = unitary_eig(-ComplexMatrix::Identity(3, 3));
        for (double p : eig.phases) {
            CHECK(p == kPi);
        }
    }
    SECTION("degenerate eigenspaces stay orthonormal") {
        Rng rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::Index n = 3 + trial % 6;
            const ComplexMatrix v = random_unitary(n, rng);
            std::vector<double> phases;
            for (Eigen::Index k = 0; k < n; ++k) {
                phases.push_back(k % 2 == 0 ? 0.7 : (trial % 3 == 0 ? kPi : -2.1));
            }
            const ComplexMatrix w = v * diag_unitary(phases) * v.adjoint();
            const auto eig = unitary_eig(w);
            CHECK(unitary_eig_residual(w, eig) <= 1e-9);
            CHECK(unitary_deviation(eig.vectors) <= 1e-9);
        }
    }
    SECTION("phases within 1e-10 of each other are grouped and stay accurate") {
        Rng rng(8);
        const ComplexMatrix v = random_unitary(4, rng);
        const ComplexMatrix w = v * diag_unitary({0.3, 0.3 + 1e-10, -1.0, 2.0}) * v.adjoint();
        const auto eig = unitary_eig(w);
        CHECK(unitary_eig_residual(w, eig) <= 1e-9);
        CHECK(unitary_deviation(eig.vectors) <= 1e-9);
    }
}

TEST_CASE("unitary_eig residuals on Haar-random unitaries", "[linalg][property]") {
    Rng rng(20240611);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n = 1 + trial % 12;
        const ComplexMatrix w = random_unitary(n, rng);
        const auto eig = unitary_eig(w);
        CHECK(unitary_eig_residual(w, eig) <= 1e-9);
        CHECK(unitary_deviation(eig.vectors) <= 1e-9);
        for (std::size_t k = 0; k < eig.phases.size(); ++k) {
            CHECK(eig.phases[k] > -kPi);
            CHECK(eig.phases[k] <= kPi);
            if (k > 0) {
                CHECK(eig.phases[k - 1] <= eig.phases[k]);
            }
        }
    }
}

TEST_CASE("unitary_eig rejects non-unitary input", "[linalg][errors]") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 0) = 1.5;
    REQUIRE_THROWS_AS(unitary_eig(m), std::invalid_argument);
    REQUIRE_THROWS_WITH(unitary_eig(m), ContainsSubstring("not unitary"));
}

TEST_CASE("wrap_phase returns principal values", "[linalg]") {
    CHECK(wrap_phase(kPi) == kPi);
    CHECK(wrap_phase(-kPi) == kPi);
    CHECK_THAT(wrap_phase(3 * kPi), WithinAbs(kPi, 1e-15));
    CHECK_THAT(wrap_phase(kTwoPi + 0.25), WithinAbs(0.25, 1e-15));
    CHECK_THAT(wrap_phase(-kTwoPi - 0.25), WithinAbs(-0.25, 1e-15));
    CHECK_THAT(phase_distance(kPi - 1e-9, -kPi + 1e-9), WithinAbs(2e-9, 1e-15));
}
