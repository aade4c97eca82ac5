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

// Seeded generators for random gates, Hamiltonians and schedules.
#pragma once

#include "schedule.hpp"

#include <random>

namespace dressed {

using Rng = std::mt19937_64;

inline ComplexMatrix random_ginibre(Eigen::Index n, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// R's diagonal folded into Q.
inline ComplexMatrix random_unitary(Eigen::Index n, Rng &rng) {
    const ComplexMatrix z = random_ginibre(n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        q.col(k) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
}

/// GUE-like Hermitian matrix with entries of order `scale`.
inline ComplexMatrix random_hermitian(Eigen::Index n, Rng &rng, double scale = 1.0) {
    const ComplexMatrix z = random_ginibre(n, rng);
    ComplexMatrix h = 0.5 * scale * (z + z.adjoint());
    return 0.5 * (h + h.adjoint());
}

inline StateVector random_state(Eigen::Index n, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = Complex(re, im);
    }
    return StateVector(std::move(v));
}

/// One to three segments, constant or smoothly driven
/// H(s) = A + sin(f s) B, with durations in [0.2, 2].
inline HamiltonianSchedule random_schedule(Eigen::Index n, Rng &rng, std::size_t sampleCount = 64) {
    std::uniform_int_distribution<int> segments(1, 3);
    std::uniform_real_distribution<double> duration(0.2, 2.0);
    std::uniform_real_distribution<double> frequency(0.5, 3.0);
    std::bernoulli_distribution sampled(0.5);
    std::vector<Segment> out;
    const int count = segments(rng);
    for (int i = 0; i < count; ++i) {
        const double d = duration(rng);
        if (sampled(rng)) {
            ComplexMatrix a = random_hermitian(n, rng);
            ComplexMatrix b = random_hermitian(n, rng);
            const double f = frequency(rng);
            out.emplace_back(SampledSegment{[a, b, f](double s) -> ComplexMatrix { return a + std::sin(f * s) * b; },
                                            d, sampleCount});
        } else {
            out.emplace_back(ConstantSegment{random_hermitian(n, rng), d});
        }
    }
    return HamiltonianSchedule(std::move(out));
}

} // namespace dressed
