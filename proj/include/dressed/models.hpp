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
 * @file models.hpp
 * Hamiltonians, gates and lattices: engineered XY chains in the
 * single-excitation sector, the two-stage qubit drive, the Lambda system
 * driven around a loop, and the two-arm bosonic ring.
 */
#pragma once

#include "schedule.hpp"

#include <array>
#include <cstddef>

namespace dressed {

// ---------------------------------------------------------------------------
// Pauli matrices and single-qubit rotations. Basis order (|up>, |down>).

inline ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

inline ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

enum class Axis { X, Y, Z };

inline ComplexMatrix pauli(Axis axis) {
    switch (axis) {
    case Axis::X:
        return pauli_x();
    case Axis::Y:
        return pauli_y();
    case Axis::Z:
        return pauli_z();
    }
    throw std::invalid_argument("pauli: unknown axis");
}

/// exp(-i angle sigma_axis) = cos(angle) I - i sin(angle) sigma_axis.
inline ComplexMatrix build_rotation_gate(double angle, Axis axis) {
    return std::cos(angle) * ComplexMatrix::Identity(2, 2) -
           Complex(0.0, std::sin(angle)) * pauli(axis);
}

// ---------------------------------------------------------------------------
// Engineered XY chain.

struct ChainSpec {
    std::size_t sites = 2;
    double coupling = 1.0; ///< J

    void validate() const {
        if (sites < 2) {
            throw std::invalid_argument(detail::concat("ChainSpec: need at least 2 sites, got ", sites));
        }
        if (!(coupling > 0.0) || !std::isfinite(coupling)) {
            throw std::invalid_argument(detail::concat("ChainSpec: coupling must be positive, got ", coupling));
        }
    }
};

/// Bond strength between sites j and j+1 (1-based j): J sqrt(j (N - j)) / 2.
inline double chain_bond(std::size_t j, std::size_t sites, double coupling) {
    return coupling * std::sqrt(static_cast<double>(j) * static_cast<double>(sites - j)) / 2.0;
}

/**
 * Single-excitation sector of the engineered XY chain, J L_x in the
 * spin-(N-1)/2 representation: tridiagonal, zero diagonal, spectrum
 * J {-(N-1)/2, ..., (N-1)/2}.
 */
inline ComplexMatrix build_xy_chain(const ChainSpec &spec) {
    spec.validate();
    const auto n = static_cast<Eigen::Index>(spec.sites);
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
        const double b = chain_bond(static_cast<std::size_t>(j + 1), spec.sites, spec.coupling);
        h(j, j + 1) = b;
        h(j + 1, j) = b;
    }
    return h;
}

struct TransferSignature {
    Complex signature;   ///< r = <N| exp(-i H t*) |1>
    double transferTime; ///< t*
};

/**
 * Locates the first time t* > 0 at which an excitation placed on site
 * `from` arrives on site `to` with unit probability, and returns the
 * amplitude r there.
 *
 * The amplitude a(t) = sum_k c_k exp(-i E_k t) is evaluated in closed form
 * from one eigendecomposition. The search scans (0, 4 pi / J] for sign
 * changes of d|a|^2/dt and bisects each maximum; the first maximum with
 * |a| = 1 within 1e-9 is accepted.
 */
inline TransferSignature measure_transfer_signature(const ComplexMatrix &h, double coupling,
                                                    Eigen::Index from, Eigen::Index to) {
    const auto eig = hermitian_eig(h);
    const Eigen::Index n = h.rows();
    if (from < 0 || from >= n || to < 0 || to >= n) {
        throw std::invalid_argument("measure_transfer_signature: site index out of range");
    }
    ComplexVector weights(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        weights[k] = eig.vectors(to, k) * std::conj(eig.vectors(from, k));
    }
    auto amplitude = [&](double t) {
        Complex a{0.0, 0.0};
        for (Eigen::Index k = 0; k < n; ++k) {
            a += weights[k] * std::polar(1.0, -eig.values[k] * t);
        }
        return a;
    };
    // d|a|^2/dt = 2 Re(conj(a) a')
    auto slope = [&](double t) {
        Complex a{0.0, 0.0};
        Complex da{0.0, 0.0};
        for (Eigen::Index k = 0; k < n; ++k) {
            const Complex term = weights[k] * std::polar(1.0, -eig.values[k] * t);
            a += term;
            da += Complex(0.0, -eig.values[k]) * term;
        }
        return 2.0 * (std::conj(a) * da).real();
    };

    const double horizon = 4.0 * kPi / coupling;
    const int grid = 2048;
    const double step = horizon / grid;
    double prev_t = step;
    double prev_slope = slope(prev_t);
    for (int i = 2; i <= grid; ++i) {
        const double t = step * i;
        const double s = slope(t);
        if (prev_slope > 0.0 && s <= 0.0) {
            double lo = prev_t;
            double hi = t;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (slope(mid) > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const double t_star = 0.5 * (lo + hi);
            const Complex r = amplitude(t_star);
            if (std::abs(std::abs(r) - 1.0) <= 1e-9) {
                return {r / std::abs(r), t_star};
            }
        }
        prev_t = t;
        prev_slope = s;
    }
    throw NumericalError(detail::concat("measure_transfer_signature: no perfect transfer from site ", from,
                                        " to site ", to, " within t <= 4 pi / J"));
}

inline TransferSignature measure_transfer_signature(const ChainSpec &spec) {
    spec.validate();
    return measure_transfer_signature(build_xy_chain(spec), spec.coupling, 0,
                                      static_cast<Eigen::Index>(spec.sites) - 1);
}

/**
 * Mirror gate G = r* exp(-i H t*) of the chain. G maps site 1 onto site N
 * with unit amplitude and squares to the identity.
 */
inline ComplexMatrix build_chain_swap_gate(const ChainSpec &spec) {
    const auto sig = measure_transfer_signature(spec);
    return std::conj(sig.signature) * evolve_exp(build_xy_chain(spec), sig.transferTime);
}

// ---------------------------------------------------------------------------
// Two-stage qubit drive: H = varpi sigma_z on (0, delta), then
// omega sigma_x until omega (tau - delta) = theta0.

struct QubitScheduleSpec {
    double zField = 1.0;        ///< varpi
    double zDuration = 1.0;     ///< delta
    double xField = 1.0;        ///< omega
    double rotationAngle = 0.5; ///< theta0

    void validate() const {
        if (!(zDuration > 0.0)) {
            throw std::invalid_argument("QubitScheduleSpec: delta must be positive");
        }
        if (!(xField > 0.0)) {
            throw std::invalid_argument("QubitScheduleSpec: omega must be positive");
        }
        if (!(rotationAngle > 0.0 && rotationAngle < kTwoPi)) {
            throw std::invalid_argument("QubitScheduleSpec: theta0 must lie in (0, 2 pi)");
        }
        if (!std::isfinite(zField)) {
            throw std::invalid_argument("QubitScheduleSpec: varpi must be finite");
        }
    }

    [[nodiscard]] double total_duration() const { return zDuration + rotationAngle / xField; }
};

inline HamiltonianSchedule build_qubit_schedule(const QubitScheduleSpec &spec) {
    spec.validate();
    return HamiltonianSchedule({ConstantSegment{spec.zField * pauli_z(), spec.zDuration},
                                ConstantSegment{spec.xField * pauli_x(), spec.rotationAngle / spec.xField}});
}

// ---------------------------------------------------------------------------
// Lambda system |0>, |1>, |e> (basis order) with
// H = |e>(Omega0 <0| + Omega1 <1|) + h.c.,
// Omega0 = cos(theta/2), Omega1 = -sin(theta/2) exp(i azimuth).

/// One linear leg of a loop in (theta, azimuth) parameter space.
struct PathLeg {
    double thetaStart;
    double thetaEnd;
    double azimuthStart;
    double azimuthEnd;
    double duration;

    [[nodiscard]] double theta_at(double s) const {
        return thetaStart + (thetaEnd - thetaStart) * (s / duration);
    }
    [[nodiscard]] double azimuth_at(double s) const {
        return azimuthStart + (azimuthEnd - azimuthStart) * (s / duration);
    }
};

struct LambdaLoopSpec {
    double capAngle = kPi / 2; ///< theta_c
    std::vector<PathLeg> legs;

    [[nodiscard]] double loop_duration() const {
        double total = 0.0;
        for (const auto &leg : legs) {
            total += leg.duration;
        }
        return total;
    }

    void validate() const {
        constexpr double tol = 1e-12;
        if (legs.empty()) {
            throw std::invalid_argument("LambdaLoopSpec: path has no legs");
        }
        if (std::abs(legs.front().thetaStart) > tol || std::abs(legs.back().thetaEnd) > tol) {
            throw std::invalid_argument("LambdaLoopSpec: path must start and end at theta = 0");
        }
        for (std::size_t i = 0; i < legs.size(); ++i) {
            if (!(legs[i].duration > 0.0)) {
                throw std::invalid_argument("LambdaLoopSpec: leg durations must be positive");
            }
            if (i > 0 && (std::abs(legs[i].thetaStart - legs[i - 1].thetaEnd) > tol ||
                          std::abs(legs[i].azimuthStart - legs[i - 1].azimuthEnd) > tol)) {
                throw std::invalid_argument(detail::concat("LambdaLoopSpec: path is discontinuous at leg ", i));
            }
        }
    }
};

/// Ramp theta 0 -> theta_c, sweep the azimuth through 2 pi, ramp back;
/// each leg takes a third of the loop duration.
inline LambdaLoopSpec cap_loop(double capAngle, double loopDuration) {
    const double third = loopDuration / 3.0;
    return {capAngle,
            {PathLeg{0.0, capAngle, 0.0, 0.0, third}, PathLeg{capAngle, capAngle, 0.0, kTwoPi, third},
             PathLeg{capAngle, 0.0, kTwoPi, kTwoPi, third}}};
}

inline ComplexMatrix lambda_hamiltonian(double theta, double azimuth) {
    const Complex omega0 = std::cos(theta / 2.0);
    const Complex omega1 = -std::sin(theta / 2.0) * std::polar(1.0, azimuth);
    ComplexMatrix h = ComplexMatrix::Zero(3, 3);
    h(2, 0) = omega0;
    h(2, 1) = omega1;
    h(0, 2) = std::conj(omega0);
    h(1, 2) = std::conj(omega1);
    return h;
}

/// G = |1><0| + |0><1| + |e><e|
inline ComplexMatrix lambda_swap_gate() {
    ComplexMatrix g = ComplexMatrix::Zero(3, 3);
    g(1, 0) = 1.0;
    g(0, 1) = 1.0;
    g(2, 2) = 1.0;
    return g;
}

/// Zero-energy state of the dressed Hamiltonian G^dagger H G:
/// cos(theta/2)|0> + sin(theta/2) exp(i azimuth)|1>.
inline StateVector lambda_dark_state(double theta, double azimuth) {
    ComplexVector v = ComplexVector::Zero(3);
    v[0] = std::cos(theta / 2.0);
    v[1] = std::sin(theta / 2.0) * std::polar(1.0, azimuth);
    return StateVector(std::move(v));
}

inline HamiltonianSchedule build_lambda_schedule(const LambdaLoopSpec &spec, std::size_t sampleCount) {
    spec.validate();
    if (sampleCount == 0) {
        throw std::invalid_argument("build_lambda_schedule: sampleCount must be >= 1");
    }
    std::vector<Segment> segments;
    for (const auto &leg : spec.legs) {
        segments.emplace_back(SampledSegment{
            [leg](double s) { return lambda_hamiltonian(leg.theta_at(s), leg.azimuth_at(s)); }, leg.duration,
            sampleCount});
    }
    return HamiltonianSchedule(std::move(segments));
}

// ---------------------------------------------------------------------------
// Two-arm bosonic ring, single-particle sector. Arms share their first
// site A and last site B. Hopping enters with the Bose-Hubbard sign -J_j.

enum class RingModel { IndependentArms, CoupledRing };

struct RingSpec {
    std::size_t upperSites = 7; ///< N_U
    std::size_t lowerSites = 5; ///< N_L
    double coupling = 1.0;
    RingModel model = RingModel::IndependentArms;

    void validate() const {
        if (upperSites < 2 || lowerSites < 2) {
            throw std::invalid_argument("RingSpec: each arm needs at least 2 sites");
        }
        if (model == RingModel::CoupledRing && upperSites + lowerSites < 5) {
            throw std::invalid_argument("RingSpec: a coupled ring needs at least one interior site");
        }
        if (!(coupling > 0.0)) {
            throw std::invalid_argument("RingSpec: coupling must be positive");
        }
    }
};

struct RingHamiltonian {
    RingModel model;
    /// IndependentArms: {upper, lower}. CoupledRing: {ring}.
    std::vector<ComplexMatrix> blocks;
    /// Site indices of A and B inside the coupled ring (0 and N_U - 1).
    Eigen::Index siteA = 0;
    Eigen::Index siteB = 0;
};

/// Ring site index of arm position p (1-based) on the upper or lower arm.
inline Eigen::Index ring_site(const RingSpec &spec, bool upper, std::size_t p) {
    const auto nu = static_cast<Eigen::Index>(spec.upperSites);
    const auto nl = static_cast<Eigen::Index>(spec.lowerSites);
    const auto pos = static_cast<Eigen::Index>(p);
    if (pos == 1) {
        return 0;
    }
    if (upper) {
        return pos - 1;
    }
    if (pos == nl) {
        return nu - 1;
    }
    return nu + pos - 2;
}

inline RingHamiltonian build_ring_hamiltonian(const RingSpec &spec) {
    spec.validate();
    if (spec.model == RingModel::IndependentArms) {
        return {spec.model,
                {-build_xy_chain({spec.upperSites, spec.coupling}), -build_xy_chain({spec.lowerSites, spec.coupling})},
                0,
                0};
    }
    const auto sites = static_cast<Eigen::Index>(spec.upperSites + spec.lowerSites - 2);
    ComplexMatrix h = ComplexMatrix::Zero(sites, sites);
    for (bool upper : {true, false}) {
        const std::size_t arm = upper ? spec.upperSites : spec.lowerSites;
        for (std::size_t j = 1; j < arm; ++j) {
            const auto a = ring_site(spec, upper, j);
            const auto b = ring_site(spec, upper, j + 1);
            const double bond = chain_bond(j, arm, spec.coupling);
            h(a, b) -= bond;
            h(b, a) -= bond;
        }
    }
    return {spec.model, {h}, 0, static_cast<Eigen::Index>(spec.upperSites) - 1};
}

} // namespace dressed
