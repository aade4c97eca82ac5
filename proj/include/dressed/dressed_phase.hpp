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
 * @file dressed_phase.hpp
 * Dressed operators W(tau) = G^dagger U(tau), their eigenstates, and the
 * split of the acquired phase into dynamical and geometric parts.
 *
 * For any gate G and any propagator U(tau), an eigenvector Psi_k of W(tau)
 * with eigenvalue exp(i phi_k) satisfies U(tau) Psi_k = exp(i phi_k) G Psi_k:
 * started in Psi_k, the given evolution performs G up to the phase phi_k.
 * The phase decomposes as beta = phi + D, where D is the time integral of
 * the expectation of the dressed Hamiltonian G^dagger H(t) G.
 */
#pragma once

#include "schedule.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dressed {

inline constexpr double kDefaultPhaseTolerance = 1e-8;
inline constexpr double kDefaultAmplitudeCutoff = 1e-12;

namespace detail {

inline void require_same_dimension(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(concat(what, ": dimension mismatch ", a.rows(), "x", a.cols(), " vs ",
                                           b.rows(), "x", b.cols()));
    }
}

} // namespace detail

/// W = G^dagger U
inline ComplexMatrix dressed_operator(const ComplexMatrix &gate, const ComplexMatrix &propagator) {
    detail::require_same_dimension(gate, propagator, "dressed_operator");
    require_unitary(gate, "dressed_operator gate");
    require_unitary(propagator, "dressed_operator propagator");
    return gate.adjoint() * propagator;
}

/// G^dagger H G
inline ComplexMatrix dressed_hamiltonian(const ComplexMatrix &gate, const ComplexMatrix &h) {
    detail::require_same_dimension(gate, h, "dressed_hamiltonian");
    require_hermitian(h, "dressed_hamiltonian");
    ComplexMatrix out = gate.adjoint() * h * gate;
    // Rounding leaves an anti-Hermitian residue at the 1e-16 level.
    return 0.5 * (out + out.adjoint());
}

/// Schedule generated by G^dagger H(t) G. Its propagator from the identity is
/// G^dagger U(t) G.
inline HamiltonianSchedule dressed_schedule(const ComplexMatrix &gate, const HamiltonianSchedule &schedule) {
    if (gate.rows() != schedule.dimension()) {
        throw std::invalid_argument("dressed_schedule: gate dimension does not match schedule");
    }
    require_unitary(gate, "dressed_schedule gate");
    std::vector<Segment> out;
    for (const auto &seg : schedule.segments()) {
        if (const auto *c = std::get_if<ConstantSegment>(&seg)) {
            out.emplace_back(ConstantSegment{dressed_hamiltonian(gate, c->hamiltonian), c->duration});
        } else {
            const auto &s = std::get<SampledSegment>(seg);
            auto gen = s.generator;
            out.emplace_back(SampledSegment{[gen, gate](double t) { return dressed_hamiltonian(gate, gen(t)); },
                                            s.duration, s.sampleCount});
        }
    }
    return HamiltonianSchedule(std::move(out));
}

struct DressedDecomposition {
    ComplexMatrix gate;
    ComplexMatrix propagator;
    ComplexMatrix dressedOperator;
    std::vector<double> eigenphases; ///< ascending, (-pi, pi]
    std::vector<StateVector> dressedStates;

    [[nodiscard]] std::size_t size() const { return eigenphases.size(); }
};

/// Residual ||U Psi - exp(i phi) G Psi||.
inline double gate_realization_residual(const ComplexMatrix &gate, const ComplexMatrix &propagator,
                                        const StateVector &psi, double phase) {
    return (propagator * psi.amplitudes() - std::polar(1.0, phase) * (gate * psi.amplitudes())).norm();
}

inline DressedDecomposition dressed_eigensystem(const ComplexMatrix &gate, const ComplexMatrix &propagator) {
    DressedDecomposition out;
    out.gate = gate;
    out.propagator = propagator;
    out.dressedOperator = dressed_operator(gate, propagator);
    auto eig = unitary_eig(out.dressedOperator);
    out.eigenphases = std::move(eig.phases);
    out.dressedStates.reserve(out.eigenphases.size());
    for (Eigen::Index k = 0; k < eig.vectors.cols(); ++k) {
        out.dressedStates.emplace_back(eig.vectors.col(k));
        const double residual = gate_realization_residual(gate, propagator, out.dressedStates.back(),
                                                          out.eigenphases[static_cast<std::size_t>(k)]);
        if (!(residual <= kUnitaryTolerance)) {
            throw NumericalError(detail::concat("dressed_eigensystem: gate-realization residual ", residual,
                                                " for dressed state ", k));
        }
    }
    return out;
}

/**
 * Phase phi of a state that W maps onto itself, W psi = exp(i phi) psi.
 * Throws when psi is not an eigenvector within `tolerance`.
 */
inline double eigenphase_of(const ComplexMatrix &w, const StateVector &psi, double tolerance = 1e-9) {
    const ComplexVector image = w * psi.amplitudes();
    const Complex q = psi.amplitudes().dot(image);
    const double phase = principal_arg(q);
    const double residual = (image - std::polar(1.0, phase) * psi.amplitudes()).norm();
    if (!(residual <= tolerance)) {
        throw NumericalError(
            detail::concat("eigenphase_of: state is not an eigenvector of the dressed operator, residual ", residual));
    }
    return phase;
}

/**
 * D = int_0^tau <U(t) psi0| G^dagger H(t) G |U(t) psi0> dt by the trapezoid
 * rule on each segment of the trajectory. The bare-evolved state enters the
 * integrand. Not reduced mod 2 pi.
 */
inline double dynamical_phase(const ComplexMatrix &gate, const HamiltonianSchedule &schedule,
                              const Trajectory &trajectory) {
    if (gate.rows() != schedule.dimension()) {
        throw std::invalid_argument("dynamical_phase: gate dimension does not match schedule");
    }
    const auto &segments = schedule.segments();
    if (trajectory.segmentStarts.size() != segments.size()) {
        throw std::invalid_argument("dynamical_phase: trajectory does not belong to this schedule");
    }
    double total = 0.0;
    for (std::size_t si = 0; si < segments.size(); ++si) {
        const std::size_t first = trajectory.segmentStarts[si];
        const std::size_t last = trajectory.segment_end(si);
        const double t0 = trajectory.times[first];
        const bool constant = std::holds_alternative<ConstantSegment>(segments[si]);
        ComplexMatrix dressed;
        if (constant) {
            dressed = dressed_hamiltonian(gate, schedule.hamiltonian_at(si, 0.0));
        }
        auto integrand = [&](std::size_t j) {
            if (!constant) {
                const double local = std::clamp(trajectory.times[j] - t0, 0.0, segment_duration(segments[si]));
                dressed = dressed_hamiltonian(gate, schedule.hamiltonian_at(si, local));
            }
            const ComplexVector &psi = trajectory.states[j].amplitudes();
            return psi.dot(dressed * psi).real();
        };
        double prev = integrand(first);
        for (std::size_t j = first + 1; j <= last; ++j) {
            const double cur = integrand(j);
            total += 0.5 * (prev + cur) * (trajectory.times[j] - trajectory.times[j - 1]);
            prev = cur;
        }
    }
    return total;
}

inline double dynamical_phase(const ComplexMatrix &gate, const HamiltonianSchedule &schedule,
                              const StateVector &psi0, std::size_t samplesPerSegment) {
    return dynamical_phase(gate, schedule, propagate(schedule, psi0, samplesPerSegment).trajectory);
}

/// beta = phi + D, principal value.
inline double aa_phase(double totalPhase, double dynamicalPart) { return wrap_phase(totalPhase + dynamicalPart); }

struct PhaseBreakdown {
    double totalPhase;    ///< phi in (-pi, pi]
    double dynamicalPart; ///< D, unwrapped
    double geometricPart; ///< beta = wrap(phi + D)
    static constexpr const char *convention = "D-convention";
};

/**
 * phi, D and beta for an initial state that is a dressed eigenstate of
 * W(tau) = G^dagger U(tau).
 */
inline PhaseBreakdown phase_breakdown(const ComplexMatrix &gate, const HamiltonianSchedule &schedule,
                                      const StateVector &psi0, std::size_t samplesPerSegment,
                                      double eigenTolerance = 1e-9) {
    const auto run = propagate(schedule, psi0, samplesPerSegment);
    const double phi = eigenphase_of(dressed_operator(gate, run.propagator), psi0, eigenTolerance);
    const double d = dynamical_phase(gate, schedule, run.trajectory);
    return {phi, d, aa_phase(phi, d)};
}

/**
 * Discrete gauge-invariant geometric phase of a sampled path:
 * arg<psi_0|psi_M> - sum_j arg<psi_j|psi_{j+1}>. For a cyclic evolution
 * it converges to phi + int <psi|H|psi> dt.
 */
inline double open_path_geometric_phase(const Trajectory &trajectory) {
    if (trajectory.size() < 3) {
        throw std::invalid_argument("open_path_geometric_phase: need at least 3 samples");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < trajectory.size(); ++j) {
        const Complex o = trajectory.states[j].overlap(trajectory.states[j + 1]);
        if (std::abs(o) < 1e-6) {
            throw NumericalError(detail::concat("open_path_geometric_phase: overlap between samples ", j, " and ",
                                                j + 1, " has modulus ", std::abs(o)));
        }
        sum += std::arg(o);
    }
    const Complex closing = trajectory.states.front().overlap(trajectory.states.back());
    if (std::abs(closing) < 1e-6) {
        throw NumericalError("open_path_geometric_phase: endpoints are orthogonal");
    }
    return wrap_phase(std::arg(closing) - sum);
}

struct IntegerConstraint {
    std::size_t index; ///< dressed state k
    long long winding; ///< m_k with phi = phi_k + 2 pi m_k
};

struct SuperpositionReport {
    std::vector<Complex> coefficients; ///< alpha_k = <Psi_k|Psi0>
    std::optional<double> matchedPhase;
    bool isGateRealized = false;
    std::vector<IntegerConstraint> integerConstraints;
    /// ||U Psi0 - exp(i phi) G Psi0|| when realized.
    std::optional<double> gateResidual;
};

/**
 * Expands Psi0 over the dressed states. The gate is realized up to a
 * single phase iff every eigenphase with |alpha_k| > amplitudeCutoff agrees
 * mod 2 pi within phaseTolerance.
 */
inline SuperpositionReport superposition_gate_check(const DressedDecomposition &decomp, const StateVector &psi0,
                                                    double phaseTolerance = kDefaultPhaseTolerance,
                                                    double amplitudeCutoff = kDefaultAmplitudeCutoff) {
    if (psi0.dimension() != decomp.dressedOperator.rows()) {
        throw std::invalid_argument("superposition_gate_check: state dimension mismatch");
    }
    SuperpositionReport report;
    std::vector<std::size_t> contributing;
    for (std::size_t k = 0; k < decomp.size(); ++k) {
        const Complex a = decomp.dressedStates[k].overlap(psi0);
        report.coefficients.push_back(a);
        if (std::abs(a) > amplitudeCutoff) {
            contributing.push_back(k);
        }
    }
    bool agree = !contributing.empty();
    for (auto k : contributing) {
        agree = agree && phase_distance(decomp.eigenphases[k], decomp.eigenphases[contributing.front()]) <=
                             phaseTolerance;
    }
    if (!agree) {
        return report;
    }
    const double phi = principal_arg(psi0.amplitudes().dot(decomp.dressedOperator * psi0.amplitudes()));
    report.matchedPhase = phi;
    report.isGateRealized = true;
    for (auto k : contributing) {
        const auto m = static_cast<long long>(std::llround((phi - decomp.eigenphases[k]) / kTwoPi));
        report.integerConstraints.push_back({k, m});
    }
    report.gateResidual = gate_realization_residual(decomp.gate, decomp.propagator, psi0, phi);
    if (*report.gateResidual > 10.0 * phaseTolerance) {
        report.isGateRealized = false;
    }
    return report;
}

/// Closed-form geometric phase of cos(xi)|up> + sin(xi) e^{i gamma}|down>
/// under the two-stage drive with varpi delta = pi n. It matches the
/// numerical phase only where sin 2xi sin 2theta0 sin gamma vanishes:
/// beta = pi n + theta0 sin 2xi cos gamma
///        + pi n [cos 2xi cos 2theta0 + sin 2xi sin 2theta0 sin gamma].
inline double superposition_beta_closed_form(double xi, double gamma, double theta0, int n) {
    const double pn = kPi * static_cast<double>(n);
    const double beta = pn + theta0 * std::sin(2 * xi) * std::cos(gamma) +
                        pn * (std::cos(2 * xi) * std::cos(2 * theta0) +
                              std::sin(2 * xi) * std::sin(2 * theta0) * std::sin(gamma));
    return wrap_phase(beta);
}

} // namespace dressed
