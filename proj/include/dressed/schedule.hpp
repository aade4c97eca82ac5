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
 * @file schedule.hpp
 * Normalized states, piecewise time-dependent Hamiltonians and their
 * propagation.
 */
#pragma once

#include "linalg.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

namespace dressed {

/// A state vector kept at unit Euclidean norm.
class StateVector {
  public:
    explicit StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() == 0) {
            throw std::invalid_argument("StateVector: empty amplitude vector");
        }
        const double norm = amplitudes_.norm();
        if (!std::isfinite(norm) || norm < 1e-300) {
            throw std::invalid_argument("StateVector: amplitudes have zero or non-finite norm");
        }
        amplitudes_ /= norm;
    }

    /// Computational basis vector |index>.
    static StateVector basis(Eigen::Index dim, Eigen::Index index) {
        if (index < 0 || index >= dim) {
            throw std::invalid_argument(detail::concat("StateVector::basis: index ", index,
                                                       " out of range for dimension ", dim));
        }
        ComplexVector v = ComplexVector::Zero(dim);
        v[index] = 1.0;
        return StateVector(std::move(v));
    }

    [[nodiscard]] Eigen::Index dimension() const { return amplitudes_.size(); }
    [[nodiscard]] const ComplexVector &amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

    /// <this|other>
    [[nodiscard]] Complex overlap(const StateVector &other) const {
        return amplitudes_.dot(other.amplitudes_);
    }

  private:
    ComplexVector amplitudes_;
};

/// Applies a unitary; the result is renormalized against rounding drift.
inline StateVector apply(const ComplexMatrix &u, const StateVector &psi) {
    if (u.cols() != psi.dimension()) {
        throw std::invalid_argument(detail::concat("apply: operator is ", u.rows(), "x", u.cols(),
                                                   " but state has dimension ", psi.dimension()));
    }
    return StateVector(u * psi.amplitudes());
}

struct ConstantSegment {
    ComplexMatrix hamiltonian;
    double duration;
};

/// H(s) for local time s in [0, duration]. The generator must be a pure
/// function of s.
struct SampledSegment {
    std::function<ComplexMatrix(double)> generator;
    double duration;
    std::size_t sampleCount;
};

using Segment = std::variant<ConstantSegment, SampledSegment>;

inline double segment_duration(const Segment &s) {
    return std::visit([](const auto &seg) { return seg.duration; }, s);
}

/// An ordered list of Hamiltonian segments covering [0, tau].
class HamiltonianSchedule {
  public:
    explicit HamiltonianSchedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
        if (segments_.empty()) {
            throw std::invalid_argument("HamiltonianSchedule: no segments");
        }
        total_ = 0.0;
        dim_ = -1;
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const double d = segment_duration(segments_[i]);
            if (!(d > 0.0) || !std::isfinite(d)) {
                throw std::invalid_argument(
                    detail::concat("HamiltonianSchedule: segment ", i, " has non-positive duration ", d));
            }
            total_ += d;
            Eigen::Index dim = 0;
            if (const auto *c = std::get_if<ConstantSegment>(&segments_[i])) {
                require_hermitian(c->hamiltonian, "HamiltonianSchedule constant segment");
                dim = c->hamiltonian.rows();
            } else {
                const auto &s = std::get<SampledSegment>(segments_[i]);
                if (!s.generator) {
                    throw std::invalid_argument("HamiltonianSchedule: sampled segment without generator");
                }
                if (s.sampleCount == 0) {
                    throw std::invalid_argument("HamiltonianSchedule: sampled segment needs sampleCount >= 1");
                }
                const ComplexMatrix probe = s.generator(0.0);
                require_hermitian(probe, "HamiltonianSchedule sampled segment");
                dim = probe.rows();
            }
            if (dim_ < 0) {
                dim_ = dim;
            } else if (dim != dim_) {
                throw std::invalid_argument(detail::concat("HamiltonianSchedule: segment ", i,
                                                           " has dimension ", dim, ", expected ", dim_));
            }
        }
    }

    static HamiltonianSchedule constant(ComplexMatrix h, double duration) {
        return HamiltonianSchedule({ConstantSegment{std::move(h), duration}});
    }

    [[nodiscard]] const std::vector<Segment> &segments() const { return segments_; }
    [[nodiscard]] Eigen::Index dimension() const { return dim_; }
    [[nodiscard]] double total_duration() const { return total_; }

    /// H at local time s within segment `index`. Sampled values are checked
    /// for Hermiticity.
    [[nodiscard]] ComplexMatrix hamiltonian_at(std::size_t index, double s) const {
        const Segment &seg = segments_.at(index);
        if (const auto *c = std::get_if<ConstantSegment>(&seg)) {
            return c->hamiltonian;
        }
        ComplexMatrix h = std::get<SampledSegment>(seg).generator(s);
        if (h.rows() != dim_ || h.cols() != dim_) {
            throw std::invalid_argument(detail::concat("HamiltonianSchedule: generator returned ",
                                                       h.rows(), "x", h.cols(), ", expected ", dim_));
        }
        require_hermitian(h, "HamiltonianSchedule sample");
        return h;
    }

  private:
    std::vector<Segment> segments_;
    double total_ = 0.0;
    Eigen::Index dim_ = -1;
};

/**
 * Maps every segment H(s) on duration d to c * H(c * s) on duration d / c.
 * The propagator at the end of the schedule is unchanged in exact arithmetic.
 */
inline HamiltonianSchedule reparameterize(const HamiltonianSchedule &schedule, double c) {
    if (!(c > 0.0)) {
        throw std::invalid_argument("reparameterize: speed factor must be positive");
    }
    std::vector<Segment> out;
    for (const auto &seg : schedule.segments()) {
        if (const auto *k = std::get_if<ConstantSegment>(&seg)) {
            out.emplace_back(ConstantSegment{c * k->hamiltonian, k->duration / c});
        } else {
            const auto &s = std::get<SampledSegment>(seg);
            auto gen = s.generator;
            out.emplace_back(SampledSegment{[gen, c](double t) -> ComplexMatrix { return c * gen(c * t); },
                                            s.duration / c, s.sampleCount});
        }
    }
    return HamiltonianSchedule(std::move(out));
}

/// Sampled path |psi(t)> on a strictly increasing time grid from 0 to tau.
struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
    /// Index of the first sample of each segment; segment i spans
    /// samples [segmentStarts[i], segmentStarts[i+1]] inclusive.
    std::vector<std::size_t> segmentStarts;
    /// One unitary per step when requested; step j maps states[j] to states[j+1].
    std::vector<ComplexMatrix> stepPropagators;

    [[nodiscard]] std::size_t size() const { return times.size(); }
    [[nodiscard]] const StateVector &final_state() const { return states.back(); }
    [[nodiscard]] std::size_t segment_end(std::size_t segment) const {
        return segment + 1 < segmentStarts.size() ? segmentStarts[segment + 1] : times.size() - 1;
    }
};

struct Propagation {
    ComplexMatrix propagator; ///< U(tau)
    Trajectory trajectory;
};

/**
 * Solves i d/dt |psi> = H(t) |psi> across the schedule.
 *
 * Constant segments are exponentiated exactly; the trajectory visits
 * samplesPerSegment equally spaced points inside each of them. Sampled
 * segments take sampleCount midpoint steps exp(-i H(t_mid) dt), which is
 * unitary at every step and second-order accurate.
 */
inline Propagation propagate(const HamiltonianSchedule &schedule, const StateVector &psi0,
                             std::size_t samplesPerSegment, bool storeStepPropagators = false) {
    if (psi0.dimension() != schedule.dimension()) {
        throw std::invalid_argument(detail::concat("propagate: state dimension ", psi0.dimension(),
                                                   " does not match schedule dimension ",
                                                   schedule.dimension()));
    }
    if (samplesPerSegment == 0) {
        throw std::invalid_argument("propagate: samplesPerSegment must be >= 1");
    }
    const Eigen::Index n = schedule.dimension();
    Propagation out{ComplexMatrix::Identity(n, n), {}};
    Trajectory &traj = out.trajectory;
    traj.times.push_back(0.0);
    traj.states.push_back(psi0);

    double t0 = 0.0;
    const auto &segments = schedule.segments();
    for (std::size_t si = 0; si < segments.size(); ++si) {
        traj.segmentStarts.push_back(traj.times.size() - 1);
        const double duration = segment_duration(segments[si]);
        const bool last_segment = si + 1 == segments.size();
        const double t_end = last_segment ? schedule.total_duration() : t0 + duration;
        const ComplexVector start = traj.states.back().amplitudes();

        if (const auto *c = std::get_if<ConstantSegment>(&segments[si])) {
            const auto eig = hermitian_eig(c->hamiltonian);
            const std::size_t steps = samplesPerSegment;
            const double dt = duration / static_cast<double>(steps);
            for (std::size_t j = 1; j <= steps; ++j) {
                const double local = j == steps ? duration : dt * static_cast<double>(j);
                traj.states.emplace_back(evolve_exp(eig, local) * start);
                traj.times.push_back(j == steps ? t_end : t0 + local);
            }
            if (storeStepPropagators) {
                const ComplexMatrix step = evolve_exp(eig, dt);
                for (std::size_t j = 0; j < steps; ++j) {
                    traj.stepPropagators.push_back(step);
                }
            }
            out.propagator = evolve_exp(eig, duration) * out.propagator;
        } else {
            const auto &s = std::get<SampledSegment>(segments[si]);
            const std::size_t steps = s.sampleCount;
            const double dt = duration / static_cast<double>(steps);
            ComplexVector state = start;
            for (std::size_t j = 0; j < steps; ++j) {
                const double mid = (static_cast<double>(j) + 0.5) * dt;
                const ComplexMatrix step = evolve_exp(schedule.hamiltonian_at(si, mid), dt);
                state = step * state;
                out.propagator = step * out.propagator;
                traj.states.emplace_back(state);
                traj.times.push_back(j + 1 == steps ? t_end : t0 + dt * static_cast<double>(j + 1));
                if (storeStepPropagators) {
                    traj.stepPropagators.push_back(step);
                }
            }
        }
        t0 = t_end;
    }
    return out;
}

/// Time-ordered propagator U(tau) alone.
inline ComplexMatrix total_propagator(const HamiltonianSchedule &schedule, std::size_t samplesPerSegment = 1) {
    return propagate(schedule, StateVector::basis(schedule.dimension(), 0), samplesPerSegment).propagator;
}

} // namespace dressed
