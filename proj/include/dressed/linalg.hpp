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
 * @file linalg.hpp
 * Dense complex linear algebra for small quantum systems: Hermitian and
 * unitary eigendecompositions, matrix exponentials and phase helpers.
 *
 * Everything here works in units with hbar = 1, so energy * time is a
 * dimensionless phase.
 */
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dressed {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-9;
inline constexpr double kDegeneracyTolerance = 1e-8;

/// Raised when a numerical routine cannot meet its accuracy contract.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename... Args> std::string concat(const Args &...args) {
    std::ostringstream out;
    out.precision(17);
    (out << ... << args);
    return out.str();
}

inline void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw std::invalid_argument(concat(what, ": expected a non-empty square matrix, got ",
                                           m.rows(), "x", m.cols()));
    }
}

} // namespace detail

/// Largest entry modulus, ||A||_max.
inline double max_norm(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermitian_deviation(const ComplexMatrix &h) {
    return max_norm(h - h.adjoint());
}

inline double unitary_deviation(const ComplexMatrix &u) {
    const auto n = u.rows();
    return max_norm(u.adjoint() * u - ComplexMatrix::Identity(n, n));
}

inline void require_hermitian(const ComplexMatrix &h, const char *what,
                              double tolerance = kHermitianTolerance) {
    detail::require_square(h, what);
    const double dev = hermitian_deviation(h);
    if (!(dev <= tolerance)) {
        throw std::invalid_argument(detail::concat(what, ": matrix is not Hermitian, max |H - H^dagger| = ",
                                                   dev, " exceeds ", tolerance));
    }
}

inline void require_unitary(const ComplexMatrix &u, const char *what,
                            double tolerance = kUnitaryTolerance) {
    detail::require_square(u, what);
    const double dev = unitary_deviation(u);
    if (!(dev <= tolerance)) {
        throw std::invalid_argument(detail::concat(what, ": matrix is not unitary, max |U^dagger U - I| = ",
                                                   dev, " exceeds ", tolerance));
    }
}

/// Principal value of an angle, mapped into (-pi, pi].
inline double wrap_phase(double angle) {
    double r = std::remainder(angle, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

/// Distance between two angles on the circle, in [0, pi].
inline double phase_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

/// Principal argument with the -pi branch folded onto +pi.
inline double principal_arg(Complex z) {
    const double a = std::arg(z);
    return a <= -kPi + 1e-12 ? kPi : a;
}

struct HermitianEigensystem {
    RealVector values;     ///< ascending
    ComplexMatrix vectors; ///< orthonormal columns
};

/**
 * Eigendecomposition of a Hermitian matrix. The input must be Hermitian to
 * within 1e-12 in max-norm; it is symmetrized before the solve so the result
 * is exactly self-consistent.
 */
inline HermitianEigensystem hermitian_eig(const ComplexMatrix &h) {
    require_hermitian(h, "hermitian_eig");
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

/// exp(-i diag(values) t) conjugated back into the original basis.
inline ComplexMatrix evolve_exp(const HermitianEigensystem &eig, double t) {
    const auto n = eig.values.size();
    ComplexVector phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        phases[k] = std::polar(1.0, -eig.values[k] * t);
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

/// exp(-i H t) for Hermitian H.
inline ComplexMatrix evolve_exp(const ComplexMatrix &h, double t) {
    if (t == 0.0) {
        require_hermitian(h, "evolve_exp");
        return ComplexMatrix::Identity(h.rows(), h.cols());
    }
    return evolve_exp(hermitian_eig(h), t);
}

struct UnitaryEigensystem {
    std::vector<double> phases; ///< principal values in (-pi, pi], ascending
    ComplexMatrix vectors;      ///< orthonormal columns, column k pairs with phases[k]
};

namespace detail {

// Orthonormalizes columns [first, last) of m in place (modified Gram-Schmidt,
// two passes).
inline void orthonormalize_block(ComplexMatrix &m, Eigen::Index first, Eigen::Index last) {
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = first; j < last; ++j) {
            for (Eigen::Index i = first; i < j; ++i) {
                const Complex proj = m.col(i).dot(m.col(j));
                m.col(j) -= proj * m.col(i);
            }
            m.col(j).normalize();
        }
    }
}

inline bool lexicographic_real_less(const ComplexVector &a, const ComplexVector &b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) {
            return a[i].real() < b[i].real();
        }
    }
    return false;
}

} // namespace detail

/**
 * Eigendecomposition of a unitary matrix W = V diag(exp(i phi_k)) V^dagger.
 *
 * The spectrum is rotated away from -1 and mapped through the Cayley
 * transform K = i (I - W') (I + W')^-1, which is Hermitian with eigenvalues
 * tan(phi'_k / 2) and the same eigenvectors as W. A Hermitian solve then
 * yields orthonormal eigenvectors even inside degenerate eigenspaces. Phases
 * are read back as Rayleigh quotients arg(v^dagger W v). Eigenspaces whose
 * phases are within 1e-8 on the circle are re-orthonormalized as a block
 * and ordered by the real parts of their vectors.
 */
inline UnitaryEigensystem unitary_eig(const ComplexMatrix &w) {
    require_unitary(w, "unitary_eig");
    const Eigen::Index n = w.rows();
    const ComplexMatrix identity = ComplexMatrix::Identity(n, n);

    // The rotation keeping all eigenvalues farthest from -1 maximizes the
    // smallest singular value of I + W'. One of 4n equally spaced
    // rotations leaves a gap of at least pi/(4n).
    const Eigen::Index candidates = 4 * n;
    double best_sigma = -1.0;
    Complex best_rotation{1.0, 0.0};
    for (Eigen::Index c = 0; c < candidates; ++c) {
        const Complex rotation = std::polar(1.0, -kTwoPi * static_cast<double>(c) /
                                                     static_cast<double>(candidates));
        const ComplexMatrix shifted = identity + rotation * w;
        const double sigma =
            Eigen::JacobiSVD<ComplexMatrix>(shifted).singularValues().minCoeff();
        if (sigma > best_sigma) {
            best_sigma = sigma;
            best_rotation = rotation;
        }
    }

    const ComplexMatrix rotated = best_rotation * w;
    const ComplexMatrix cayley =
        Complex{0.0, 1.0} * (identity + rotated).partialPivLu().solve(identity - rotated);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (cayley + cayley.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw NumericalError("unitary_eig: eigensolver did not converge");
    }
    ComplexMatrix vectors = solver.eigenvectors();

    std::vector<double> phases(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        phases[static_cast<std::size_t>(k)] =
            principal_arg(vectors.col(k).dot(w * vectors.col(k)));
    }

    // Ascending order, then grouping into near-degenerate blocks.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        order[static_cast<std::size_t>(k)] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return phases[static_cast<std::size_t>(a)] < phases[static_cast<std::size_t>(b)];
    });

    UnitaryEigensystem out;
    out.phases.reserve(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto src = order[static_cast<std::size_t>(k)];
        out.phases.push_back(phases[static_cast<std::size_t>(src)]);
        out.vectors.col(k) = vectors.col(src);
    }

    std::vector<std::pair<Eigen::Index, Eigen::Index>> groups;
    Eigen::Index start = 0;
    for (Eigen::Index k = 1; k <= n; ++k) {
        if (k == n || phase_distance(out.phases[static_cast<std::size_t>(k)],
                                     out.phases[static_cast<std::size_t>(k - 1)]) >
                          kDegeneracyTolerance) {
            groups.emplace_back(start, k);
            start = k;
        }
    }
    for (const auto &[first, last] : groups) {
        if (last - first < 2) {
            continue;
        }
        detail::orthonormalize_block(out.vectors, first, last);
        std::vector<ComplexVector> cols;
        std::vector<double> ph;
        for (Eigen::Index k = first; k < last; ++k) {
            cols.emplace_back(out.vectors.col(k));
            ph.push_back(principal_arg(cols.back().dot(w * cols.back())));
        }
        std::vector<std::size_t> perm(cols.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            perm[i] = i;
        }
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return detail::lexicographic_real_less(cols[a], cols[b]);
        });
        for (std::size_t i = 0; i < perm.size(); ++i) {
            out.vectors.col(first + static_cast<Eigen::Index>(i)) = cols[perm[i]];
            out.phases[static_cast<std::size_t>(first) + i] = ph[perm[i]];
        }
    }

    for (Eigen::Index k = 0; k < n; ++k) {
        const ComplexVector v = out.vectors.col(k);
        const double residual =
            (w * v - std::polar(1.0, out.phases[static_cast<std::size_t>(k)]) * v).norm();
        if (!(residual <= kUnitaryTolerance)) {
            throw NumericalError(detail::concat("unitary_eig: eigen-residual ", residual,
                                                " exceeds ", kUnitaryTolerance));
        }
    }
    return out;
}

} // namespace dressed
