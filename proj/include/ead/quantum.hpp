// Copyright 2026 The eadsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <numbers>

#include "ead/common.hpp"
#include "ead/density.hpp"
#include "ead/matrix.hpp"

namespace ead {

struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // J*s; set to 1 for natural units
};

/// Dimensionless Hamiltonian phase, t >= 0.
struct EvolutionTime {
    double t = 0.0;

    explicit EvolutionTime(double value) : t(value) {
        if (!(std::isfinite(value) && value >= 0.0))
            throw invalid_parameter("evolution time must be finite and non-negative");
    }
};

inline ComplexMatrix pauli_x() {
    return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
}

/// (|01> + |10>)/sqrt(2)
inline PureState bell_psi_plus() {
    return PureState({0.0, kInvSqrt2, kInvSqrt2, 0.0});
}

/// (|00> + |11>)/sqrt(2)
inline PureState bell_phi_plus() {
    return PureState({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

inline PureState plus_state() { return PureState({kInvSqrt2, kInvSqrt2}); }
inline PureState minus_state() { return PureState({kInvSqrt2, -kInvSqrt2}); }

/// Even Bell mixture (1/2)|psi+><psi+| + (1/2)|phi+><phi+|: unentangled
/// but classically correlated starting point of every session.
inline DensityMatrix initial_rho_ab() {
    ComplexMatrix m = cplx{0.5, 0.0} * bell_psi_plus().projector() +
                      cplx{0.5, 0.0} * bell_phi_plus().projector();
    return DensityMatrix(std::move(m), {{"A", 1}, {"B", 1}});
}

/// (1/2)(I + s sigma_x); requires |s| <= 1 for positivity.
inline DensityMatrix rho_c(double s) {
    if (std::abs(s) > 1.0)
        throw invalid_parameter("rho_c: |s| > 1 yields a non-positive state");
    ComplexMatrix m{{0.5, 0.5 * s}, {0.5 * s, 0.5}};
    return DensityMatrix(std::move(m), {{"C", 1}});
}

/// Initial three-qubit register
/// (1/2)|psi+><psi+| (x) |+><+|  +  (1/2)|phi+><phi+| (x) |-><-|,
/// prepared directly in the (A, B, C) ordering.
inline DensityMatrix prepare_abc() {
    ComplexMatrix m =
        cplx{0.5, 0.0} * kron(bell_psi_plus().projector(), plus_state().projector()) +
        cplx{0.5, 0.0} * kron(bell_phi_plus().projector(), minus_state().projector());
    return DensityMatrix(std::move(m), {{"A", 1}, {"B", 1}, {"C", 1}});
}

/// Interaction Hamiltonian sigma_x (x) sigma_x on the (A, C) pair.
inline ComplexMatrix hamiltonian_ac() {
    return kron(pauli_x(), pauli_x());
}

/// exp(-i H t) = cos(t) I - i sin(t) sigma_x (x) sigma_x, as a 4x4 matrix
/// on the (A, C) pair.
inline ComplexMatrix u_ac(EvolutionTime t) {
    const cplx c{std::cos(t.t), 0.0};
    const cplx ms{0.0, -std::sin(t.t)};
    return c * ComplexMatrix::identity(4) + ms * hamiltonian_ac();
}

/// Interaction energy needed to reach maximal entanglement in time t:
/// E = hbar * pi / (4 t).
inline double energy_for_time(EvolutionTime t, const PhysicalConstants& constants = {}) {
    if (t.t <= 0.0)
        throw invalid_parameter("energy_for_time: t must be positive");
    return constants.hbar * std::numbers::pi / (4.0 * t.t);
}

namespace detail {

// Embed a two-qubit operator acting on qubits (A, C) of the three-qubit
// (A, B, C) register, identity on B. Index arithmetic: A is bit 2 (MSB),
// B bit 1, C bit 0.
inline ComplexMatrix embed_ac(const ComplexMatrix& u) {
    ComplexMatrix out(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t ia = (i >> 2) & 1, ib = (i >> 1) & 1, ic = i & 1;
        for (std::size_t j = 0; j < 8; ++j) {
            const std::size_t ja = (j >> 2) & 1, jb = (j >> 1) & 1, jc = j & 1;
            if (ib != jb) continue;
            out(i, j) = u(ia * 2 + ic, ja * 2 + jc);
        }
    }
    return out;
}

}  // namespace detail

/// Conjugate the (A, B, C) state by U_AC (x) I_B for phase t.
inline DensityMatrix evolve_abc(const DensityMatrix& rho, EvolutionTime t) {
    if (rho.subsystems().size() != 3 || rho.dim() != 8)
        throw contract_violation("evolve_abc expects a three-qubit (A,B,C) state");
    const ComplexMatrix u = detail::embed_ac(u_ac(t));
    ComplexMatrix m = u * rho.matrix() * dagger(u);
    return DensityMatrix(std::move(m), rho.subsystems());
}

}  // namespace ead
