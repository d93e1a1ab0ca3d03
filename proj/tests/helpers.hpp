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

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "ead/density.hpp"
#include "ead/matrix.hpp"

namespace ead::testing {

inline const cplx kI{0.0, 1.0};

// Final AB state after a quarter-period interaction: (1/4) of
// [[1,-i,-i,1],[i,1,1,i],[i,1,1,i],[1,-i,-i,1]].
inline ComplexMatrix final_ab_matrix() {
    const cplx q{0.25, 0.0};
    const cplx qi{0.0, 0.25};
    return ComplexMatrix{{q, -qi, -qi, q},
                         {qi, q, q, qi},
                         {qi, q, q, qi},
                         {q, -qi, -qi, q}};
}

// Final ABC state after a quarter-period interaction: entries +-1/8, +-i/8.
inline ComplexMatrix final_abc_matrix() {
    const cplx e{0.125, 0.0};
    const cplx ei{0.0, 0.125};
    const cplx z{};
    return ComplexMatrix{{e, z, -ei, z, -ei, z, e, z},
                         {z, e, z, -ei, z, -ei, z, e},
                         {ei, z, e, z, e, z, ei, z},
                         {z, ei, z, e, z, e, z, ei},
                         {ei, z, e, z, e, z, ei, z},
                         {z, ei, z, e, z, e, z, ei},
                         {e, z, -ei, z, -ei, z, e, z},
                         {z, e, z, -ei, z, -ei, z, e}};
}

// Unentangled Bell-diagonal starting state: (1/4)[[1,0,0,1],[0,1,1,0],...].
inline ComplexMatrix initial_ab_matrix() {
    const cplx q{0.25, 0.0};
    const cplx z{};
    return ComplexMatrix{{q, z, z, q}, {z, q, q, z}, {z, q, q, z}, {q, z, z, q}};
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = cplx{u(rng), u(rng)};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

inline DensityMatrix random_density(std::vector<Subsystem> subs, std::mt19937_64& rng) {
    std::size_t n = 1;
    for (const auto& s : subs) n *= s.dim();
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx{g(rng), g(rng)};
    ComplexMatrix rho = a * dagger(a);
    const double tr = rho.trace().real();
    rho = cplx{1.0 / tr, 0.0} * rho;
    for (std::size_t i = 0; i < n; ++i)  // symmetrize round-off
        for (std::size_t j = 0; j < n; ++j) {
            const cplx avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = avg;
        }
    return DensityMatrix(std::move(rho), std::move(subs));
}

// Bell basis vector |beta_ab> = (|0,b> + (-1)^a |1, 1 xor b>)/sqrt(2).
inline std::vector<cplx> bell_basis_vector(int a, int b) {
    std::vector<cplx> v(4, cplx{});
    const double s = 1.0 / std::sqrt(2.0);
    v[b] = s;
    v[2 + (1 - b)] = (a == 0) ? cplx{s, 0.0} : cplx{-s, 0.0};
    return v;
}

// Random Bell-diagonal two-qubit state with eigenvalues lambda.
inline DensityMatrix random_bell_diagonal(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<double, 4> lam{u(rng), u(rng), u(rng), u(rng)};
    double sum = lam[0] + lam[1] + lam[2] + lam[3];
    for (double& l : lam) l /= sum;
    ComplexMatrix rho(4, 4);
    int idx = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const auto v = bell_basis_vector(a, b);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    rho(i, j) += lam[idx] * v[i] * std::conj(v[j]);
            ++idx;
        }
    return DensityMatrix(std::move(rho), {{"A", 1}, {"B", 1}});
}

// Random mixture of `k` product states (separable by construction).
inline DensityMatrix random_separable(std::size_t k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> g(0.0, 1.0);
    auto random_qubit = [&]() {
        double x = g(rng), y = g(rng), z = g(rng);
        const double norm = std::sqrt(x * x + y * y + z * z);
        const double r = u(rng);  // interior of the Bloch ball
        x *= r / norm;
        y *= r / norm;
        z *= r / norm;
        return ComplexMatrix{{cplx{0.5 * (1 + z), 0.0}, cplx{0.5 * x, -0.5 * y}},
                             {cplx{0.5 * x, 0.5 * y}, cplx{0.5 * (1 - z), 0.0}}};
    };
    std::vector<double> w(k);
    double sum = 0.0;
    for (double& wi : w) {
        wi = u(rng) + 1e-3;
        sum += wi;
    }
    ComplexMatrix rho(4, 4);
    for (std::size_t i = 0; i < k; ++i)
        rho = rho + cplx{w[i] / sum, 0.0} * kron(random_qubit(), random_qubit());
    return DensityMatrix(std::move(rho), {{"A", 1}, {"B", 1}});
}

}  // namespace ead::testing
