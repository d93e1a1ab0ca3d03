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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ead/common.hpp"
#include "ead/density.hpp"
#include "ead/matrix.hpp"
#include "ead/quantum.hpp"

namespace ead {

inline double binary_entropy(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

/// N(rho) = (||rho^{T_cut}||_1 - 1)/2, clamped to >= 0.
inline double negativity(const DensityMatrix& rho, const std::string& cut) {
    const double tn = trace_norm(partial_transpose(rho, cut));
    return std::max(0.0, (tn - 1.0) / 2.0);
}

/// D(rho || sigma) in bits; infinity when rho's support leaks outside
/// sigma's support.
inline double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw contract_violation("relative entropy: dimension mismatch");
    const auto es = hermitian_eigen(sigma.matrix());
    const std::size_t n = sigma.dim();
    double cross = 0.0;  // Tr(rho log2 sigma)
    for (std::size_t k = 0; k < n; ++k) {
        // <v_k| rho |v_k>
        cplx rv{};
        for (std::size_t i = 0; i < n; ++i) {
            cplx row{};
            for (std::size_t j = 0; j < n; ++j)
                row += rho.matrix()(i, j) * es.eigenvectors[k][j];
            rv += std::conj(es.eigenvectors[k][i]) * row;
        }
        const double overlap = std::max(0.0, rv.real());
        const double lam = es.eigenvalues[k];
        if (lam < 1e-14) {
            if (overlap > 1e-10) return std::numeric_limits<double>::infinity();
            continue;
        }
        cross += overlap * std::log2(lam);
    }
    double self = 0.0;  // Tr(rho log2 rho)
    for (double lam : hermitian_eigen(rho.matrix()).eigenvalues)
        if (lam > 1e-15) self += lam * std::log2(lam);
    return std::max(self - cross, -1e-9);
}

/// Correlation coefficients c_j and Bell-basis eigenvalues lambda_ab of a
/// two-qubit state of the form (1/4)(I + sum_j c_j sigma_j (x) sigma_j).
struct BellSpectrum {
    std::array<double, 3> c{};
    std::array<double, 4> lambdas{};  // index a*2 + b

    double lambda_max() const { return *std::max_element(lambdas.begin(), lambdas.end()); }
    double c_max() const {
        return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
    }
};

namespace detail {

inline ComplexMatrix pauli(int j) {
    switch (j) {
        case 0: return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
        case 1: return ComplexMatrix{{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}};
        default: return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
    }
}

inline double pauli_correlation(const ComplexMatrix& rho, int i, int j) {
    return (rho * kron(pauli(i), pauli(j))).trace().real();
}

}  // namespace detail

/// Extract the Bell spectrum of a two-qubit state. Rejects states that are
/// not of the Bell-diagonal form: both local reductions must be maximally
/// mixed and all cross Pauli correlations must vanish.
inline BellSpectrum bell_diagonal_decomposition(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw contract_violation("bell_diagonal_decomposition expects a two-qubit state");
    const auto& labels = rho.subsystems();
    for (const auto& sub : labels) {
        const auto red = partial_trace(rho, {sub.label});
        if (!red.matrix().approx_equal(cplx{0.5, 0.0} * ComplexMatrix::identity(2), 1e-10))
            throw config_error("state is not Bell-diagonal: reduction on '" + sub.label +
                               "' is not maximally mixed");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            if (std::abs(detail::pauli_correlation(rho.matrix(), i, j)) > 1e-10)
                throw config_error("state is not Bell-diagonal: cross Pauli correlation " +
                                   std::to_string(i) + "," + std::to_string(j) +
                                   " is nonzero");
        }

    BellSpectrum spec;
    for (int j = 0; j < 3; ++j) spec.c[j] = detail::pauli_correlation(rho.matrix(), j, j);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const double sa = (a == 0) ? 1.0 : -1.0;
            const double sab = ((a + b) % 2 == 0) ? 1.0 : -1.0;
            const double sb = (b == 0) ? 1.0 : -1.0;
            spec.lambdas[a * 2 + b] =
                0.25 * (1.0 + sa * spec.c[0] - sab * spec.c[1] + sb * spec.c[2]);
        }
    return spec;
}

/// Relative entropy of entanglement of a Bell-diagonal state:
/// 0 when lambda_max <= 1/2, else 1 - H(lambda_max).
inline double ree_closed_form(const BellSpectrum& spec) {
    const double lmax = spec.lambda_max();
    if (lmax <= 0.5) return 0.0;
    return 1.0 - binary_entropy(lmax);
}

/// Same closed form evaluated on the spectrum of a mixture of orthogonal
/// maximally entangled states (the family produced by the core protocol,
/// which is Bell-diagonal only in a rotated Bell basis).
inline double ree_of_bell_mixture(const DensityMatrix& rho) {
    const auto es = hermitian_eigen(rho.matrix());
    const double lmax = es.eigenvalues.back();
    if (lmax <= 0.5) return 0.0;
    return 1.0 - binary_entropy(lmax);
}

/// Squared Wootters concurrence of a two-qubit state, in [0, 1].
inline double tangle(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw contract_violation("tangle expects a two-qubit state");
    const std::size_t n = 4;
    const ComplexMatrix yy = kron(detail::pauli(1), detail::pauli(1));
    ComplexMatrix conj_rho(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) conj_rho(i, j) = std::conj(rho.matrix()(i, j));
    const ComplexMatrix flipped = yy * conj_rho * yy;

    // sqrt(rho) through the eigensystem
    const auto es = hermitian_eigen(rho.matrix());
    ComplexMatrix sqrt_rho(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sqrt(std::max(0.0, es.eigenvalues[k]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sqrt_rho(i, j) += s * es.eigenvectors[k][i] * std::conj(es.eigenvectors[k][j]);
    }
    ComplexMatrix m = sqrt_rho * flipped * sqrt_rho;
    // Enforce exact Hermiticity before the spectral step.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
        }
    auto mu = hermitian_eigen(m).eigenvalues;  // ascending
    std::array<double, 4> lam{};
    // Eigenvalues at round-off scale are exact zeros of the underlying
    // problem; flushing them keeps the square root from amplifying noise.
    for (std::size_t k = 0; k < 4; ++k)
        lam[k] = mu[3 - k] < 1e-13 ? 0.0 : std::sqrt(mu[3 - k]);
    const double c = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
    return c * c;
}

/// sin^2(2(pi/4 + x)): the entanglement level reached when the interaction
/// phase is offset by x from the maximal-entanglement point.
inline double schedule_metric(double x) {
    if (x < -std::numbers::pi / 4 - 1e-12 || x > std::numbers::pi / 4 + 1e-12)
        throw invalid_parameter("schedule offset x must lie in [-pi/4, pi/4]");
    const double s = std::sin(2.0 * (std::numbers::pi / 4 + x));
    return s * s;
}

/// S(rho_A) + S(rho_B) - S(rho_AB), in bits.
inline double quantum_mutual_information(const DensityMatrix& rho) {
    if (rho.dim() != 4 || rho.subsystems().size() != 2)
        throw contract_violation("quantum_mutual_information expects a bipartite 2-qubit state");
    const auto& subs = rho.subsystems();
    return von_neumann_entropy(partial_trace(rho, {subs[0].label})) +
           von_neumann_entropy(partial_trace(rho, {subs[1].label})) - von_neumann_entropy(rho);
}

/// Purely classical correlation of a Bell-diagonal state:
/// 1 - H((1 + c)/2) with c = max_j |c_j|.
inline double classical_correlation(const BellSpectrum& spec) {
    return 1.0 - binary_entropy(0.5 * (1.0 + spec.c_max()));
}

struct ReeResult {
    double value = 0.0;  // bits
    std::optional<DensityMatrix> closest_separable;
    std::size_t iterations = 0;  // objective evaluations spent
    bool converged = false;
};

namespace detail {

// Mixture of k product states, parameterized by softmax logits and one
// Bloch vector per qubit per component. 7k real parameters total.
struct SeparableAnsatz {
    std::size_t k = 16;
    std::vector<double> params;  // [logit, ax, ay, az, bx, by, bz] per component

    static SeparableAnsatz random(std::size_t k, std::mt19937_64& rng) {
        SeparableAnsatz s;
        s.k = k;
        s.params.resize(7 * k);
        std::uniform_real_distribution<double> bloch(-1.0, 1.0);
        std::uniform_real_distribution<double> logit(-1.0, 1.0);
        for (std::size_t i = 0; i < k; ++i) {
            s.params[7 * i] = logit(rng);
            for (std::size_t d = 1; d < 7; ++d) s.params[7 * i + d] = bloch(rng);
        }
        return s;
    }

    // sigma = sum_i w_i rho(a_i) (x) rho(b_i), as a raw 4x4 matrix
    ComplexMatrix build() const {
        double wsum = 0.0;
        std::vector<double> w(k);
        const double lmax =
            *std::max_element(params.begin(), params.end());  // overflow guard for exp
        for (std::size_t i = 0; i < k; ++i) {
            w[i] = std::exp(params[7 * i] - lmax);
            wsum += w[i];
        }
        ComplexMatrix sigma(4, 4);
        for (std::size_t i = 0; i < k; ++i) {
            const double weight = w[i] / wsum;
            std::array<std::array<cplx, 4>, 2> q;  // two single-qubit states, row-major
            for (int side = 0; side < 2; ++side) {
                double x = params[7 * i + 1 + 3 * side];
                double y = params[7 * i + 2 + 3 * side];
                double z = params[7 * i + 3 + 3 * side];
                const double norm = std::sqrt(x * x + y * y + z * z);
                if (norm > 1.0) {
                    x /= norm;
                    y /= norm;
                    z /= norm;
                }
                q[side] = {cplx{0.5 * (1.0 + z), 0.0}, cplx{0.5 * x, -0.5 * y},
                           cplx{0.5 * x, 0.5 * y}, cplx{0.5 * (1.0 - z), 0.0}};
            }
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t cidx = 0; cidx < 4; ++cidx)
                    sigma(r, cidx) += weight * q[0][(r >> 1) * 2 + (cidx >> 1)] *
                                      q[1][(r & 1) * 2 + (cidx & 1)];
        }
        return sigma;
    }
};

// D(rho || sigma) for a fixed rho whose -Tr(rho log2 rho) part is
// precomputed; sigma given as a raw matrix.
inline double relative_entropy_objective(const ComplexMatrix& rho, double self_term,
                                         const ComplexMatrix& sigma) {
    const auto es = hermitian_eigen(sigma);
    double cross = 0.0;
    for (std::size_t kk = 0; kk < 4; ++kk) {
        cplx rv{};
        for (std::size_t i = 0; i < 4; ++i) {
            cplx row{};
            for (std::size_t j = 0; j < 4; ++j) row += rho(i, j) * es.eigenvectors[kk][j];
            rv += std::conj(es.eigenvectors[kk][i]) * row;
        }
        const double overlap = std::max(0.0, rv.real());
        const double lam = std::max(es.eigenvalues[kk], 1e-300);
        if (es.eigenvalues[kk] < 1e-14 && overlap > 1e-12) return 1e6 + overlap;
        cross += overlap * std::log2(lam);
    }
    return self_term - cross;
}

}  // namespace detail

/// Numerical relative entropy of entanglement for a two-qubit state:
/// minimize D(rho || sigma) over mixtures of k product states by
/// coordinate-wise golden-section search with multiple seeded restarts.
inline ReeResult ree_numeric(const DensityMatrix& rho, std::size_t k = 16,
                             std::size_t restarts = 8, std::uint64_t seed = 1,
                             std::size_t eval_cap = 10000) {
    if (rho.dim() != 4)
        throw contract_violation("ree_numeric expects a two-qubit state");
    if (k < 4) throw invalid_parameter("ree_numeric requires k >= 4 product components");

    double self_term = 0.0;
    for (double lam : hermitian_eigen(rho.matrix()).eigenvalues)
        if (lam > 1e-15) self_term += lam * std::log2(lam);

    std::mt19937_64 rng(seed);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;

    ReeResult best;
    best.value = std::numeric_limits<double>::infinity();
    detail::SeparableAnsatz best_ansatz;

    for (std::size_t restart = 0; restart < restarts; ++restart) {
        detail::SeparableAnsatz ansatz = detail::SeparableAnsatz::random(k, rng);
        std::size_t evals = 0;
        auto objective = [&](const detail::SeparableAnsatz& a) {
            ++evals;
            return detail::relative_entropy_objective(rho.matrix(), self_term, a.build());
        };
        double current = objective(ansatz);

        bool made_progress = true;
        while (made_progress && evals < eval_cap) {
            const double sweep_start = current;
            for (std::size_t p = 0; p < ansatz.params.size() && evals < eval_cap; ++p) {
                const bool is_logit = (p % 7 == 0);
                double lo = is_logit ? -6.0 : -1.0;
                double hi = is_logit ? 6.0 : 1.0;
                // Golden-section line search on coordinate p.
                double a = lo, b = hi;
                double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
                auto eval_at = [&](double val) {
                    const double saved = ansatz.params[p];
                    ansatz.params[p] = val;
                    const double f = objective(ansatz);
                    ansatz.params[p] = saved;
                    return f;
                };
                double f1 = eval_at(x1), f2 = eval_at(x2);
                while (b - a > 1e-4 && evals < eval_cap) {
                    if (f1 < f2) {
                        b = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = b - gr * (b - a);
                        f1 = eval_at(x1);
                    } else {
                        a = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = a + gr * (b - a);
                        f2 = eval_at(x2);
                    }
                }
                const double cand_x = f1 < f2 ? x1 : x2;
                const double cand_f = std::min(f1, f2);
                if (cand_f < current) {
                    ansatz.params[p] = cand_x;
                    current = cand_f;
                }
            }
            made_progress = (sweep_start - current) > 1e-10;
        }

        if (current < best.value) {
            best.value = current;
            best.converged = !made_progress;  // stopped on improvement, not on the cap
            best_ansatz = ansatz;
        }
        best.iterations += evals;
        if (best.value < 1e-9) break;  // objective is bounded below by zero
    }

    best.value = std::max(best.value, 0.0);
    ComplexMatrix sigma = best_ansatz.build();
    // Symmetrize away the last few ulps before validation.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const cplx avg = 0.5 * (sigma(i, j) + std::conj(sigma(j, i)));
            sigma(i, j) = avg;
        }
    best.closest_separable = DensityMatrix(std::move(sigma), rho.subsystems());
    return best;
}

}  // namespace ead
