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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "ead/measures.hpp"
#include "ead/quantum.hpp"
#include "helpers.hpp"

using namespace ead;
using Catch::Approx;

namespace {

const double pi = std::numbers::pi;

DensityMatrix evolved_ab(double t) {
    return partial_trace(evolve_abc(prepare_abc(), EvolutionTime(t)), {"A", "B"});
}

}  // namespace

TEST_CASE("negativity") {
    CHECK(negativity(initial_rho_ab(), "B") == Approx(0.0).margin(1e-12));

    const DensityMatrix sab(testing::final_ab_matrix(), {{"A", 1}, {"B", 1}});
    CHECK(negativity(sab, "B") == Approx(0.5).margin(1e-12));

    // Spectral law on the evolved family: N(t) = sin(2t)/2 on [0, pi/4]
    for (int k = 0; k <= 16; ++k) {
        const double t = (pi / 4) * k / 16.0;
        CHECK(negativity(evolved_ab(t), "B") == Approx(std::sin(2 * t) / 2).margin(1e-9));
    }
}

TEST_CASE("quantum relative entropy") {
    std::mt19937_64 rng(51);
    const auto rho = testing::random_density({{"A", 1}, {"B", 1}}, rng);
    CHECK(quantum_relative_entropy(rho, rho) == Approx(0.0).margin(1e-9));

    const DensityMatrix zero(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, {{"A", 1}});
    const DensityMatrix one(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}, {{"A", 1}});
    CHECK(std::isinf(quantum_relative_entropy(zero, one)));

    const DensityMatrix plus(plus_state().projector(), {{"A", 1}});
    const DensityMatrix mixed(cplx{0.5, 0.0} * ComplexMatrix::identity(2), {{"A", 1}});
    CHECK(quantum_relative_entropy(plus, mixed) == Approx(1.0).margin(1e-10));

    CHECK_THROWS_AS(quantum_relative_entropy(rho, mixed), contract_violation);

    // D(rho||sigma) = 0 iff rho = sigma; > 0 for distinct random pairs
    for (int rep = 0; rep < 10; ++rep) {
        const auto a = testing::random_density({{"A", 1}, {"B", 1}}, rng);
        const auto b = testing::random_density({{"A", 1}, {"B", 1}}, rng);
        CHECK(quantum_relative_entropy(a, b) > 1e-6);
        CHECK(quantum_relative_entropy(a, a) == Approx(0.0).margin(1e-9));
    }
}

TEST_CASE("Bell-diagonal decomposition") {
    const auto spec = bell_diagonal_decomposition(initial_rho_ab());
    CHECK(spec.c[0] == Approx(1.0).margin(1e-10));
    CHECK(spec.c[1] == Approx(0.0).margin(1e-10));
    CHECK(spec.c[2] == Approx(0.0).margin(1e-10));
    std::array<double, 4> sorted = spec.lambdas;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted[0] == Approx(0.0).margin(1e-10));
    CHECK(sorted[1] == Approx(0.0).margin(1e-10));
    CHECK(sorted[2] == Approx(0.5).margin(1e-10));
    CHECK(sorted[3] == Approx(0.5).margin(1e-10));

    const DensityMatrix phi(bell_phi_plus().projector(), {{"A", 1}, {"B", 1}});
    const auto sphi = bell_diagonal_decomposition(phi);
    CHECK(sphi.c[0] == Approx(1.0).margin(1e-10));
    CHECK(sphi.c[1] == Approx(-1.0).margin(1e-10));
    CHECK(sphi.c[2] == Approx(1.0).margin(1e-10));

    const DensityMatrix max_mixed(cplx{0.25, 0.0} * ComplexMatrix::identity(4),
                                  {{"A", 1}, {"B", 1}});
    const auto smm = bell_diagonal_decomposition(max_mixed);
    for (double c : smm.c) CHECK(c == Approx(0.0).margin(1e-10));
    for (double l : smm.lambdas) CHECK(l == Approx(0.25).margin(1e-10));

    // Non-maximally-mixed reduction is rejected with the offending label
    std::mt19937_64 rng(57);
    const auto prod = testing::random_separable(1, rng);
    CHECK_THROWS_AS(bell_diagonal_decomposition(prod), config_error);

    // Eigenvalue reconstruction on random Bell-diagonal states
    for (int rep = 0; rep < 20; ++rep) {
        const auto rho = testing::random_bell_diagonal(rng);
        const auto s = bell_diagonal_decomposition(rho);
        auto eig = hermitian_eigen(rho.matrix()).eigenvalues;
        std::array<double, 4> lam = s.lambdas;
        std::sort(lam.begin(), lam.end());
        for (int i = 0; i < 4; ++i) CHECK(lam[i] == Approx(eig[i]).margin(1e-10));
    }
}

TEST_CASE("closed-form relative entropy of entanglement") {
    CHECK(ree_closed_form(bell_diagonal_decomposition(initial_rho_ab())) == 0.0);

    const DensityMatrix phi(bell_phi_plus().projector(), {{"A", 1}, {"B", 1}});
    CHECK(ree_closed_form(bell_diagonal_decomposition(phi)) == Approx(1.0).margin(1e-12));

    BellSpectrum spec;
    spec.lambdas = {0.75, 0.25, 0.0, 0.0};
    CHECK(ree_closed_form(spec) == Approx(1.0 - binary_entropy(0.75)).margin(1e-12));
    CHECK(ree_closed_form(spec) == Approx(0.18872187554).margin(1e-9));
}

TEST_CASE("numerical relative entropy of entanglement") {
    SECTION("separable start can be reached exactly") {
        const auto r = ree_numeric(initial_rho_ab(), 16, 2, 5);
        CHECK(r.value == Approx(0.0).margin(1e-3));
    }

    SECTION("Bell projector") {
        const DensityMatrix phi(bell_phi_plus().projector(), {{"A", 1}, {"B", 1}});
        const auto r = ree_numeric(phi, 8, 3, 7);
        CHECK(r.value == Approx(1.0).margin(1e-3));
        REQUIRE(r.closest_separable.has_value());
        // self-consistency: reported value is D(rho || sigma*)
        CHECK(quantum_relative_entropy(phi, *r.closest_separable) ==
              Approx(r.value).margin(1e-9));
    }

    SECTION("matches the closed form on random Bell-diagonal states") {
        std::mt19937_64 rng(61);
        for (int rep = 0; rep < 5; ++rep) {
            const auto rho = testing::random_bell_diagonal(rng);
            const double oracle = ree_closed_form(bell_diagonal_decomposition(rho));
            const auto r = ree_numeric(rho, 8, 3, 100 + rep);
            CHECK(r.value == Approx(oracle).margin(1e-3));
        }
    }

    SECTION("k below the minimum is rejected") {
        CHECK_THROWS_AS(ree_numeric(initial_rho_ab(), 3, 1, 1), invalid_parameter);
    }
}

TEST_CASE("tangle") {
    const DensityMatrix phi(bell_phi_plus().projector(), {{"A", 1}, {"B", 1}});
    CHECK(tangle(phi) == Approx(1.0).margin(1e-10));
    CHECK(tangle(initial_rho_ab()) == Approx(0.0).margin(1e-10));

    // Exact simulation matches sin^2(2(pi/4 + x)) across the offset range
    for (int k = 0; k <= 16; ++k) {
        const double x = -pi / 4 + (pi / 2) * k / 16.0;
        const double expected = std::pow(std::sin(2 * (pi / 4 + x)), 2);
        CHECK(tangle(evolved_ab(pi / 4 + x)) == Approx(expected).margin(1e-9));
    }
}

TEST_CASE("schedule metric") {
    CHECK(schedule_metric(0.0) == Approx(1.0).margin(1e-12));
    CHECK(schedule_metric(-pi / 4) == Approx(0.0).margin(1e-12));
    CHECK(schedule_metric(-pi / 8) == Approx(0.5).margin(1e-12));
    CHECK_THROWS_AS(schedule_metric(1.0), invalid_parameter);
    CHECK_THROWS_AS(schedule_metric(-1.0), invalid_parameter);
}

TEST_CASE("quantum mutual information") {
    CHECK(quantum_mutual_information(initial_rho_ab()) == Approx(1.0).margin(1e-10));

    std::mt19937_64 rng(67);
    const auto a = testing::random_density({{"A", 1}}, rng);
    const auto b = testing::random_density({{"B", 1}}, rng);
    const DensityMatrix prod(kron(a.matrix(), b.matrix()), {{"A", 1}, {"B", 1}});
    CHECK(quantum_mutual_information(prod) == Approx(0.0).margin(1e-10));

    const DensityMatrix phi(bell_phi_plus().projector(), {{"A", 1}, {"B", 1}});
    CHECK(quantum_mutual_information(phi) == Approx(2.0).margin(1e-10));

    // Bell-diagonal identity: QMI = sum lambda log2(4 lambda)
    for (int rep = 0; rep < 10; ++rep) {
        const auto rho = testing::random_bell_diagonal(rng);
        const auto spec = bell_diagonal_decomposition(rho);
        double expected = 0.0;
        for (double lam : spec.lambdas)
            if (lam > 1e-15) expected += lam * std::log2(4.0 * lam);
        CHECK(quantum_mutual_information(rho) == Approx(expected).margin(1e-10));
    }
}

TEST_CASE("classical correlation") {
    CHECK(classical_correlation(bell_diagonal_decomposition(initial_rho_ab())) ==
          Approx(1.0).margin(1e-10));

    BellSpectrum none;
    none.c = {0.0, 0.0, 0.0};
    CHECK(classical_correlation(none) == Approx(0.0).margin(1e-12));

    BellSpectrum half;
    half.c = {0.5, 0.0, 0.0};
    CHECK(classical_correlation(half) == Approx(1.0 - binary_entropy(0.75)).margin(1e-12));

    // 0 <= C <= QMI on Bell-diagonal states
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        const auto rho = testing::random_bell_diagonal(rng);
        const auto spec = bell_diagonal_decomposition(rho);
        const double c = classical_correlation(spec);
        CHECK(c >= -1e-10);
        CHECK(c <= quantum_mutual_information(rho) + 1e-9);
    }
}

TEST_CASE("measures agree on the evolved family") {
    // All three quantifiers vanish at t=0, peak at t=pi/4, and increase
    // strictly in between.
    double prev_neg = -1.0, prev_tan = -1.0, prev_ree = -1.0;
    const int grid = 65;
    for (int k = 0; k < grid; ++k) {
        const double t = (pi / 4) * k / (grid - 1);
        const auto ab = evolved_ab(t);
        const double n = negativity(ab, "B");
        const double tg = tangle(ab);
        const double re = ree_of_bell_mixture(ab);
        if (k == 0) {
            CHECK(n == Approx(0.0).margin(1e-10));
            CHECK(tg == Approx(0.0).margin(1e-10));
            CHECK(re == Approx(0.0).margin(1e-10));
        } else if (k == grid - 1) {
            CHECK(n == Approx(0.5).margin(1e-10));
            CHECK(tg == Approx(1.0).margin(1e-10));
            CHECK(re == Approx(1.0).margin(1e-10));
        } else {
            CHECK(n > prev_neg);
            CHECK(tg > prev_tan);
            CHECK(re > prev_ree);
        }
        prev_neg = n;
        prev_tan = tg;
        prev_ree = re;

        // Spectral oracle: eigenvalues (1 +- sin 2t)/2 and two zeros
        auto eig = hermitian_eigen(ab.matrix()).eigenvalues;
        CHECK(eig[0] == Approx(0.0).margin(1e-10));
        CHECK(eig[1] == Approx(0.0).margin(1e-10));
        CHECK(eig[2] == Approx((1.0 - std::sin(2 * t)) / 2).margin(1e-10));
        CHECK(eig[3] == Approx((1.0 + std::sin(2 * t)) / 2).margin(1e-10));
    }
}
