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

#include <complex>
#include <stdexcept>
#include <string>

namespace ead {

using cplx = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;  // 1/sqrt(2)

// Structural checks (Hermiticity, trace, normalization).
inline constexpr double kStructTol = 1e-12;
// Spectral checks (eigenvalue residuals, PSD slack).
inline constexpr double kSpectralTol = 1e-10;
// Outputs of the numerical REE minimizer.
inline constexpr double kOptimizerTol = 1e-6;

// A caller passed a value outside its documented domain.
class invalid_parameter : public std::invalid_argument {
public:
    explicit invalid_parameter(const std::string& what) : std::invalid_argument(what) {}
};

// An internal contract was violated (dimension mismatch, non-Hermitian input, ...).
class contract_violation : public std::logic_error {
public:
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

// A scenario/config document is malformed or inconsistent.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ead
