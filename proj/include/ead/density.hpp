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
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ead/common.hpp"
#include "ead/matrix.hpp"

namespace ead {

/// One labeled subsystem of a composite register.
struct Subsystem {
    std::string label;
    std::size_t qubits = 1;

    std::size_t dim() const { return std::size_t{1} << qubits; }
};

/// Normalized state vector.
class PureState {
public:
    explicit PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
        double n2 = 0.0;
        for (const cplx& a : amps_) n2 += std::norm(a);
        if (std::abs(n2 - 1.0) > kStructTol)
            throw invalid_parameter("pure state is not normalized");
    }

    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }

    ComplexMatrix projector() const {
        ComplexMatrix p(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) p(i, j) = amps_[i] * std::conj(amps_[j]);
        return p;
    }

private:
    std::vector<cplx> amps_;
};

/// Density matrix over an ordered list of labeled subsystems. The first
/// subsystem owns the most significant basis bits, so with subsystems
/// (A, B, C) the basis label |abc> reads left to right.
///
/// Construction validates Hermiticity and unit trace to 1e-12 and
/// positivity to -1e-10 on the spectrum.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix matrix, std::vector<Subsystem> subsystems)
        : matrix_(std::move(matrix)), subsystems_(std::move(subsystems)) {
        std::size_t dim = 1;
        for (const auto& s : subsystems_) dim *= s.dim();
        if (matrix_.rows() != dim || matrix_.cols() != dim)
            throw contract_violation("density matrix dimension does not match subsystems");
        if (!matrix_.is_hermitian(kStructTol))
            throw contract_violation("density matrix is not Hermitian");
        if (std::abs(matrix_.trace() - cplx{1.0, 0.0}) > 10 * kStructTol)
            throw contract_violation("density matrix trace is not 1");
        const auto es = hermitian_eigen(matrix_);
        if (es.eigenvalues.front() < -kSpectralTol)
            throw contract_violation("density matrix has a negative eigenvalue");
    }

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<Subsystem>& subsystems() const { return subsystems_; }

    std::size_t subsystem_index(const std::string& label) const {
        for (std::size_t k = 0; k < subsystems_.size(); ++k)
            if (subsystems_[k].label == label) return k;
        throw config_error("unknown subsystem label '" + label + "'");
    }

private:
    ComplexMatrix matrix_;
    std::vector<Subsystem> subsystems_;
};

namespace detail {

inline std::vector<std::size_t> subsystem_dims(const DensityMatrix& rho) {
    std::vector<std::size_t> d;
    d.reserve(rho.subsystems().size());
    for (const auto& s : rho.subsystems()) d.push_back(s.dim());
    return d;
}

// Row-major strides; subsystem 0 is most significant.
inline std::vector<std::size_t> strides(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> st(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) st[k - 1] = st[k] * dims[k];
    return st;
}

}  // namespace detail

/// Reduced density matrix over the subsystems named in `keep`, in their
/// original order.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<std::string>& keep) {
    const auto dims = detail::subsystem_dims(rho);
    const auto st = detail::strides(dims);
    std::vector<bool> kept(dims.size(), false);
    for (const auto& label : keep) kept[rho.subsystem_index(label)] = true;

    std::vector<std::size_t> keep_idx, trace_idx;
    for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? keep_idx : trace_idx).push_back(k);

    std::size_t kdim = 1, tdim = 1;
    for (std::size_t k : keep_idx) kdim *= dims[k];
    for (std::size_t k : trace_idx) tdim *= dims[k];

    // Map a flat index over a subsystem subset to its full-register offset.
    auto offset = [&](const std::vector<std::size_t>& subset, std::size_t flat) {
        std::size_t off = 0;
        for (std::size_t k = subset.size(); k-- > 0;) {
            const std::size_t d = dims[subset[k]];
            off += (flat % d) * st[subset[k]];
            flat /= d;
        }
        return off;
    };

    ComplexMatrix out(kdim, kdim);
    for (std::size_t i = 0; i < kdim; ++i)
        for (std::size_t j = 0; j < kdim; ++j) {
            cplx sum{};
            for (std::size_t t = 0; t < tdim; ++t) {
                const std::size_t toff = offset(trace_idx, t);
                sum += rho.matrix()(offset(keep_idx, i) + toff, offset(keep_idx, j) + toff);
            }
            out(i, j) = sum;
        }

    std::vector<Subsystem> subs;
    for (std::size_t k : keep_idx) subs.push_back(rho.subsystems()[k]);
    return DensityMatrix(std::move(out), std::move(subs));
}

/// Transpose the indices of one subsystem only. The result stays Hermitian
/// with trace 1 but may fail positivity, so it is returned as a plain matrix.
inline ComplexMatrix partial_transpose(const DensityMatrix& rho, const std::string& flip) {
    const auto dims = detail::subsystem_dims(rho);
    const auto st = detail::strides(dims);
    const std::size_t f = rho.subsystem_index(flip);
    const std::size_t n = rho.dim();

    auto digit = [&](std::size_t idx) { return (idx / st[f]) % dims[f]; };

    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t di = digit(i), dj = digit(j);
            const std::size_t ip = i + (dj - di) * st[f];
            const std::size_t jp = j + (di - dj) * st[f];
            out(ip, jp) = rho.matrix()(i, j);
        }
    return out;
}

/// S(rho) = -sum lambda log2 lambda, in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    const auto es = hermitian_eigen(rho.matrix());
    double s = 0.0;
    for (double lam : es.eigenvalues)
        if (lam > 1e-15) s -= lam * std::log2(lam);
    return s;
}

}  // namespace ead
