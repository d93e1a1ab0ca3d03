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
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "ead/common.hpp"

namespace ead {

/// Dense complex matrix, row-major. The workhorse behind every state and
/// operator in the library; sized for few-qubit systems, not for scale.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
        if (rows == 0 || cols == 0) throw invalid_parameter("matrix dimensions must be >= 1");
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> init)
        : rows_(init.size()), cols_(init.begin()->size()) {
        if (rows_ == 0 || cols_ == 0) throw invalid_parameter("matrix dimensions must be >= 1");
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw invalid_parameter("ragged initializer for matrix");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& o) const {
        check_same_shape(o);
        ComplexMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    ComplexMatrix operator-(const ComplexMatrix& o) const {
        check_same_shape(o);
        ComplexMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    ComplexMatrix operator*(const ComplexMatrix& o) const {
        if (cols_ != o.rows_) throw contract_violation("matrix product dimension mismatch");
        ComplexMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx a = (*this)(i, k);
                if (a == cplx{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) {
        ComplexMatrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
        return r;
    }

    cplx trace() const {
        if (rows_ != cols_) throw contract_violation("trace of non-square matrix");
        cplx t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs_diff(const ComplexMatrix& o) const {
        check_same_shape(o);
        double d = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i)
            d = std::max(d, std::abs(data_[i] - o.data_[i]));
        return d;
    }

    bool approx_equal(const ComplexMatrix& o, double tol = kStructTol) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && max_abs_diff(o) <= tol;
    }

    bool is_hermitian(double tol = kStructTol) const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

private:
    void check_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw contract_violation("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

/// Tensor (Kronecker) product.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

/// Conjugate transpose.
inline ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

struct EigenSystem {
    std::vector<double> eigenvalues;      // ascending
    std::vector<std::vector<cplx>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
};

/// Full eigensystem of a Hermitian matrix via cyclic Jacobi rotations.
/// Intended for dimensions <= 64; convergence when the off-diagonal
/// Frobenius mass drops below 1e-14.
inline EigenSystem hermitian_eigen(const ComplexMatrix& a) {
    if (!a.is_hermitian())
        throw contract_violation("hermitian_eigen: input is not Hermitian within tolerance");
    const std::size_t n = a.rows();
    ComplexMatrix m = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_mass = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(m(i, j));
        return 2.0 * s;
    };

    double scale2 = 0.0;  // squared Frobenius norm, sets the convergence scale
    for (const cplx& e : m.data()) scale2 += std::norm(e);
    const double stop = std::max(1.0, scale2) * 1e-28;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_mass() > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = m(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                const double theta = std::arg(apq);
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                // Plane rotation J: J(p,p)=c, J(p,q)=-s e^{i theta},
                // J(q,p)=s e^{-i theta}, J(q,q)=c; zeroes m(p,q) in J^H m J.
                const double phi = 0.5 * std::atan2(2.0 * r, app - aqq);
                const double c = std::cos(phi);
                const double s = std::sin(phi);
                const cplx eip = std::polar(1.0, theta);
                for (std::size_t k = 0; k < n; ++k) {  // m <- m J
                    const cplx mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp + s * std::conj(eip) * mkq;
                    m(k, q) = -s * eip * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // m <- J^H m
                    const cplx mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk + s * eip * mqk;
                    m(q, k) = -s * std::conj(eip) * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {  // v <- v J
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(eip) * vkq;
                    v(k, q) = -s * eip * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });

    EigenSystem out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(m(k, k).real());
        std::vector<cplx> vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, k);
        out.eigenvectors.push_back(std::move(vec));
    }
    return out;
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
inline double trace_norm(const ComplexMatrix& a) {
    if (!a.is_hermitian())
        throw contract_violation("trace_norm: input is not Hermitian within tolerance");
    const auto es = hermitian_eigen(a);
    double s = 0.0;
    for (double lam : es.eigenvalues) s += std::abs(lam);
    return s;
}

}  // namespace ead
