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
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ead/common.hpp"
#include "ead/density.hpp"

namespace ead {

/// (m, n) redundant quantum parity code: n blocks of m qubits each.
/// Desk scale only: m, n in {1, 2, 3}.
struct CodeParams {
    std::size_t m = 1;
    std::size_t n = 1;

    void validate() const {
        if (m < 1 || m > 3 || n < 1 || n > 3)
            throw invalid_parameter("code parameters must satisfy 1 <= m, n <= 3");
    }

    std::size_t qubits() const { return m * n; }
};

enum class ChannelMode { noiseless, block_erasure };

struct ChannelModel {
    ChannelMode mode = ChannelMode::noiseless;
    double erasure_probability = 0.0;
    std::uint64_t rng_seed = 0;

    void validate() const {
        if (erasure_probability < 0.0 || erasure_probability > 1.0)
            throw invalid_parameter("erasure probability must be in [0, 1]");
    }
};

struct HopRecord {
    std::size_t node_id = 0;
    double timestamp = 0.0;
};

struct TransferOutcome {
    PureState delivered_state;
    std::vector<bool> block_erased;  // one flag per code block
    std::vector<HopRecord> hop_log;  // one entry per transfer node

    bool fully_delivered() const {
        for (bool e : block_erased)
            if (e) return false;
        return true;
    }
};

namespace detail {

// |chi_+->^(m) = (|0...0> +- |1...1>)/sqrt(2), as an amplitude vector.
inline std::vector<cplx> chi_state(std::size_t m, int sign) {
    std::vector<cplx> v(std::size_t{1} << m, cplx{});
    v.front() = kInvSqrt2;
    v.back() = sign >= 0 ? cplx{kInvSqrt2, 0.0} : cplx{-kInvSqrt2, 0.0};
    return v;
}

inline std::vector<cplx> tensor_power(const std::vector<cplx>& v, std::size_t n) {
    std::vector<cplx> out{cplx{1.0, 0.0}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<cplx> next(out.size() * v.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) next[i * v.size() + j] = out[i] * v[j];
        out = std::move(next);
    }
    return out;
}

}  // namespace detail

/// Encode the logical amplitudes (alpha, beta) into the mn-qubit codeword
/// alpha |chi+>^(x)n + beta |chi->^(x)n (kets normalized).
inline PureState encode(cplx alpha, cplx beta, const CodeParams& params) {
    params.validate();
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kStructTol)
        throw invalid_parameter("encode: |alpha|^2 + |beta|^2 must equal 1");
    const auto plus = detail::tensor_power(detail::chi_state(params.m, +1), params.n);
    const auto minus = detail::tensor_power(detail::chi_state(params.m, -1), params.n);
    std::vector<cplx> amps(plus.size());
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = alpha * plus[i] + beta * minus[i];
    return PureState(std::move(amps));
}

/// Relay the codeword through n_nodes pass-through transfer nodes. The
/// block-erasure mode independently erases each code block with the
/// configured probability, driven by the channel seed.
inline TransferOutcome transfer(const PureState& state, const ChannelModel& channel,
                                std::size_t n_nodes, const CodeParams& params,
                                double per_hop_delay = 0.0) {
    channel.validate();
    std::vector<bool> erased(params.n, false);
    if (channel.mode == ChannelMode::block_erasure) {
        std::mt19937_64 rng(channel.rng_seed);
        std::bernoulli_distribution lose(channel.erasure_probability);
        for (std::size_t b = 0; b < params.n; ++b) erased[b] = lose(rng);
    }
    std::vector<HopRecord> hops;
    hops.reserve(n_nodes);
    for (std::size_t k = 0; k < n_nodes; ++k)
        hops.push_back({k + 1, static_cast<double>(k + 1) * per_hop_delay});
    return TransferOutcome{state, std::move(erased), std::move(hops)};
}

/// Recover (alpha, beta) from a fully delivered codeword; global phase
/// fixed so that alpha is real and non-negative (beta, if alpha vanishes).
/// Any erased block makes the delivery undecodable.
inline std::optional<std::pair<cplx, cplx>> decode(const TransferOutcome& outcome,
                                                   const CodeParams& params) {
    params.validate();
    if (!outcome.fully_delivered()) return std::nullopt;

    const auto plus = detail::tensor_power(detail::chi_state(params.m, +1), params.n);
    const auto minus = detail::tensor_power(detail::chi_state(params.m, -1), params.n);
    const auto& amps = outcome.delivered_state.amplitudes();
    if (amps.size() != plus.size())
        throw contract_violation("decode: state dimension does not match code parameters");

    cplx alpha{}, beta{};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        alpha += std::conj(plus[i]) * amps[i];
        beta += std::conj(minus[i]) * amps[i];
    }
    const cplx anchor = std::abs(alpha) > kStructTol ? alpha : beta;
    const cplx phase = std::abs(anchor) > 0.0 ? std::conj(anchor) / std::abs(anchor) : cplx{1.0};
    return std::make_pair(alpha * phase, beta * phase);
}

}  // namespace ead
