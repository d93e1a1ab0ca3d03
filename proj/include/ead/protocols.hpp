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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ead/common.hpp"
#include "ead/measures.hpp"
#include "ead/parity_code.hpp"
#include "ead/quantum.hpp"

namespace ead {

struct UserPair {
    std::string pair_id;
    std::string transmit_user;  // U_i
    std::string receive_user;   // B_i
    int priority = 1;           // 1 = highest
};

enum class DiffMode { amount, time_domain };

/// Per-pair classical message content: either the phase offset x (amount
/// mode) or the oscillation period T_pi (time-domain mode).
struct TimingDirective {
    std::string pair_id;
    DiffMode mode = DiffMode::amount;
    double x_offset = 0.0;            // radians, amount mode
    double oscillation_period = 0.0;  // seconds, time-domain mode
    double issued_at = 0.0;           // seconds
};

struct ClassicalMessage {
    std::string recipient;
    TimingDirective directive;
    double delivered_at = 0.0;
};

struct SessionResult {
    std::string pair_id;
    double applied_time = 0.0;  // interaction phase, radians
    double wall_clock_completion = 0.0;
    DensityMatrix final_ab_state;
    double schedule_metric = 0.0;
    double tangle = 0.0;
    double ree = 0.0;
    double negativity = 0.0;
};

/// A parity-code delivery failed; carries the hop log of the attempt.
class session_failure : public std::runtime_error {
public:
    session_failure(const std::string& what, std::vector<HopRecord> hops)
        : std::runtime_error(what), hop_log(std::move(hops)) {}

    std::vector<HopRecord> hop_log;
};

/// One full pass of the core protocol for a single pair: parity-coded
/// delivery of subsystem B, direct preparation of the ABC register, and
/// the AC interaction applied for phase t. The oscillation period maps the
/// phase onto wall-clock seconds.
inline SessionResult run_core_protocol(const UserPair& pair, EvolutionTime t,
                                       const CodeParams& code, const ChannelModel& channel,
                                       double oscillation_period = std::numbers::pi,
                                       double per_hop_delay = 0.0) {
    // Step 1: deliver subsystem B through the transfer nodes.
    const auto codeword = encode(kInvSqrt2, kInvSqrt2, code);
    const auto outcome = transfer(codeword, channel, code.n, code, per_hop_delay);
    const auto decoded = decode(outcome, code);
    if (!decoded)
        throw session_failure("pair " + pair.pair_id + ": parity-code delivery failed",
                              outcome.hop_log);

    // Steps 2-3: prepare ABC and evolve under the AC interaction.
    const DensityMatrix sigma_abc = evolve_abc(prepare_abc(), t);
    DensityMatrix ab = partial_trace(sigma_abc, {"A", "B"});

    SessionResult r{pair.pair_id,
                    t.t,
                    (t.t / std::numbers::pi) * oscillation_period,
                    std::move(ab),
                    0.0,
                    0.0,
                    0.0,
                    0.0};
    const double s = std::sin(2.0 * t.t);
    r.schedule_metric = s * s;
    r.tangle = tangle(r.final_ab_state);
    r.ree = ree_of_bell_mixture(r.final_ab_state);
    r.negativity = negativity(r.final_ab_state, "B");
    return r;
}

/// Which of the two phase offsets solving a target level to use.
enum class OffsetBranch { shorter, longer };

/// Invert the sin^2(2(pi/4 + x)) law: one offset per target, by default the
/// one in [-pi/4, 0] (shorter unitary application).
inline std::vector<TimingDirective> plan_amount_differentiation(
    const std::vector<UserPair>& pairs, const std::vector<double>& targets,
    OffsetBranch branch = OffsetBranch::shorter, double issued_at = 0.0) {
    if (pairs.size() != targets.size())
        throw invalid_parameter("one target per pair is required");
    std::vector<TimingDirective> out;
    out.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double target = targets[i];
        if (target < 0.0 || target > 1.0)
            throw invalid_parameter("entanglement target must lie in [0, 1]");
        const double half_angle = 0.5 * std::asin(std::min(1.0, std::sqrt(target)));
        const double x = branch == OffsetBranch::shorter
                             ? half_angle - std::numbers::pi / 4
                             : std::numbers::pi / 4 - half_angle;
        out.push_back({pairs[i].pair_id, DiffMode::amount, x, 0.0, issued_at});
    }
    return out;
}

/// Assign per-pair oscillation periods T_pi = base_period * priority rank,
/// so the highest-priority pair completes first (T_pi / 4 each).
inline std::vector<TimingDirective> plan_time_differentiation(
    const std::vector<UserPair>& pairs, double base_period, double issued_at = 0.0) {
    if (!(base_period > 0.0))
        throw invalid_parameter("base period must be positive");
    std::vector<TimingDirective> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) {
        if (p.priority < 1) throw invalid_parameter("priority rank must be >= 1");
        out.push_back({p.pair_id, DiffMode::time_domain, 0.0,
                       base_period * static_cast<double>(p.priority), issued_at});
    }
    return out;
}

/// Phase 1: both endpoints of each pair receive that pair's directive over
/// the (reliable, ordered) classical channel.
inline std::vector<ClassicalMessage> encoder_distribute(
    const std::vector<TimingDirective>& directives, const std::vector<UserPair>& pairs,
    double latency) {
    if (directives.size() != pairs.size())
        throw invalid_parameter("one directive per pair is required");
    std::vector<ClassicalMessage> out;
    out.reserve(2 * directives.size());
    for (std::size_t i = 0; i < directives.size(); ++i) {
        const double delivered = directives[i].issued_at + latency;
        out.push_back({pairs[i].transmit_user, directives[i], delivered});
        out.push_back({pairs[i].receive_user, directives[i], delivered});
    }
    return out;
}

/// When Protocol 1 sessions are considered complete: each at its own
/// unitary-end, or all at the latest one.
enum class ReadoutPolicy { per_pair, shared };

/// Protocol 1: one global oscillation period, per-pair phase pi/4 + x_i.
inline std::vector<SessionResult> run_protocol1(
    const std::vector<UserPair>& pairs, const std::vector<double>& targets,
    double global_period, const CodeParams& code = {}, const ChannelModel& channel = {},
    OffsetBranch branch = OffsetBranch::shorter,
    ReadoutPolicy readout = ReadoutPolicy::per_pair) {
    if (!(global_period > 0.0))
        throw invalid_parameter("global oscillation period must be positive");
    const auto directives = plan_amount_differentiation(pairs, targets, branch);
    std::vector<SessionResult> results;
    results.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const EvolutionTime phase(std::numbers::pi / 4 + directives[i].x_offset);
        results.push_back(run_core_protocol(pairs[i], phase, code, channel, global_period));
    }
    if (readout == ReadoutPolicy::shared) {
        double latest = 0.0;
        for (const auto& r : results) latest = std::max(latest, r.wall_clock_completion);
        for (auto& r : results) r.wall_clock_completion = latest;
    }
    return results;
}

/// Protocol 2: per-pair oscillation period, phase pi/4 for everyone; each
/// pair reaches maximal entanglement at T_pi / 4.
inline std::vector<SessionResult> run_protocol2(const std::vector<UserPair>& pairs,
                                                double base_period,
                                                const CodeParams& code = {},
                                                const ChannelModel& channel = {}) {
    const auto directives = plan_time_differentiation(pairs, base_period);
    std::vector<SessionResult> results;
    results.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        results.push_back(run_core_protocol(pairs[i], EvolutionTime(std::numbers::pi / 4),
                                            code, channel,
                                            directives[i].oscillation_period));
    }
    return results;
}

struct TraceSample {
    double wall_clock = 0.0;  // seconds
    double schedule_metric = 0.0;
    double tangle = 0.0;
    double negativity = 0.0;
    double ree = 0.0;
};

struct EntanglementTrace {
    std::string pair_id;
    std::vector<TraceSample> samples;
};

/// Sample the entanglement oscillation of one pair on a wall-clock grid,
/// with phase theta(t) = pi * t / T_pi.
inline EntanglementTrace entanglement_trace(const UserPair& pair, double oscillation_period,
                                            const std::vector<double>& t_grid) {
    if (!(oscillation_period > 0.0))
        throw invalid_parameter("oscillation period must be positive");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] < t_grid[i - 1])
            throw invalid_parameter("trace grid must be sorted ascending");

    const DensityMatrix rho0 = prepare_abc();
    EntanglementTrace trace{pair.pair_id, {}};
    trace.samples.reserve(t_grid.size());
    for (double t : t_grid) {
        const double theta = std::numbers::pi * t / oscillation_period;
        const DensityMatrix abc = evolve_abc(rho0, EvolutionTime(theta));
        const DensityMatrix ab = partial_trace(abc, {"A", "B"});
        TraceSample s;
        s.wall_clock = t;
        const double sm = std::sin(2.0 * theta);
        s.schedule_metric = sm * sm;
        s.tangle = tangle(ab);
        s.negativity = negativity(ab, "B");
        s.ree = ree_of_bell_mixture(ab);
        trace.samples.push_back(s);
    }
    return trace;
}

}  // namespace ead
