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
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ead/common.hpp"
#include "ead/protocols.hpp"

namespace ead {

struct TraceGrid {
    double t_start = 0.0;
    double t_end = 1.0;
    std::size_t samples = 101;

    std::vector<double> points() const {
        std::vector<double> g(samples);
        for (std::size_t i = 0; i < samples; ++i)
            g[i] = t_start + (t_end - t_start) * static_cast<double>(i) /
                                 static_cast<double>(samples > 1 ? samples - 1 : 1);
        return g;
    }
};

/// Declarative description of one simulation run. Schema version 1.
struct ScenarioConfig {
    int schema = 1;
    DiffMode mode = DiffMode::amount;
    std::vector<UserPair> pairs;
    std::vector<double> targets;   // amount mode, one per pair
    double base_period_s = 1.0;    // time-domain mode
    double global_period_s = 1.0;  // amount mode
    std::size_t n_transfer_nodes = 1;
    double per_hop_delay_s = 0.0;
    double classical_latency_s = 0.0;
    CodeParams code;
    ChannelModel channel;
    TraceGrid trace;
};

enum class EventKind {
    directive_issued,
    directive_delivered,
    quantum_hop,
    unitary_start,
    unitary_end,
    session_complete
};

inline const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::directive_issued: return "directive-issued";
        case EventKind::directive_delivered: return "directive-delivered";
        case EventKind::quantum_hop: return "quantum-hop";
        case EventKind::unitary_start: return "unitary-start";
        case EventKind::unitary_end: return "unitary-end";
        default: return "session-complete";
    }
}

struct TimelineEvent {
    double timestamp = 0.0;
    std::string pair_id;
    EventKind kind = EventKind::directive_issued;
    std::string payload;
};

struct EventTimeline {
    std::vector<TimelineEvent> events;  // sorted by (timestamp, pair_id, kind)
};

struct ScenarioOutcome {
    EventTimeline timeline;
    std::vector<SessionResult> results;
    std::vector<EntanglementTrace> traces;
    std::vector<std::string> failed_pairs;
};

namespace detail {

[[noreturn]] inline void config_fail(const std::string& field, const std::string& why) {
    throw config_error("config field '" + field + "': " + why);
}

inline double require_number(const nlohmann::json& j, const std::string& field) {
    if (!j.contains(field)) config_fail(field, "missing");
    if (!j.at(field).is_number()) config_fail(field, "must be a number");
    return j.at(field).get<double>();
}

}  // namespace detail

/// Parse and validate a schema-1 scenario document. Errors name the first
/// offending field.
inline ScenarioConfig parse_scenario(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("config syntax error: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config root must be an object");

    static const std::set<std::string> known = {
        "schema", "mode",       "pairs",           "targets",        "base_period_s",
        "global_period_s",      "n_transfer_nodes", "per_hop_delay_s",
        "classical_latency_s",  "code",            "channel",        "trace"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) detail::config_fail(it.key(), "unknown field");

    ScenarioConfig c;
    if (!j.contains("schema") || !j["schema"].is_number_integer())
        detail::config_fail("schema", "missing or not an integer");
    c.schema = j["schema"].get<int>();
    if (c.schema != 1) detail::config_fail("schema", "unsupported version (expected 1)");

    if (!j.contains("mode") || !j["mode"].is_string())
        detail::config_fail("mode", "missing or not a string");
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "amount")
        c.mode = DiffMode::amount;
    else if (mode == "time-domain")
        c.mode = DiffMode::time_domain;
    else
        detail::config_fail("mode", "must be 'amount' or 'time-domain'");

    if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].empty())
        detail::config_fail("pairs", "must be a non-empty array");
    std::set<std::string> seen_ids;
    for (std::size_t i = 0; i < j["pairs"].size(); ++i) {
        const auto& p = j["pairs"][i];
        const std::string at = "pairs[" + std::to_string(i) + "]";
        if (!p.is_object()) detail::config_fail(at, "must be an object");
        for (const char* field : {"id", "transmit", "receive"})
            if (!p.contains(field) || !p[field].is_string())
                detail::config_fail(at + "." + field, "missing or not a string");
        if (!p.contains("priority") || !p["priority"].is_number_integer() ||
            p["priority"].get<int>() < 1)
            detail::config_fail(at + ".priority", "must be an integer >= 1");
        UserPair up{p["id"].get<std::string>(), p["transmit"].get<std::string>(),
                    p["receive"].get<std::string>(), p["priority"].get<int>()};
        if (!seen_ids.insert(up.pair_id).second)
            detail::config_fail(at + ".id", "duplicate pair id '" + up.pair_id + "'");
        c.pairs.push_back(std::move(up));
    }

    if (c.mode == DiffMode::amount) {
        if (j.contains("base_period_s"))
            detail::config_fail("base_period_s", "not allowed in amount mode");
        if (!j.contains("targets") || !j["targets"].is_array() ||
            j["targets"].size() != c.pairs.size())
            detail::config_fail("targets", "must be an array with one entry per pair");
        for (std::size_t i = 0; i < j["targets"].size(); ++i) {
            if (!j["targets"][i].is_number())
                detail::config_fail("targets[" + std::to_string(i) + "]", "must be a number");
            const double t = j["targets"][i].get<double>();
            if (t < 0.0 || t > 1.0)
                detail::config_fail("targets[" + std::to_string(i) + "]",
                                    "must lie in [0, 1]");
            c.targets.push_back(t);
        }
        c.global_period_s = j.contains("global_period_s")
                                ? detail::require_number(j, "global_period_s")
                                : 1.0;
        if (!(c.global_period_s > 0.0))
            detail::config_fail("global_period_s", "must be positive");
    } else {
        if (j.contains("targets")) detail::config_fail("targets", "not allowed in time-domain mode");
        if (j.contains("global_period_s"))
            detail::config_fail("global_period_s", "not allowed in time-domain mode");
        c.base_period_s = detail::require_number(j, "base_period_s");
        if (!(c.base_period_s > 0.0)) detail::config_fail("base_period_s", "must be positive");
    }

    if (j.contains("n_transfer_nodes")) {
        if (!j["n_transfer_nodes"].is_number_integer() || j["n_transfer_nodes"].get<int>() < 0)
            detail::config_fail("n_transfer_nodes", "must be a non-negative integer");
        c.n_transfer_nodes = j["n_transfer_nodes"].get<std::size_t>();
    }
    if (j.contains("per_hop_delay_s")) {
        c.per_hop_delay_s = detail::require_number(j, "per_hop_delay_s");
        if (c.per_hop_delay_s < 0.0) detail::config_fail("per_hop_delay_s", "must be >= 0");
    }
    if (j.contains("classical_latency_s")) {
        c.classical_latency_s = detail::require_number(j, "classical_latency_s");
        if (c.classical_latency_s < 0.0)
            detail::config_fail("classical_latency_s", "must be >= 0");
    }

    if (j.contains("code")) {
        const auto& code = j["code"];
        if (!code.is_object()) detail::config_fail("code", "must be an object");
        if (code.contains("m")) c.code.m = code["m"].get<std::size_t>();
        if (code.contains("n")) c.code.n = code["n"].get<std::size_t>();
        try {
            c.code.validate();
        } catch (const invalid_parameter& e) {
            detail::config_fail("code", e.what());
        }
    }

    if (j.contains("channel")) {
        const auto& ch = j["channel"];
        if (!ch.is_object()) detail::config_fail("channel", "must be an object");
        if (ch.contains("mode")) {
            const std::string m = ch["mode"].get<std::string>();
            if (m == "noiseless")
                c.channel.mode = ChannelMode::noiseless;
            else if (m == "block-erasure")
                c.channel.mode = ChannelMode::block_erasure;
            else
                detail::config_fail("channel.mode", "must be 'noiseless' or 'block-erasure'");
        }
        if (ch.contains("erasure_probability"))
            c.channel.erasure_probability = ch["erasure_probability"].get<double>();
        if (ch.contains("seed")) c.channel.rng_seed = ch["seed"].get<std::uint64_t>();
        try {
            c.channel.validate();
        } catch (const invalid_parameter& e) {
            detail::config_fail("channel.erasure_probability", e.what());
        }
    }

    if (j.contains("trace")) {
        const auto& tr = j["trace"];
        if (!tr.is_object()) detail::config_fail("trace", "must be an object");
        if (tr.contains("t_start")) c.trace.t_start = tr["t_start"].get<double>();
        if (tr.contains("t_end")) c.trace.t_end = tr["t_end"].get<double>();
        if (tr.contains("samples")) {
            if (!tr["samples"].is_number_integer() || tr["samples"].get<int>() < 1)
                detail::config_fail("trace.samples", "must be a positive integer");
            c.trace.samples = tr["samples"].get<std::size_t>();
        }
        if (!(c.trace.t_end >= c.trace.t_start))
            detail::config_fail("trace.t_end", "must be >= trace.t_start");
    }

    return c;
}

/// Serialize a config back to its schema-1 document form.
inline std::string emit_scenario(const ScenarioConfig& c) {
    nlohmann::json j;
    j["schema"] = c.schema;
    j["mode"] = c.mode == DiffMode::amount ? "amount" : "time-domain";
    j["pairs"] = nlohmann::json::array();
    for (const auto& p : c.pairs)
        j["pairs"].push_back({{"id", p.pair_id},
                              {"transmit", p.transmit_user},
                              {"receive", p.receive_user},
                              {"priority", p.priority}});
    if (c.mode == DiffMode::amount) {
        j["targets"] = c.targets;
        j["global_period_s"] = c.global_period_s;
    } else {
        j["base_period_s"] = c.base_period_s;
    }
    j["n_transfer_nodes"] = c.n_transfer_nodes;
    j["per_hop_delay_s"] = c.per_hop_delay_s;
    j["classical_latency_s"] = c.classical_latency_s;
    j["code"] = {{"m", c.code.m}, {"n", c.code.n}};
    j["channel"] = {{"mode", c.channel.mode == ChannelMode::noiseless ? "noiseless"
                                                                      : "block-erasure"},
                    {"erasure_probability", c.channel.erasure_probability},
                    {"seed", c.channel.rng_seed}};
    j["trace"] = {{"t_start", c.trace.t_start},
                  {"t_end", c.trace.t_end},
                  {"samples", c.trace.samples}};
    return j.dump(2) + "\n";
}

/// Build the timing directives a config implies.
inline std::vector<TimingDirective> plan_scenario(const ScenarioConfig& c) {
    return c.mode == DiffMode::amount
               ? plan_amount_differentiation(c.pairs, c.targets)
               : plan_time_differentiation(c.pairs, c.base_period_s);
}

/// Execute a full scenario: Phase 1 directive distribution, Phase 2
/// parity-coded delivery and evolution per pair, event timeline, and one
/// entanglement trace per pair. Deterministic for a fixed config.
inline ScenarioOutcome run_scenario(const ScenarioConfig& c) {
    ScenarioOutcome out;
    const auto directives = plan_scenario(c);
    const auto messages = encoder_distribute(directives, c.pairs, c.classical_latency_s);

    auto add_event = [&](double t, const std::string& pair_id, EventKind kind,
                         std::string payload = "") {
        out.timeline.events.push_back({t, pair_id, kind, std::move(payload)});
    };

    for (std::size_t i = 0; i < c.pairs.size(); ++i) {
        const auto& pair = c.pairs[i];
        const auto& d = directives[i];
        const double delivered = d.issued_at + c.classical_latency_s;
        add_event(d.issued_at, pair.pair_id, EventKind::directive_issued);
        add_event(delivered, pair.pair_id, EventKind::directive_delivered);

        // Per-pair channel seed so sessions stay independent yet reproducible.
        ChannelModel channel = c.channel;
        channel.rng_seed = c.channel.rng_seed + i;

        const double period =
            c.mode == DiffMode::amount ? c.global_period_s : d.oscillation_period;
        const double phase = c.mode == DiffMode::amount
                                 ? std::numbers::pi / 4 + d.x_offset
                                 : std::numbers::pi / 4;

        for (std::size_t h = 1; h <= c.n_transfer_nodes; ++h)
            add_event(delivered + static_cast<double>(h) * c.per_hop_delay_s, pair.pair_id,
                      EventKind::quantum_hop, "node " + std::to_string(h));
        const double unitary_start =
            delivered + static_cast<double>(c.n_transfer_nodes) * c.per_hop_delay_s;

        try {
            SessionResult r =
                run_core_protocol(pair, EvolutionTime(phase), c.code, channel, period);
            const double duration = r.wall_clock_completion;
            r.wall_clock_completion = unitary_start + duration;
            add_event(unitary_start, pair.pair_id, EventKind::unitary_start);
            add_event(r.wall_clock_completion, pair.pair_id, EventKind::unitary_end);
            add_event(r.wall_clock_completion, pair.pair_id, EventKind::session_complete);
            out.results.push_back(std::move(r));
        } catch (const session_failure& e) {
            add_event(unitary_start, pair.pair_id, EventKind::session_complete,
                      std::string("failed: ") + e.what());
            out.failed_pairs.push_back(pair.pair_id);
            continue;
        }

        out.traces.push_back(entanglement_trace(pair, period, c.trace.points()));
    }

    std::stable_sort(out.timeline.events.begin(), out.timeline.events.end(),
                     [](const TimelineEvent& a, const TimelineEvent& b) {
                         if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                         return a.pair_id < b.pair_id;
                     });
    return out;
}

namespace detail {

inline std::string format_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace detail

enum class ExportFormat { csv, json_lines };

/// Render traces as CSV (12 significant digits, LF endings) or JSON lines
/// with the same field names.
inline std::string render_traces(const std::vector<EntanglementTrace>& traces,
                                 ExportFormat format) {
    std::ostringstream os;
    if (format == ExportFormat::csv) {
        os << "pair_id,wall_clock_s,schedule_metric,tangle,negativity,ree\n";
        for (const auto& tr : traces)
            for (const auto& s : tr.samples)
                os << tr.pair_id << ',' << detail::format_sig(s.wall_clock) << ','
                   << detail::format_sig(s.schedule_metric) << ','
                   << detail::format_sig(s.tangle) << ','
                   << detail::format_sig(s.negativity) << ','
                   << detail::format_sig(s.ree) << '\n';
    } else {
        for (const auto& tr : traces)
            for (const auto& s : tr.samples) {
                nlohmann::json rec;
                rec["pair_id"] = tr.pair_id;
                rec["wall_clock_s"] = s.wall_clock;
                rec["schedule_metric"] = s.schedule_metric;
                rec["tangle"] = s.tangle;
                rec["negativity"] = s.negativity;
                rec["ree"] = s.ree;
                os << rec.dump() << '\n';
            }
    }
    return os.str();
}

inline void export_traces(const std::vector<EntanglementTrace>& traces, ExportFormat format,
                          const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot open '" + path + "' for writing");
    f << render_traces(traces, format);
    if (!f) throw config_error("write to '" + path + "' failed");
}

/// Read a density matrix from the `measures` state-file format: a
/// dimension header line, then row-major entries as `re,im` pairs.
inline ComplexMatrix read_state_file(std::istream& in) {
    std::size_t dim = 0;
    if (!(in >> dim) || dim < 1) throw config_error("state file: bad dimension header");
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw config_error("state file: expected " + std::to_string(dim * dim) +
                                   " entries");
            const auto comma = tok.find(',');
            if (comma == std::string::npos)
                throw config_error("state file: entry '" + tok + "' is not 're,im'");
            try {
                m(i, j) = cplx{std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
            } catch (const std::exception&) {
                throw config_error("state file: entry '" + tok + "' is not numeric");
            }
        }
    return m;
}

}  // namespace ead
