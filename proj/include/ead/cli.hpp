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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ead/measures.hpp"
#include "ead/scenario.hpp"

namespace ead {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

inline ScenarioConfig load_config(const std::string& path,
                                  std::optional<std::uint64_t> seed_override) {
    ScenarioConfig c = parse_scenario(read_file(path));
    if (seed_override) c.channel.rng_seed = *seed_override;
    return c;
}

}  // namespace detail

/// Entry point behind the eadsim binary. Returns the process exit status:
/// 0 success, 1 config/usage error, 2 runtime or session error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"Multiuser entanglement-availability differentiation simulator"};
    app.require_subcommand(1);

    std::string config_path, state_path, pair_id;
    std::string out_dir = ".";
    std::string format_name = "csv";
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Override the channel RNG seed");
        cmd->add_option("--out", out_dir, "Output directory");
        cmd->add_option("--format", format_name, "Export format")
            ->check(CLI::IsMember({"csv", "json-lines"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "Parse and validate a scenario config");
    validate->add_option("config", config_path, "Scenario config file")->required();

    CLI::App* plan = app.add_subcommand("plan", "Print the timing directives for a scenario");
    plan->add_option("config", config_path, "Scenario config file")->required();
    add_common(plan);

    CLI::App* run = app.add_subcommand("run", "Run a scenario and export results");
    run->add_option("config", config_path, "Scenario config file")->required();
    add_common(run);

    CLI::App* trace = app.add_subcommand("trace", "Emit the entanglement trace of one pair");
    trace->add_option("config", config_path, "Scenario config file")->required();
    trace->add_option("--pair", pair_id, "Pair id to trace")->required();
    add_common(trace);

    CLI::App* measures = app.add_subcommand("measures",
                                            "Entanglement measures of a stored state");
    measures->add_option("state", state_path, "Density-matrix state file")->required();
    add_common(measures);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 1;
    }

    const ExportFormat format =
        format_name == "csv" ? ExportFormat::csv : ExportFormat::json_lines;

    try {
        if (validate->parsed()) {
            detail::load_config(config_path, std::nullopt);
            out << "ok\n";
            return 0;
        }

        if (plan->parsed()) {
            const ScenarioConfig c = detail::load_config(config_path, seed);
            for (const auto& d : plan_scenario(c)) {
                if (d.mode == DiffMode::amount)
                    out << d.pair_id << " x_offset=" << detail::format_sig(d.x_offset)
                        << " phase=" << detail::format_sig(std::numbers::pi / 4 + d.x_offset)
                        << "\n";
                else
                    out << d.pair_id
                        << " oscillation_period_s=" << detail::format_sig(d.oscillation_period)
                        << " completion_s=" << detail::format_sig(d.oscillation_period / 4.0)
                        << "\n";
            }
            return 0;
        }

        if (run->parsed()) {
            const ScenarioConfig c = detail::load_config(config_path, seed);
            const ScenarioOutcome outcome = run_scenario(c);
            std::filesystem::create_directories(out_dir);
            const std::string ext = format == ExportFormat::csv ? "csv" : "jsonl";
            export_traces(outcome.traces, format, out_dir + "/traces." + ext);

            // Session summary, one row per completed pair.
            std::ostringstream sess;
            if (format == ExportFormat::csv) {
                sess << "pair_id,applied_phase_rad,wall_clock_completion_s,"
                        "schedule_metric,tangle,negativity,ree\n";
                for (const auto& r : outcome.results)
                    sess << r.pair_id << ',' << detail::format_sig(r.applied_time) << ','
                         << detail::format_sig(r.wall_clock_completion) << ','
                         << detail::format_sig(r.schedule_metric) << ','
                         << detail::format_sig(r.tangle) << ','
                         << detail::format_sig(r.negativity) << ','
                         << detail::format_sig(r.ree) << '\n';
            } else {
                for (const auto& r : outcome.results) {
                    nlohmann::json rec;
                    rec["pair_id"] = r.pair_id;
                    rec["applied_phase_rad"] = r.applied_time;
                    rec["wall_clock_completion_s"] = r.wall_clock_completion;
                    rec["schedule_metric"] = r.schedule_metric;
                    rec["tangle"] = r.tangle;
                    rec["negativity"] = r.negativity;
                    rec["ree"] = r.ree;
                    sess << rec.dump() << '\n';
                }
            }
            std::ofstream sf(out_dir + "/sessions." + ext, std::ios::binary);
            sf << sess.str();

            std::ostringstream tl;
            tl << "timestamp_s,pair_id,event,payload\n";
            for (const auto& e : outcome.timeline.events)
                tl << detail::format_sig(e.timestamp) << ',' << e.pair_id << ','
                   << event_kind_name(e.kind) << ',' << e.payload << '\n';
            std::ofstream tf(out_dir + "/timeline.csv", std::ios::binary);
            tf << tl.str();

            for (const auto& id : outcome.failed_pairs)
                err << "session failed for pair " << id << "\n";
            out << outcome.results.size() << " session(s) completed, "
                << outcome.failed_pairs.size() << " failed; outputs in " << out_dir << "\n";
            return outcome.failed_pairs.empty() ? 0 : 2;
        }

        if (trace->parsed()) {
            const ScenarioConfig c = detail::load_config(config_path, seed);
            const auto directives = plan_scenario(c);
            for (std::size_t i = 0; i < c.pairs.size(); ++i) {
                if (c.pairs[i].pair_id != pair_id) continue;
                const double period = c.mode == DiffMode::amount
                                          ? c.global_period_s
                                          : directives[i].oscillation_period;
                const auto tr = entanglement_trace(c.pairs[i], period, c.trace.points());
                out << render_traces({tr}, format);
                return 0;
            }
            err << "unknown pair id '" << pair_id << "'\n";
            return 1;
        }

        if (measures->parsed()) {
            std::ifstream f(state_path);
            if (!f) throw config_error("cannot open '" + state_path + "'");
            ComplexMatrix m = read_state_file(f);
            if (m.rows() != 4)
                throw config_error("measures expects a two-qubit (4x4) density matrix");
            const DensityMatrix rho(std::move(m), {{"A", 1}, {"B", 1}});
            out << "negativity=" << detail::format_sig(negativity(rho, "B")) << "\n";
            out << "tangle=" << detail::format_sig(tangle(rho)) << "\n";
            out << "quantum_mutual_information="
                << detail::format_sig(quantum_mutual_information(rho)) << "\n";
            out << "von_neumann_entropy=" << detail::format_sig(von_neumann_entropy(rho))
                << "\n";
            try {
                const BellSpectrum spec = bell_diagonal_decomposition(rho);
                out << "ree_closed_form=" << detail::format_sig(ree_closed_form(spec)) << "\n";
                out << "classical_correlation="
                    << detail::format_sig(classical_correlation(spec)) << "\n";
            } catch (const config_error&) {
                // Not Bell-diagonal; closed form does not apply.
            }
            const ReeResult ree = ree_numeric(rho, 16, 4, seed.value_or(1));
            out << "ree_numeric=" << detail::format_sig(ree.value) << "\n";
            return 0;
        }
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const invalid_parameter& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace ead
