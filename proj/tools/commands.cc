// Copyright 2026 The qdep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdep/circuit.h"
#include "qdep/comparator.h"
#include "qdep/dependence.h"
#include "qdep/fixtures.h"
#include "qdep/probe.h"
#include "qdep/serialize.h"

namespace qdep::cli {

namespace {

constexpr const char *kFixturePrefix = "fixtures:";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedInput {
    Circuit circuit;
    std::string source;
};

Circuit load_circuit(const std::string &input, const std::string &input_format) {
    if (input.starts_with(kFixturePrefix)) {
        try {
            return build_fixture(input.substr(std::string_view(kFixturePrefix).size()));
        } catch (const std::invalid_argument &e) {
            throw InputError(e.what());
        }
    }
    std::ifstream file(input, std::ios::binary);
    if (!file) {
        throw InputError("no such file: " + input);
    }
    std::stringstream buf;
    buf << file.rdbuf();
    CircuitFormat format = CircuitFormat::Native;
    if (input_format == "qasm2" || (input_format == "auto" && std::filesystem::path(input).extension() == ".qasm")) {
        format = CircuitFormat::Qasm2;
    }
    try {
        return parse_circuit(buf.str(), format);
    } catch (const ParseError &e) {
        throw InputError(input + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

std::set<Qubit> parse_qubit_list(const std::string &text, size_t n) {
    std::set<Qubit> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty() && (item[0] == 'q' || item[0] == 'Q')) {
            item = item.substr(1);
        }
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw InputError("--restrict: bad qubit '" + item + "'");
        }
        if (v >= n) {
            throw InputError("--restrict: qubit " + std::to_string(v) + " out of range");
        }
        out.insert(static_cast<Qubit>(v));
    }
    if (out.empty()) {
        throw InputError("--restrict needs at least one qubit");
    }
    return out;
}

nlohmann::ordered_json manifest(const std::string &command, const std::string &input,
                                const std::optional<ProbeConfig> &cfg, const std::string &out_path,
                                const Circuit &c) {
    nlohmann::ordered_json m;
    m["command"] = command;
    m["input"] = input;
    if (cfg) {
        m["probe_config"] = probe_config_to_json(*cfg);
    }
    auto outputs = nlohmann::ordered_json::array();
    outputs.push_back(out_path.empty() ? "-" : out_path);
    m["outputs"] = std::move(outputs);
    m["tool_version"] = kToolVersion;
    m["circuit_hash"] = circuit_hash(c);
    return m;
}

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw InputError("cannot write " + out_path);
    }
    f << text;
}

struct ProbeFlags {
    ProbeConfig cfg;
    bool seed_given = false;
    size_t jobs = 1;
    size_t max_qubits = kDefaultMaxQubits;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--samples", cfg.samples, "random parameter draws")->check(CLI::PositiveNumber);
        cmd->add_option("--eps", cfg.eps, "central-difference step")->check(CLI::PositiveNumber);
        cmd->add_option("--tol", cfg.tol, "sensitivity threshold on |dp/dparam|")->check(CLI::PositiveNumber);
        cmd->add_option_function<uint64_t>(
            "--seed",
            [this](const uint64_t &s) {
                cfg.seed = s;
                seed_given = true;
            },
            "RNG seed (default 42, or $QDEP_SEED)");
        cmd->add_option("--jobs", jobs, "probe worker threads (0 = all cores)");
        cmd->add_option("--max-qubits", max_qubits, "dense simulation capacity guard");
    }

    void resolve_seed() {
        if (seed_given) {
            return;
        }
        if (const char *env = std::getenv("QDEP_SEED")) {
            std::string s(env);
            size_t used = 0;
            try {
                cfg.seed = std::stoull(s, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != s.size()) {
                throw InputError("QDEP_SEED is not an unsigned integer: '" + s + "'");
            }
        }
    }
};

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qdep: static unitary-dependence analysis of quantum circuits with a statevector cross-check"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string input;
    std::string input_format = "auto";
    std::string format;
    std::string out_path;
    std::string restrict_list;
    std::string params_path;
    ProbeFlags probe;
    size_t draw_sample = 0;

    auto add_input = [&](CLI::App *cmd) {
        cmd->add_option("input", input, "circuit file or fixtures:<name>")->required();
        cmd->add_option("--input-format", input_format, "auto | native | qasm2")
            ->check(CLI::IsMember({"auto", "native", "qasm2"}));
        cmd->add_option("--out", out_path, "write the artifact here instead of stdout");
    };

    auto *analyze_cmd = app.add_subcommand("analyze", "static dependence picture");
    add_input(analyze_cmd);
    format = "text";
    analyze_cmd->add_option("--format", format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
    analyze_cmd->add_option("--restrict", restrict_list, "comma-separated qubits to keep");

    auto *verify_cmd = app.add_subcommand("verify", "cross-check the static picture against the statevector oracle");
    add_input(verify_cmd);
    verify_cmd->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    probe.add_to(verify_cmd);

    auto *probe_cmd = app.add_subcommand("probe", "per (qubit, gate) finite-difference sensitivity report (JSON)");
    add_input(probe_cmd);
    probe.add_to(probe_cmd);
    probe_cmd->add_option("--params", params_path, "probe at this parameter assignment instead of random draws");

    auto *draw_cmd = app.add_subcommand("draw", "emit the seeded parameter assignment of one probe sample (JSON)");
    add_input(draw_cmd);
    probe.add_to(draw_cmd);
    draw_cmd->add_option("--sample", draw_sample, "sample index");

    auto *fixtures_cmd = app.add_subcommand("fixtures", "reference circuits");
    fixtures_cmd->require_subcommand(1);
    fixtures_cmd->add_subcommand("list", "list fixture names");
    auto *emit_cmd = fixtures_cmd->add_subcommand("emit", "write a fixture in native format");
    std::string emit_name, emit_path;
    emit_cmd->add_option("name", emit_name)->required();
    emit_cmd->add_option("path", emit_path, "output path, '-' for stdout")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << kToolVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*fixtures_cmd) {
            if (fixtures_cmd->got_subcommand("list")) {
                for (const auto &f : fixture_catalog()) {
                    out << f.name << std::string(12 - std::min<size_t>(f.name.size(), 11), ' ') << f.description
                        << "\n";
                }
                return kOk;
            }
            Circuit c = load_circuit(kFixturePrefix + emit_name, "auto");
            emit(serialize_circuit(c), emit_path, out);
            return kOk;
        }

        Circuit c = load_circuit(input, input_format);

        if (*analyze_cmd) {
            DependencePicture p = analyze(c);
            if (!restrict_list.empty()) {
                p = restrict_picture(p, parse_qubit_list(restrict_list, c.num_qubits()));
            }
            if (format == "json") {
                auto j = picture_to_json(p);
                j["manifest"] = manifest("analyze", input, std::nullopt, out_path, c);
                emit(j.dump(2) + "\n", out_path, out);
            } else {
                emit(export_picture(p, format == "dot" ? PictureFormat::Dot : PictureFormat::Text), out_path, out);
            }
            return kOk;
        }

        probe.resolve_seed();
        probe.cfg.validate();

        if (*draw_cmd) {
            if (draw_sample >= probe.cfg.samples) {
                err << "warning: sample " << draw_sample << " is beyond --samples " << probe.cfg.samples << "\n";
            }
            auto j = params_to_json(c, draw_params(c, probe.cfg, draw_sample));
            emit(j.dump(2) + "\n", out_path, out);
            return kOk;
        }

        if (*probe_cmd) {
            std::vector<ParamAssignment> points;
            if (!params_path.empty()) {
                std::ifstream f(params_path);
                if (!f) {
                    throw InputError("no such file: " + params_path);
                }
                nlohmann::json pj;
                try {
                    pj = nlohmann::json::parse(f);
                } catch (const nlohmann::json::exception &e) {
                    throw InputError(params_path + ": " + e.what());
                }
                points.push_back(params_from_json(c, pj));
            } else {
                points = probe_points(c, probe.cfg);
            }
            SensitivityTable table = sensitivity_table(c, points, probe.cfg.eps, probe.jobs, probe.max_qubits);
            auto j = probe_report_to_json(table, analyze(c), probe.cfg.tol);
            j["probe_config"] = probe_config_to_json(probe.cfg);
            if (!params_path.empty()) {
                j["params_file"] = params_path;
            }
            j["manifest"] = manifest("probe", input, probe.cfg, out_path, c);
            emit(j.dump(2) + "\n", out_path, out);
            return kOk;
        }

        // verify
        DependencePicture static_p = analyze(c);
        SensitivityTable table = sensitivity_table(c, probe.cfg, probe.jobs, probe.max_qubits);
        DependencePicture empirical_p = picture_from_table(c, table, probe.cfg.tol);
        DivergenceReport report = compare(static_p, empirical_p);
        report.config = probe.cfg;
        IndependenceAudit audit = independence_audit(c, static_p, probe.cfg, probe.jobs, probe.max_qubits);

        if (format == "json") {
            nlohmann::ordered_json j;
            j["report"] = report_to_json(report);
            j["independence_audit"] = audit_to_json(audit);
            j["static_picture"] = picture_to_json(static_p);
            j["empirical_picture"] = picture_to_json(empirical_p);
            j["bit_order"] = kBitOrderNote;
            j["manifest"] = manifest("verify", input, probe.cfg, out_path, c);
            emit(j.dump(2) + "\n", out_path, out);
        } else {
            std::string text = report_table(report);
            text += "independence audit: " + std::to_string(audit.pairs.size()) + " pairs, " +
                    std::to_string(audit.violations()) + " violations\n";
            for (const auto &pa : audit.pairs) {
                if (pa.violation) {
                    text += "  violation q" + std::to_string(pa.i) + ",q" + std::to_string(pa.j) +
                            ": no shared dependence but max gap " + format_double(pa.max_gap) + "\n";
                }
            }
            emit(text, out_path, out);
        }
        if (report.soundness_violations() > 0 || !audit.passed()) {
            err << "soundness finding: " << report.soundness_violations() << " oracle_only pair(s), "
                << audit.violations() << " independence violation(s)\n";
            return kSoundnessFinding;
        }
        return kOk;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace qdep::cli
