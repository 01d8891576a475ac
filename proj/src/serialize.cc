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

#include "qdep/serialize.h"

#include <stdexcept>

namespace qdep {

namespace {

nlohmann::ordered_json qubit_list(const std::set<Qubit> &qs) {
    auto arr = nlohmann::ordered_json::array();
    for (Qubit q : qs) {
        arr.push_back("q" + std::to_string(q));
    }
    return arr;
}

nlohmann::ordered_json label_json(const std::optional<std::string> &label) {
    return label ? nlohmann::ordered_json(*label) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json probe_config_to_json(const ProbeConfig &cfg) {
    nlohmann::ordered_json j;
    j["samples"] = cfg.samples;
    j["eps"] = cfg.eps;
    j["tol"] = cfg.tol;
    j["seed"] = cfg.seed;
    return j;
}

nlohmann::ordered_json params_to_json(const Circuit &c, const ParamAssignment &params) {
    if (params.size() != c.size()) {
        throw std::invalid_argument("parameter assignment does not match the circuit's gate count");
    }
    auto j = nlohmann::ordered_json::object();
    for (GateIndex id : c.unitary_ids()) {
        j[gate_token(id)] = {params[id].theta, params[id].phi, params[id].lam};
    }
    return j;
}

ParamAssignment params_from_json(const Circuit &c, const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("parameter file must be a JSON object");
    }
    ParamAssignment out = circuit_params(c);
    for (const auto &[key, value] : j.items()) {
        GateIndex id = 0;
        size_t used = 0;
        bool ok = key.size() > 1 && key[0] == 'g';
        if (ok) {
            try {
                id = std::stoul(key.substr(1), &used);
            } catch (const std::exception &) {
                ok = false;
            }
            ok = ok && used == key.size() - 1;
        }
        if (!ok || id >= c.size()) {
            throw std::invalid_argument("parameter file: unknown gate '" + key + "'");
        }
        if (!c.gate(id).is_unitary()) {
            throw std::invalid_argument("parameter file: " + key + " is a two-qubit gate");
        }
        if (!value.is_array() || value.size() != 3 || !value[0].is_number() || !value[1].is_number() ||
            !value[2].is_number()) {
            throw std::invalid_argument("parameter file: " + key + " must map to [theta, phi, lam]");
        }
        GateParams p{value[0].get<double>(), value[1].get<double>(), value[2].get<double>()};
        if (!p.is_finite()) {
            throw std::invalid_argument("parameter file: " + key + " has a non-finite angle");
        }
        out[id] = p;
    }
    return out;
}

nlohmann::ordered_json probe_report_to_json(const SensitivityTable &table, const DependencePicture &labels_from,
                                            double tol) {
    nlohmann::ordered_json j;
    j["bit_order"] = kBitOrderNote;
    auto rows = nlohmann::ordered_json::array();
    for (Qubit k = 0; k < table.num_qubits; k++) {
        for (size_t pos = 0; pos < table.gates.size(); pos++) {
            GateIndex g = table.gates[pos];
            nlohmann::ordered_json row;
            row["qubit"] = "q" + std::to_string(k);
            row["gate"] = gate_token(g);
            auto it = labels_from.labels.find(g);
            row["label"] = it == labels_from.labels.end() ? nlohmann::ordered_json(nullptr) : label_json(it->second);
            row["max_gradient"] = table.max_gradient[k][pos];
            row["dependent"] = table.max_gradient[k][pos] > tol;
            rows.push_back(std::move(row));
        }
    }
    j["entries"] = std::move(rows);
    return j;
}

nlohmann::ordered_json report_to_json(const DivergenceReport &r) {
    nlohmann::ordered_json j;
    j["circuit_hash"] = r.circuit_hash;
    j["n"] = r.num_qubits;
    if (r.config) {
        j["probe_config"] = probe_config_to_json(*r.config);
    }
    auto rows = nlohmann::ordered_json::array();
    for (const auto &e : r.entries) {
        nlohmann::ordered_json row;
        row["qubit"] = "q" + std::to_string(e.qubit);
        row["gate"] = gate_token(e.gate);
        row["label"] = label_json(r.labels.at(e.gate));
        row["verdict"] = verdict_name(e.verdict);
        if (e.verdict == Verdict::OracleOnly) {
            row["soundness_violation"] = true;
        } else if (e.verdict == Verdict::StaticOnly) {
            row["note"] = kStaticOnlyNote;
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    nlohmann::ordered_json summary;
    for (const auto &[v, n] : r.counts) {
        summary[verdict_name(v)] = n;
    }
    summary["soundness_violations"] = r.soundness_violations();
    j["summary"] = std::move(summary);
    return j;
}

nlohmann::ordered_json audit_to_json(const IndependenceAudit &a) {
    nlohmann::ordered_json j;
    j["factorization_tol"] = kFactorizationTol;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &p : a.pairs) {
        nlohmann::ordered_json row;
        row["pair"] = qubit_list({p.i, p.j});
        auto shared = nlohmann::ordered_json::array();
        for (GateIndex g : p.shared) {
            shared.push_back(gate_token(g));
        }
        row["shared"] = std::move(shared);
        row["max_gap"] = p.max_gap;
        row["factorizes"] = p.factorizes;
        row["violation"] = p.violation;
        rows.push_back(std::move(row));
    }
    j["pairs"] = std::move(rows);
    j["violations"] = a.violations();
    return j;
}

}  // namespace qdep
