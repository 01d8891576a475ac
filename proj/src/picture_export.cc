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

#include <sstream>

#include "json.hpp"
#include "qdep/dependence.h"
#include "qdep/serialize.h"

namespace qdep {

nlohmann::ordered_json picture_to_json(const DependencePicture &p) {
    nlohmann::ordered_json j;
    j["n"] = p.num_qubits;
    j["provenance"] = provenance_name(p.provenance);
    j["circuit_hash"] = p.circuit_hash;
    auto by_qubit = nlohmann::ordered_json::object();
    for (const auto &[q, deps] : p.by_qubit) {
        auto arr = nlohmann::ordered_json::array();
        for (GateIndex g : deps) {
            arr.push_back(gate_token(g));
        }
        by_qubit["q" + std::to_string(q)] = std::move(arr);
    }
    j["by_qubit"] = std::move(by_qubit);
    auto by_unitary = nlohmann::ordered_json::object();
    for (const auto &[g, qubits] : p.by_unitary) {
        nlohmann::ordered_json entry;
        const auto &label = p.labels.at(g);
        entry["label"] = label ? nlohmann::ordered_json(*label) : nlohmann::ordered_json(nullptr);
        auto arr = nlohmann::ordered_json::array();
        for (Qubit q : qubits) {
            arr.push_back("q" + std::to_string(q));
        }
        entry["qubits"] = std::move(arr);
        by_unitary[gate_token(g)] = std::move(entry);
    }
    j["by_unitary"] = std::move(by_unitary);
    return j;
}

namespace {

std::string dot_escape(const std::string &s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
        }
        out += ch;
    }
    return out;
}

std::string render_dot(const DependencePicture &p) {
    std::ostringstream out;
    out << "graph dependence {\n";
    for (const auto &[q, deps] : p.by_qubit) {
        out << "  \"q" << q << "\" [shape=box];\n";
    }
    for (const auto &[g, qubits] : p.by_unitary) {
        out << "  \"" << gate_token(g) << "\" [shape=ellipse, label=\"" << dot_escape(p.unitary_name(g)) << "\"];\n";
    }
    for (const auto &[q, deps] : p.by_qubit) {
        for (GateIndex g : deps) {
            out << "  \"q" << q << "\" -- \"" << gate_token(g) << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string render_text(const DependencePicture &p) {
    std::string out = "by qubits (";
    bool first = true;
    for (const auto &[q, deps] : p.by_qubit) {
        out += first ? "" : ", ";
        first = false;
        out += "q" + std::to_string(q) + ":{";
        bool inner = true;
        for (GateIndex g : deps) {
            out += inner ? "" : ",";
            inner = false;
            out += p.unitary_name(g);
        }
        out += "}";
    }
    out += ")\nby 1-qubit unitaries (";
    first = true;
    for (const auto &[g, qubits] : p.by_unitary) {
        out += first ? "" : ", ";
        first = false;
        out += p.unitary_name(g) + ":{";
        bool inner = true;
        for (Qubit q : qubits) {
            out += inner ? "" : ",";
            inner = false;
            out += "q" + std::to_string(q);
        }
        out += "}";
    }
    out += ")\n";
    return out;
}

}  // namespace

std::string export_picture(const DependencePicture &p, PictureFormat format) {
    switch (format) {
        case PictureFormat::Json:
            return picture_to_json(p).dump(2) + "\n";
        case PictureFormat::Dot:
            return render_dot(p);
        case PictureFormat::Text:
            return render_text(p);
    }
    return {};
}

}  // namespace qdep
