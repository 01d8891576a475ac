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

#include "qdep/circuit.h"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace qdep {

namespace {

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            i++;
        }
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
            j++;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

size_t parse_index(std::string_view tok, size_t line, const char *what) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
}

double parse_angle(std::string_view tok, size_t line) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError(line, "expected a finite angle, got '" + std::string(tok) + "'");
    }
    return v;
}

void check_label(const std::optional<std::string> &label) {
    if (!label) {
        return;
    }
    if (label->empty()) {
        throw std::invalid_argument("empty label");
    }
    for (char ch : *label) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '#') {
            throw std::invalid_argument("label '" + *label + "' contains whitespace or '#'");
        }
    }
}

}  // namespace

Circuit::Circuit(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("a circuit needs at least one qubit");
    }
}

std::vector<GateIndex> Circuit::unitary_ids() const {
    std::vector<GateIndex> ids;
    for (const auto &g : gates_) {
        if (g.is_unitary()) {
            ids.push_back(g.id);
        }
    }
    return ids;
}

Circuit &Circuit::push(GateInstance g) {
    for (Qubit q : g.qubits) {
        if (q >= num_qubits_) {
            throw std::invalid_argument(
                "qubit index " + std::to_string(q) + " out of range (circuit has " + std::to_string(num_qubits_) +
                " qubits)");
        }
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("cx control and target must differ (both are " + std::to_string(g.qubits[0]) + ")");
    }
    if (!g.params.is_finite()) {
        throw std::invalid_argument("gate angles must be finite");
    }
    check_label(g.label);
    if (g.label) {
        for (const auto &other : gates_) {
            if (other.label == g.label) {
                throw std::invalid_argument("duplicate label '" + *g.label + "'");
            }
        }
    }
    g.id = gates_.size();
    gates_.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::add_u3(Qubit q, GateParams params, std::optional<std::string> label) {
    return push({0, GateKind::U3, {q}, params, std::move(label)});
}

Circuit &Circuit::add_x(Qubit q, std::optional<std::string> label) {
    return push({0, GateKind::X, {q}, x_params(), std::move(label)});
}

Circuit &Circuit::add_ry(Qubit q, double theta, std::optional<std::string> label) {
    return push({0, GateKind::RY, {q}, ry_params(theta), std::move(label)});
}

Circuit &Circuit::add_cx(Qubit control, Qubit target, std::optional<std::string> label) {
    return push({0, GateKind::CX, {control, target}, {}, std::move(label)});
}

Circuit Circuit::with_params(const std::vector<GateParams> &params) const {
    if (params.size() != gates_.size()) {
        throw std::invalid_argument("parameter vector length does not match gate count");
    }
    Circuit out = *this;
    for (auto &g : out.gates_) {
        if (g.is_unitary()) {
            if (!params[g.id].is_finite()) {
                throw std::invalid_argument("gate angles must be finite");
            }
            g.params = params[g.id];
        }
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace detail {

Circuit parse_native(std::string_view text) {
    std::optional<Circuit> circuit;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        line_no++;

        std::optional<std::string> label;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            std::string_view comment = trim(line.substr(hash + 1));
            if (comment.starts_with("label=")) {
                label = std::string(trim(comment.substr(6)));
            }
            line = line.substr(0, hash);
        }
        auto tok = split_ws(line);
        if (tok.empty()) {
            continue;
        }

        if (!circuit) {
            if (tok[0] != "qubits" || tok.size() != 2) {
                throw ParseError(line_no, "expected 'qubits N' header");
            }
            size_t n = parse_index(tok[1], line_no, "a qubit count");
            if (n == 0) {
                throw ParseError(line_no, "qubit count must be at least 1");
            }
            circuit.emplace(n);
            continue;
        }

        auto arity = [&](size_t expected) {
            if (tok.size() != expected + 1) {
                throw ParseError(line_no, "'" + std::string(tok[0]) + "' takes " + std::to_string(expected) +
                                              " operands, got " + std::to_string(tok.size() - 1));
            }
        };
        auto qubit = [&](size_t k) {
            return static_cast<Qubit>(parse_index(tok[k], line_no, "a qubit index"));
        };
        try {
            if (tok[0] == "u3") {
                arity(4);
                circuit->add_u3(qubit(1),
                                {parse_angle(tok[2], line_no), parse_angle(tok[3], line_no),
                                 parse_angle(tok[4], line_no)},
                                label);
            } else if (tok[0] == "x") {
                arity(1);
                circuit->add_x(qubit(1), label);
            } else if (tok[0] == "ry") {
                arity(2);
                circuit->add_ry(qubit(1), parse_angle(tok[2], line_no), label);
            } else if (tok[0] == "cx") {
                arity(2);
                circuit->add_cx(qubit(1), qubit(2), label);
            } else if (tok[0] == "qubits") {
                throw ParseError(line_no, "duplicate 'qubits' header");
            } else {
                throw ParseError(line_no, "unknown gate kind '" + std::string(tok[0]) + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!circuit) {
        throw ParseError(line_no, "missing 'qubits N' header");
    }
    return *std::move(circuit);
}

}  // namespace detail

Circuit parse_circuit(std::string_view text, CircuitFormat format) {
    return format == CircuitFormat::Native ? detail::parse_native(text) : detail::parse_qasm2(text);
}

std::string serialize_circuit(const Circuit &c, CircuitFormat format) {
    if (format == CircuitFormat::Qasm2) {
        return detail::serialize_qasm2(c);
    }
    std::string out = "qubits " + std::to_string(c.num_qubits()) + "\n";
    for (const auto &g : c.gates()) {
        out += gate_kind_name(g.kind);
        for (Qubit q : g.qubits) {
            out += " " + std::to_string(q);
        }
        if (g.kind == GateKind::U3) {
            out += " " + format_double(g.params.theta) + " " + format_double(g.params.phi) + " " +
                   format_double(g.params.lam);
        } else if (g.kind == GateKind::RY) {
            out += " " + format_double(g.params.theta);
        }
        if (g.label) {
            out += " # label=" + *g.label;
        }
        out += "\n";
    }
    return out;
}

std::string circuit_hash(const Circuit &c) {
    std::string text = serialize_circuit(c);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; i++) {
        std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

}  // namespace qdep
