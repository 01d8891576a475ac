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

#ifndef QDEP_CIRCUIT_H
#define QDEP_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdep/gate.h"

namespace qdep {

enum class CircuitFormat { Native, Qasm2 };

/// Raised for malformed circuit text. `line()` is 1-based.
class ParseError : public std::invalid_argument {
   public:
    ParseError(size_t line, const std::string &message)
        : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {
    }
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// An ordered gate list over a fixed number of qubits.
///
/// Gates are appended through the `add_*` methods, which validate qubit
/// indices, angle finiteness and label uniqueness. Gate ids are the
/// positions in circuit order.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<GateInstance> &gates() const {
        return gates_;
    }
    const GateInstance &gate(GateIndex id) const {
        return gates_.at(id);
    }
    size_t size() const {
        return gates_.size();
    }

    /// Ids of the 1-qubit gate instances, ascending.
    std::vector<GateIndex> unitary_ids() const;

    Circuit &add_u3(Qubit q, GateParams params, std::optional<std::string> label = std::nullopt);
    Circuit &add_x(Qubit q, std::optional<std::string> label = std::nullopt);
    Circuit &add_ry(Qubit q, double theta, std::optional<std::string> label = std::nullopt);
    Circuit &add_cx(Qubit control, Qubit target, std::optional<std::string> label = std::nullopt);

    /// Copy of this circuit with the 1-qubit gate parameters replaced by
    /// `params[id]` (entries for CX ids are ignored). Kinds and labels are kept.
    Circuit with_params(const std::vector<GateParams> &params) const;

    bool operator==(const Circuit &) const = default;

   private:
    Circuit &push(GateInstance g);

    size_t num_qubits_;
    std::vector<GateInstance> gates_;
};

Circuit parse_circuit(std::string_view text, CircuitFormat format = CircuitFormat::Native);
std::string serialize_circuit(const Circuit &c, CircuitFormat format = CircuitFormat::Native);

/// Hex SHA-256 of the native serialization.
std::string circuit_hash(const Circuit &c);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

namespace detail {
Circuit parse_native(std::string_view text);
Circuit parse_qasm2(std::string_view text);
std::string serialize_qasm2(const Circuit &c);
}  // namespace detail

}  // namespace qdep

#endif
