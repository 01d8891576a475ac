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

#ifndef QDEP_DEPENDENCE_H
#define QDEP_DEPENDENCE_H

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qdep/circuit.h"

namespace qdep {

using DependenceSet = std::set<GateIndex>;

/// One qubit's value at its most recent functional reset. Never reused
/// within one analysis: (origin, epoch) is unique because each qubit's
/// epoch counter only grows.
struct AtomId {
    Qubit origin = 0;
    uint32_t epoch = 0;

    auto operator<=>(const AtomId &) const = default;
};

/// Forward-pass state of the dependence rules.
///
/// Each qubit holds a GF(2) combination of atoms (a sorted atom list with
/// symmetric-difference update). Each atom carries the dependence set that
/// was baked into it when it was created. The dependence set of a qubit is
/// the union over the atoms of its functional, so a CX that XORs an atom
/// in twice cancels it structurally.
class FunctionalState {
   public:
    /// Throws std::invalid_argument when num_qubits == 0.
    explicit FunctionalState(size_t num_qubits);

    size_t num_qubits() const {
        return functional_.size();
    }
    const std::vector<AtomId> &functional(Qubit q) const {
        return functional_.at(q);
    }
    const DependenceSet &atom_deps(AtomId atom) const {
        return atom_deps_.at(atom);
    }
    size_t atom_count() const {
        return atom_deps_.size();
    }
    DependenceSet dependences(Qubit q) const;

    /// A 1-qubit unitary `gate` on `q`: replaces q's functional by a fresh
    /// atom whose dependences are q's current dependences plus `gate`.
    void apply_unitary(Qubit q, GateIndex gate);
    /// functional[target] ^= functional[control]. Throws on control == target.
    void apply_cnot(Qubit control, Qubit target);

    bool operator==(const FunctionalState &) const = default;

   private:
    void check_qubit(Qubit q) const;

    std::vector<std::vector<AtomId>> functional_;
    std::map<AtomId, DependenceSet> atom_deps_;
    std::vector<uint32_t> next_epoch_;
};

FunctionalState init_state(size_t num_qubits);
FunctionalState apply_unitary_dep(FunctionalState s, Qubit q, GateIndex gate);
FunctionalState apply_cnot_dep(FunctionalState s, Qubit control, Qubit target);

enum class Provenance { Static, Empirical };

const char *provenance_name(Provenance p);

/// Dual qubit <-> unitary listing. `by_qubit` and `by_unitary` are exact
/// transposes; `labels` holds every unitary id in the picture's universe.
struct DependencePicture {
    size_t num_qubits = 0;
    Provenance provenance = Provenance::Static;
    std::string circuit_hash;
    std::map<Qubit, DependenceSet> by_qubit;
    std::map<GateIndex, std::set<Qubit>> by_unitary;
    std::map<GateIndex, std::optional<std::string>> labels;

    bool operator==(const DependencePicture &) const = default;

    /// Label, or "g<id>" when unlabeled.
    std::string unitary_name(GateIndex id) const;
};

/// Builds a picture over every qubit and every 1-qubit gate of `c` from the
/// per-qubit dependence sets (`by_qubit.size()` must equal the qubit count).
DependencePicture make_picture(const Circuit &c, const std::vector<DependenceSet> &by_qubit, Provenance provenance);

bool is_transpose_consistent(const DependencePicture &p);

/// Static picture of `c` from a single forward pass over its gates.
DependencePicture analyze(const Circuit &c);

/// Final functional state of the forward pass, for inspection.
FunctionalState analyze_state(const Circuit &c);

/// Keeps only the qubits in `keep`; unitaries left with no qubit are dropped.
/// Throws std::invalid_argument on an empty or out-of-range `keep`.
DependencePicture restrict_picture(const DependencePicture &p, const std::set<Qubit> &keep);

/// Throws std::invalid_argument when i == j or either qubit is absent.
DependenceSet shared_dependences(const DependencePicture &p, Qubit i, Qubit j);

enum class PictureFormat { Json, Dot, Text };

std::string export_picture(const DependencePicture &p, PictureFormat format);

}  // namespace qdep

#endif
