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

#include "qdep/dependence.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace qdep {

FunctionalState::FunctionalState(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("functional state needs at least one qubit");
    }
    functional_.resize(num_qubits);
    next_epoch_.assign(num_qubits, 1);
    for (Qubit q = 0; q < num_qubits; q++) {
        AtomId a{q, 0};
        functional_[q] = {a};
        atom_deps_[a] = {};
    }
}

void FunctionalState::check_qubit(Qubit q) const {
    if (q >= functional_.size()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
    }
}

DependenceSet FunctionalState::dependences(Qubit q) const {
    check_qubit(q);
    DependenceSet out;
    for (const AtomId &a : functional_[q]) {
        const auto &d = atom_deps_.at(a);
        out.insert(d.begin(), d.end());
    }
    return out;
}

void FunctionalState::apply_unitary(Qubit q, GateIndex gate) {
    DependenceSet deps = dependences(q);
    deps.insert(gate);
    AtomId fresh{q, next_epoch_[q]++};
    atom_deps_.emplace(fresh, std::move(deps));
    functional_[q] = {fresh};
}

void FunctionalState::apply_cnot(Qubit control, Qubit target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("cnot control and target must differ");
    }
    const auto &c = functional_[control];
    const auto &t = functional_[target];
    std::vector<AtomId> sum;
    sum.reserve(c.size() + t.size());
    std::set_symmetric_difference(t.begin(), t.end(), c.begin(), c.end(), std::back_inserter(sum));
    functional_[target] = std::move(sum);
}

FunctionalState init_state(size_t num_qubits) {
    return FunctionalState(num_qubits);
}

FunctionalState apply_unitary_dep(FunctionalState s, Qubit q, GateIndex gate) {
    s.apply_unitary(q, gate);
    return s;
}

FunctionalState apply_cnot_dep(FunctionalState s, Qubit control, Qubit target) {
    s.apply_cnot(control, target);
    return s;
}

const char *provenance_name(Provenance p) {
    return p == Provenance::Static ? "static" : "empirical";
}

std::string DependencePicture::unitary_name(GateIndex id) const {
    auto it = labels.find(id);
    if (it != labels.end() && it->second) {
        return *it->second;
    }
    return gate_token(id);
}

DependencePicture make_picture(const Circuit &c, const std::vector<DependenceSet> &by_qubit, Provenance provenance) {
    if (by_qubit.size() != c.num_qubits()) {
        throw std::invalid_argument("one dependence set per qubit required");
    }
    DependencePicture p;
    p.num_qubits = c.num_qubits();
    p.provenance = provenance;
    p.circuit_hash = circuit_hash(c);
    for (GateIndex id : c.unitary_ids()) {
        p.labels[id] = c.gate(id).label;
        p.by_unitary[id];
    }
    for (Qubit q = 0; q < by_qubit.size(); q++) {
        for (GateIndex g : by_qubit[q]) {
            auto it = p.by_unitary.find(g);
            if (it == p.by_unitary.end()) {
                throw std::invalid_argument(gate_token(g) + " is not a 1-qubit gate of the circuit");
            }
            it->second.insert(q);
        }
        p.by_qubit[q] = by_qubit[q];
    }
    return p;
}

bool is_transpose_consistent(const DependencePicture &p) {
    for (const auto &[q, deps] : p.by_qubit) {
        for (GateIndex g : deps) {
            auto it = p.by_unitary.find(g);
            if (it == p.by_unitary.end() || !it->second.contains(q)) {
                return false;
            }
        }
    }
    for (const auto &[g, qubits] : p.by_unitary) {
        if (!p.labels.contains(g)) {
            return false;
        }
        for (Qubit q : qubits) {
            auto it = p.by_qubit.find(q);
            if (it == p.by_qubit.end() || !it->second.contains(g)) {
                return false;
            }
        }
    }
    return true;
}

FunctionalState analyze_state(const Circuit &c) {
    FunctionalState s(c.num_qubits());
    for (const auto &g : c.gates()) {
        if (g.is_unitary()) {
            s.apply_unitary(g.target(), g.id);
        } else {
            s.apply_cnot(g.control(), g.target());
        }
    }
    return s;
}

DependencePicture analyze(const Circuit &c) {
    FunctionalState s = analyze_state(c);
    std::vector<DependenceSet> by_qubit;
    by_qubit.reserve(c.num_qubits());
    for (Qubit q = 0; q < c.num_qubits(); q++) {
        by_qubit.push_back(s.dependences(q));
    }
    return make_picture(c, by_qubit, Provenance::Static);
}

DependencePicture restrict_picture(const DependencePicture &p, const std::set<Qubit> &keep) {
    if (keep.empty()) {
        throw std::invalid_argument("restriction needs at least one qubit");
    }
    for (Qubit q : keep) {
        if (!p.by_qubit.contains(q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is not in the picture");
        }
    }
    DependencePicture out;
    out.num_qubits = p.num_qubits;
    out.provenance = p.provenance;
    out.circuit_hash = p.circuit_hash;
    for (Qubit q : keep) {
        out.by_qubit[q] = p.by_qubit.at(q);
    }
    for (const auto &[g, qubits] : p.by_unitary) {
        std::set<Qubit> kept;
        std::set_intersection(qubits.begin(), qubits.end(), keep.begin(), keep.end(),
                              std::inserter(kept, kept.end()));
        if (!kept.empty()) {
            out.by_unitary[g] = std::move(kept);
            out.labels[g] = p.labels.at(g);
        }
    }
    return out;
}

DependenceSet shared_dependences(const DependencePicture &p, Qubit i, Qubit j) {
    if (i == j) {
        throw std::invalid_argument("shared_dependences needs two distinct qubits");
    }
    auto a = p.by_qubit.find(i);
    auto b = p.by_qubit.find(j);
    if (a == p.by_qubit.end() || b == p.by_qubit.end()) {
        throw std::invalid_argument("qubit not in picture");
    }
    DependenceSet out;
    std::set_intersection(a->second.begin(), a->second.end(), b->second.begin(), b->second.end(),
                          std::inserter(out, out.end()));
    return out;
}

}  // namespace qdep
