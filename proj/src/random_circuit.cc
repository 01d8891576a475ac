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

#include "qdep/random_circuit.h"

#include <cmath>

namespace qdep {

GateParams random_params(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    GateParams p;
    p.theta = angle(rng);
    p.phi = angle(rng);
    p.lam = angle(rng);
    return p;
}

Circuit random_circuit(size_t num_qubits, size_t num_gates, std::mt19937_64 &rng, double cx_fraction) {
    Circuit c(num_qubits);
    std::uniform_int_distribution<Qubit> pick(0, static_cast<Qubit>(num_qubits - 1));
    std::bernoulli_distribution two_qubit(cx_fraction);
    for (size_t i = 0; i < num_gates; i++) {
        if (num_qubits >= 2 && two_qubit(rng)) {
            Qubit control = pick(rng);
            Qubit target = pick(rng);
            while (target == control) {
                target = pick(rng);
            }
            c.add_cx(control, target);
        } else {
            Qubit q = pick(rng);
            c.add_u3(q, random_params(rng));
        }
    }
    return c;
}

}  // namespace qdep
