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

#ifndef QDEP_RANDOM_CIRCUIT_H
#define QDEP_RANDOM_CIRCUIT_H

#include <cstdint>
#include <random>

#include "qdep/circuit.h"

namespace qdep {

/// Uniform angle in [-pi, pi) for each of the three parameters.
GateParams random_params(std::mt19937_64 &rng);

/// `num_gates` gates; each is a U3 on a uniformly chosen qubit or (when
/// n >= 2, with probability `cx_fraction`) a CX on a uniformly chosen
/// ordered pair of distinct qubits.
Circuit random_circuit(size_t num_qubits, size_t num_gates, std::mt19937_64 &rng, double cx_fraction = 0.5);

}  // namespace qdep

#endif
