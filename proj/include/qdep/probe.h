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

#ifndef QDEP_PROBE_H
#define QDEP_PROBE_H

#include <cstdint>
#include <functional>
#include <vector>

#include "qdep/circuit.h"
#include "qdep/dependence.h"
#include "qdep/statevector.h"

namespace qdep {

struct ProbeConfig {
    size_t samples = 8;
    double eps = 1e-4;
    double tol = 1e-6;
    uint64_t seed = 42;

    bool operator==(const ProbeConfig &) const = default;

    /// Throws std::invalid_argument unless samples >= 1, eps > 0, tol > 0.
    void validate() const;
};

/// Parameters for every gate, indexed by gate id. Entries at CX ids are unused.
using ParamAssignment = std::vector<GateParams>;

/// The `sample`-th seeded random assignment: fresh uniform angles for every
/// 1-qubit gate, drawn in gate order from a generator seeded by
/// (cfg.seed, sample). Identical across calls and threads.
ParamAssignment draw_params(const Circuit &c, const ProbeConfig &cfg, size_t sample);

/// The parameters the circuit itself carries.
ParamAssignment circuit_params(const Circuit &c);

/// Max |dp(|0>_k)/dparam| per qubit and 1-qubit gate, over a set of
/// parameter points and the three parameters of each gate; central
/// differences with step eps.
struct SensitivityTable {
    size_t num_qubits = 0;
    std::vector<GateIndex> gates;
    /// max_gradient[k][pos] for qubit k and gate gates[pos].
    std::vector<std::vector<double>> max_gradient;

    double at(Qubit k, GateIndex gate) const;
};

/// `jobs` worker threads (0 = hardware concurrency). Results do not depend
/// on `jobs`.
SensitivityTable sensitivity_table(const Circuit &c, const std::vector<ParamAssignment> &points, double eps,
                                   size_t jobs = 1, size_t max_qubits = kDefaultMaxQubits);

/// The cfg.samples seeded draws of `draw_params`.
std::vector<ParamAssignment> probe_points(const Circuit &c, const ProbeConfig &cfg);

SensitivityTable sensitivity_table(const Circuit &c, const ProbeConfig &cfg, size_t jobs = 1,
                                   size_t max_qubits = kDefaultMaxQubits);

struct ProbeResult {
    bool dependent = false;
    double max_abs_gradient = 0;
};

/// Throws std::logic_error when `gate` is a CX.
ProbeResult sensitivity_probe(const Circuit &c, GateIndex gate, Qubit k, const ProbeConfig &cfg);

DependencePicture picture_from_table(const Circuit &c, const SensitivityTable &table, double tol);

/// Propagates CapacityError.
DependencePicture empirical_picture(const Circuit &c, const ProbeConfig &cfg, size_t jobs = 1,
                                    size_t max_qubits = kDefaultMaxQubits);

namespace detail {
/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(size_t count, size_t jobs, const std::function<void(size_t)> &fn);
}  // namespace detail

}  // namespace qdep

#endif
