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

#include "qdep/probe.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "qdep/random_circuit.h"

namespace qdep {

void ProbeConfig::validate() const {
    if (samples < 1) {
        throw std::invalid_argument("probe samples must be at least 1");
    }
    if (!(eps > 0) || !std::isfinite(eps)) {
        throw std::invalid_argument("probe eps must be positive");
    }
    if (!(tol > 0) || !std::isfinite(tol)) {
        throw std::invalid_argument("probe tol must be positive");
    }
}

ParamAssignment draw_params(const Circuit &c, const ProbeConfig &cfg, size_t sample) {
    std::seed_seq seq{static_cast<uint32_t>(cfg.seed), static_cast<uint32_t>(cfg.seed >> 32),
                      static_cast<uint32_t>(sample), static_cast<uint32_t>(uint64_t(sample) >> 32)};
    std::mt19937_64 rng(seq);
    ParamAssignment out(c.size());
    for (const auto &g : c.gates()) {
        if (g.is_unitary()) {
            out[g.id] = random_params(rng);
        }
    }
    return out;
}

ParamAssignment circuit_params(const Circuit &c) {
    ParamAssignment out(c.size());
    for (const auto &g : c.gates()) {
        out[g.id] = g.params;
    }
    return out;
}

double SensitivityTable::at(Qubit k, GateIndex gate) const {
    auto it = std::find(gates.begin(), gates.end(), gate);
    if (it == gates.end() || k >= num_qubits) {
        throw std::out_of_range("no sensitivity entry for this (qubit, gate)");
    }
    return max_gradient[k][it - gates.begin()];
}

namespace detail {

void parallel_for(size_t count, size_t jobs, const std::function<void(size_t)> &fn) {
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    for (size_t w = 0; w < jobs; w++) {
        workers.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : workers) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace detail

namespace {

void apply_with(Statevector &s, const GateInstance &g, const GateParams &p) {
    if (g.is_unitary()) {
        s.apply_1q(u3_matrix<double>(p), g.target());
    } else {
        s.apply_cx(g.control(), g.target());
    }
}

// Gradients at one parameter point, for the gates listed in `targets`;
// out[k][pos] = max over the three parameters of |dp_k/dparam|.
std::vector<std::vector<double>> point_gradients(const Circuit &c, const ParamAssignment &point,
                                                 const std::vector<GateIndex> &targets, double eps,
                                                 size_t max_qubits) {
    const auto &gates = c.gates();
    std::vector<std::vector<double>> out(c.num_qubits(), std::vector<double>(targets.size(), 0.0));
    Statevector prefix(c.num_qubits(), max_qubits);
    GateIndex applied = 0;
    for (size_t pos = 0; pos < targets.size(); pos++) {
        GateIndex t = targets[pos];
        for (; applied < t; applied++) {
            apply_with(prefix, gates[applied], point[applied]);
        }
        for (size_t param = 0; param < 3; param++) {
            std::vector<double> p[2];
            for (int side = 0; side < 2; side++) {
                GateParams shifted = point[t];
                shifted[param] += side == 0 ? eps : -eps;
                Statevector s = prefix;
                s.apply_1q(u3_matrix<double>(shifted), gates[t].target());
                for (GateIndex rest = t + 1; rest < gates.size(); rest++) {
                    apply_with(s, gates[rest], point[rest]);
                }
                p[side] = marginals_prob0(s);
            }
            for (Qubit k = 0; k < c.num_qubits(); k++) {
                double grad = std::abs(p[0][k] - p[1][k]) / (2 * eps);
                out[k][pos] = std::max(out[k][pos], grad);
            }
        }
    }
    return out;
}

SensitivityTable table_for(const Circuit &c, const std::vector<ParamAssignment> &points,
                           const std::vector<GateIndex> &targets, double eps, size_t jobs, size_t max_qubits) {
    if (c.num_qubits() > max_qubits) {
        throw CapacityError("dense simulation of " + std::to_string(c.num_qubits()) +
                            " qubits exceeds the capacity guard of " + std::to_string(max_qubits));
    }
    for (const auto &p : points) {
        if (p.size() != c.size()) {
            throw std::invalid_argument("parameter assignment does not match the circuit's gate count");
        }
    }
    std::vector<std::vector<std::vector<double>>> per_point(points.size());
    detail::parallel_for(points.size(), jobs, [&](size_t i) {
        per_point[i] = point_gradients(c, points[i], targets, eps, max_qubits);
    });

    SensitivityTable table;
    table.num_qubits = c.num_qubits();
    table.gates = targets;
    table.max_gradient.assign(c.num_qubits(), std::vector<double>(targets.size(), 0.0));
    for (const auto &grads : per_point) {
        for (Qubit k = 0; k < c.num_qubits(); k++) {
            for (size_t pos = 0; pos < targets.size(); pos++) {
                table.max_gradient[k][pos] = std::max(table.max_gradient[k][pos], grads[k][pos]);
            }
        }
    }
    return table;
}

}  // namespace

SensitivityTable sensitivity_table(const Circuit &c, const std::vector<ParamAssignment> &points, double eps,
                                   size_t jobs, size_t max_qubits) {
    if (!(eps > 0)) {
        throw std::invalid_argument("probe eps must be positive");
    }
    return table_for(c, points, c.unitary_ids(), eps, jobs, max_qubits);
}

std::vector<ParamAssignment> probe_points(const Circuit &c, const ProbeConfig &cfg) {
    cfg.validate();
    std::vector<ParamAssignment> points;
    points.reserve(cfg.samples);
    for (size_t s = 0; s < cfg.samples; s++) {
        points.push_back(draw_params(c, cfg, s));
    }
    return points;
}

SensitivityTable sensitivity_table(const Circuit &c, const ProbeConfig &cfg, size_t jobs, size_t max_qubits) {
    return sensitivity_table(c, probe_points(c, cfg), cfg.eps, jobs, max_qubits);
}

ProbeResult sensitivity_probe(const Circuit &c, GateIndex gate, Qubit k, const ProbeConfig &cfg) {
    if (gate >= c.size()) {
        throw std::out_of_range("no gate " + gate_token(gate));
    }
    if (!c.gate(gate).is_unitary()) {
        throw std::logic_error("sensitivity_probe called on a two-qubit gate (" + gate_token(gate) + ")");
    }
    if (k >= c.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(k) + " out of range");
    }
    SensitivityTable t = table_for(c, probe_points(c, cfg), {gate}, cfg.eps, 1, kDefaultMaxQubits);
    double g = t.max_gradient[k][0];
    return {g > cfg.tol, g};
}

DependencePicture picture_from_table(const Circuit &c, const SensitivityTable &table, double tol) {
    std::vector<DependenceSet> by_qubit(c.num_qubits());
    for (Qubit k = 0; k < c.num_qubits(); k++) {
        for (size_t pos = 0; pos < table.gates.size(); pos++) {
            if (table.max_gradient[k][pos] > tol) {
                by_qubit[k].insert(table.gates[pos]);
            }
        }
    }
    return make_picture(c, by_qubit, Provenance::Empirical);
}

DependencePicture empirical_picture(const Circuit &c, const ProbeConfig &cfg, size_t jobs, size_t max_qubits) {
    return picture_from_table(c, sensitivity_table(c, cfg, jobs, max_qubits), cfg.tol);
}

}  // namespace qdep
