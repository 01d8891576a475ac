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

#include "qdep/comparator.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qdep {

const char *const kStaticOnlyNote =
    "static_only: the rules retain a dependence that the state does not exhibit (conservative "
    "over-approximation, e.g. entanglement-protected cancellation)";

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AgreeDependent:
            return "agree_dependent";
        case Verdict::AgreeIndependent:
            return "agree_independent";
        case Verdict::StaticOnly:
            return "static_only";
        case Verdict::OracleOnly:
            return "oracle_only";
    }
    return "?";
}

size_t DivergenceReport::count(Verdict v) const {
    auto it = counts.find(v);
    return it == counts.end() ? 0 : it->second;
}

std::optional<Verdict> DivergenceReport::verdict(Qubit q, GateIndex g) const {
    for (const auto &e : entries) {
        if (e.qubit == q && e.gate == g) {
            return e.verdict;
        }
    }
    return std::nullopt;
}

DivergenceReport compare(const DependencePicture &static_p, const DependencePicture &empirical_p) {
    if (static_p.num_qubits != empirical_p.num_qubits || static_p.circuit_hash != empirical_p.circuit_hash) {
        throw std::invalid_argument("pictures describe different circuits");
    }
    if (static_p.labels.size() != empirical_p.labels.size() ||
        !std::equal(static_p.labels.begin(), static_p.labels.end(), empirical_p.labels.begin(),
                    [](const auto &a, const auto &b) { return a.first == b.first; })) {
        throw std::invalid_argument("pictures have different unitary universes");
    }
    if (static_p.by_qubit.size() != static_p.num_qubits || empirical_p.by_qubit.size() != empirical_p.num_qubits) {
        throw std::invalid_argument("compare needs unrestricted pictures");
    }

    DivergenceReport r;
    r.circuit_hash = static_p.circuit_hash;
    r.num_qubits = static_p.num_qubits;
    r.labels = static_p.labels;
    for (Verdict v : {Verdict::AgreeDependent, Verdict::AgreeIndependent, Verdict::StaticOnly, Verdict::OracleOnly}) {
        r.counts[v] = 0;
    }
    for (Qubit q = 0; q < r.num_qubits; q++) {
        const auto &s = static_p.by_qubit.at(q);
        const auto &e = empirical_p.by_qubit.at(q);
        for (const auto &[g, label] : r.labels) {
            bool in_s = s.contains(g);
            bool in_e = e.contains(g);
            Verdict v = in_s ? (in_e ? Verdict::AgreeDependent : Verdict::StaticOnly)
                             : (in_e ? Verdict::OracleOnly : Verdict::AgreeIndependent);
            r.entries.push_back({q, g, v});
            r.counts[v]++;
        }
    }
    return r;
}

std::string report_table(const DivergenceReport &r) {
    std::ostringstream out;
    out << "circuit " << r.circuit_hash.substr(0, 16) << "  qubits " << r.num_qubits << "\n";
    if (r.config) {
        out << "probe samples=" << r.config->samples << " eps=" << r.config->eps << " tol=" << r.config->tol
            << " seed=" << r.config->seed << "\n";
    }
    out << "qubit  gate    unitary         verdict\n";
    for (const auto &e : r.entries) {
        const auto &label = r.labels.at(e.gate);
        std::string name = label ? *label : "-";
        char line[160];
        std::snprintf(line, sizeof(line), "q%-5u %-7s %-15s %s", e.qubit, gate_token(e.gate).c_str(), name.c_str(),
                      verdict_name(e.verdict));
        out << line;
        if (e.verdict == Verdict::OracleOnly) {
            out << "  [soundness violation]";
        }
        out << "\n";
    }
    out << "summary";
    for (const auto &[v, n] : r.counts) {
        out << " " << verdict_name(v) << "=" << n;
    }
    out << "\n";
    if (r.count(Verdict::StaticOnly) > 0) {
        out << "note: " << kStaticOnlyNote << "\n";
    }
    return out.str();
}

size_t IndependenceAudit::violations() const {
    return std::count_if(pairs.begin(), pairs.end(), [](const PairAudit &p) { return p.violation; });
}

IndependenceAudit independence_audit(const Circuit &c, const DependencePicture &static_p, const ProbeConfig &cfg,
                                     size_t jobs, size_t max_qubits) {
    const size_t n = c.num_qubits();
    if (static_p.num_qubits != n) {
        throw std::invalid_argument("picture and circuit disagree on qubit count");
    }
    if (n > max_qubits) {
        throw CapacityError("dense simulation of " + std::to_string(n) + " qubits exceeds the capacity guard of " +
                            std::to_string(max_qubits));
    }
    auto points = probe_points(c, cfg);

    std::vector<std::vector<double>> gaps(points.size());
    detail::parallel_for(points.size(), jobs, [&](size_t s) {
        Statevector sv = simulate(c.with_params(points[s]), max_qubits);
        std::vector<double> row;
        for (Qubit i = 0; i < n; i++) {
            for (Qubit j = i + 1; j < n; j++) {
                row.push_back(joint_distribution(sv, i, j).factorization_gap());
            }
        }
        gaps[s] = std::move(row);
    });

    IndependenceAudit audit;
    size_t idx = 0;
    for (Qubit i = 0; i < n; i++) {
        for (Qubit j = i + 1; j < n; j++, idx++) {
            PairAudit pa;
            pa.i = i;
            pa.j = j;
            pa.shared = shared_dependences(static_p, i, j);
            for (const auto &row : gaps) {
                pa.max_gap = std::max(pa.max_gap, row[idx]);
            }
            pa.factorizes = pa.max_gap < kFactorizationTol;
            pa.violation = pa.shared.empty() && !pa.factorizes;
            audit.pairs.push_back(std::move(pa));
        }
    }
    return audit;
}

}  // namespace qdep
