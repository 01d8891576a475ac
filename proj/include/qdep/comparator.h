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

#ifndef QDEP_COMPARATOR_H
#define QDEP_COMPARATOR_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdep/dependence.h"
#include "qdep/probe.h"

namespace qdep {

enum class Verdict { AgreeDependent, AgreeIndependent, StaticOnly, OracleOnly };

const char *verdict_name(Verdict v);

/// Note attached to static_only rows: the rules keep a dependence the state
/// does not show. Expected behavior, not a soundness failure.
extern const char *const kStaticOnlyNote;

struct PairVerdict {
    Qubit qubit = 0;
    GateIndex gate = 0;
    Verdict verdict = Verdict::AgreeIndependent;

    bool operator==(const PairVerdict &) const = default;
};

/// Static vs empirical verdict for every (qubit, 1-qubit gate) pair, sorted
/// by qubit then gate id.
struct DivergenceReport {
    std::string circuit_hash;
    size_t num_qubits = 0;
    std::map<GateIndex, std::optional<std::string>> labels;
    std::vector<PairVerdict> entries;
    std::map<Verdict, size_t> counts;
    std::optional<ProbeConfig> config;

    size_t count(Verdict v) const;
    /// oracle_only rows: the rules missed a physical dependence.
    size_t soundness_violations() const {
        return count(Verdict::OracleOnly);
    }
    std::optional<Verdict> verdict(Qubit q, GateIndex g) const;

    bool operator==(const DivergenceReport &) const = default;
};

/// Throws std::invalid_argument when the pictures do not describe the same
/// circuit (qubit count, circuit hash, unitary universe) or are restricted.
DivergenceReport compare(const DependencePicture &static_p, const DependencePicture &empirical_p);

/// One row per pair, sorted by qubit then gate id.
std::string report_table(const DivergenceReport &r);

/// Max |p(b_i, b_j) - p(b_i) p(b_j)| below which a pair counts as factorized.
inline constexpr double kFactorizationTol = 1e-9;

struct PairAudit {
    Qubit i = 0;
    Qubit j = 0;
    DependenceSet shared;
    double max_gap = 0;
    bool factorizes = true;
    /// No shared dependence, yet the joint distribution does not factorize.
    bool violation = false;
};

struct IndependenceAudit {
    std::vector<PairAudit> pairs;

    size_t violations() const;
    bool passed() const {
        return violations() == 0;
    }
};

/// Checks "no shared dependence => factorized joint distribution" for every
/// qubit pair, over the cfg.samples seeded parameter draws.
IndependenceAudit independence_audit(const Circuit &c, const DependencePicture &static_p, const ProbeConfig &cfg,
                                     size_t jobs = 1, size_t max_qubits = kDefaultMaxQubits);

}  // namespace qdep

#endif
