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

#ifndef QDEP_SERIALIZE_H
#define QDEP_SERIALIZE_H

#include "json.hpp"
#include "qdep/comparator.h"
#include "qdep/dependence.h"
#include "qdep/probe.h"

namespace qdep {

/// Note embedded in every oracle-derived JSON document.
inline constexpr const char *kBitOrderNote = "qubit k is bit k of the statevector index (qubit 0 least significant)";

nlohmann::ordered_json picture_to_json(const DependencePicture &p);

nlohmann::ordered_json probe_config_to_json(const ProbeConfig &cfg);

/// {"g<j>": [theta, phi, lam], ...} over the 1-qubit gates.
nlohmann::ordered_json params_to_json(const Circuit &c, const ParamAssignment &params);

/// Gates absent from `j` keep the circuit's own parameters. Throws
/// std::invalid_argument for unknown ids, CX ids, or malformed entries.
ParamAssignment params_from_json(const Circuit &c, const nlohmann::json &j);

/// Per (qubit, gate) max gradient and verdict at threshold `tol`.
nlohmann::ordered_json probe_report_to_json(const SensitivityTable &table, const DependencePicture &labels_from,
                                            double tol);

nlohmann::ordered_json report_to_json(const DivergenceReport &r);

nlohmann::ordered_json audit_to_json(const IndependenceAudit &a);

}  // namespace qdep

#endif
