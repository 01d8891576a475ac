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

#include "qdep/gate.h"

namespace qdep {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::U3:
            return "u3";
        case GateKind::X:
            return "x";
        case GateKind::RY:
            return "ry";
        case GateKind::CX:
            return "cx";
    }
    return "?";
}

std::string gate_token(GateIndex id) {
    return "g" + std::to_string(id);
}

std::string GateInstance::display_name() const {
    return label ? *label : gate_token(id);
}

GateParams x_params() {
    return {M_PI, 0, M_PI};
}

GateParams ry_params(double theta) {
    return {theta, 0, 0};
}

}  // namespace qdep
