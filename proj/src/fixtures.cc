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

#include "qdep/fixtures.h"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace qdep {

namespace {

// Generic (non-special) angles so the default parameter point exercises
// every amplitude.
const GateParams kGeneric[] = {
    {1.0, 0.2, 0.3}, {0.5, 0.0, 0.0}, {2.1, -0.7, 0.4}, {0.9, 1.3, -0.5}, {1.7, 0.6, 2.2}, {2.6, -1.4, 0.8},
};

Circuit fig1() {
    Circuit c(3);
    c.add_u3(0, kGeneric[0], "U1").add_u3(1, kGeneric[1], "U2");
    c.add_cx(0, 1).add_cx(1, 2);
    return c;
}

Circuit fig2() {
    Circuit c(3);
    c.add_u3(0, kGeneric[0], "U1").add_u3(2, kGeneric[2], "U3");
    c.add_cx(0, 1).add_cx(2, 1);
    return c;
}

Circuit ghz() {
    Circuit c(3);
    c.add_u3(0, {M_PI / 2, 0, 0}, "U1");
    c.add_cx(0, 1).add_cx(1, 2);
    return c;
}

// Ry(t1) puts amplitude sqrt(2/3) on |1>; the Ry(pi/4), CX, Ry(-pi/4)
// sandwich is a controlled rotation splitting that branch evenly over q1.
// The trailing CX pair and X map the three branches onto |W>.
Circuit w_state() {
    Circuit c(3);
    c.add_ry(0, 2 * std::acos(1 / std::sqrt(3.0)), "Ry(θ1)");
    c.add_ry(1, M_PI / 4, "Ry(θ2)");
    c.add_cx(0, 1);
    c.add_ry(1, -M_PI / 4, "Ry(θ3)");
    c.add_cx(1, 2).add_cx(0, 1);
    c.add_x(0, "X");
    return c;
}

Circuit eq4_6() {
    Circuit c(3);
    c.add_u3(0, kGeneric[0], "Ua").add_u3(1, kGeneric[2], "Ub").add_u3(2, kGeneric[3], "Uc");
    c.add_cx(1, 0).add_cx(1, 2).add_cx(0, 2);
    return c;
}

Circuit double_cx() {
    Circuit c(2);
    c.add_u3(0, kGeneric[0], "Ua").add_u3(1, kGeneric[2], "Ub");
    c.add_cx(0, 1).add_cx(0, 1);
    return c;
}

Circuit eq13_15() {
    Circuit c(2);
    c.add_u3(0, kGeneric[0], "Ua").add_u3(1, kGeneric[2], "Ub");
    c.add_cx(0, 1);
    c.add_u3(1, kGeneric[4], "U2");
    c.add_cx(0, 1);
    return c;
}

Circuit eq16_18() {
    Circuit c(3);
    c.add_u3(0, kGeneric[0], "Ua").add_u3(1, kGeneric[2], "Ub");
    c.add_cx(0, 1).add_cx(1, 2);
    c.add_u3(1, kGeneric[4], "U2");
    c.add_cx(0, 1);
    return c;
}

Circuit ansatz_layer(const std::vector<std::pair<Qubit, Qubit>> &entangler) {
    Circuit c(6);
    for (Qubit q = 0; q < 6; q++) {
        c.add_u3(q, kGeneric[q], "U" + std::to_string(q + 1));
    }
    for (auto [control, target] : entangler) {
        c.add_cx(control, target);
    }
    return c;
}

// Ring entangler.
Circuit ansatz_a() {
    return ansatz_layer({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

// Reconstructed entangler whose CNOT-only layer yields the sparse picture
// (two single-dependence qubits, two single-qubit unitaries).
Circuit ansatz_b() {
    return ansatz_layer({{1, 0}, {0, 2}, {3, 4}, {1, 3}, {5, 4}});
}

struct Entry {
    FixtureInfo info;
    std::function<Circuit()> build;
};

const std::vector<Entry> &entries() {
    static const std::vector<Entry> table = {
        {{"fig1", "dependence creation by U1, U2 and copy by CX 0->1, CX 1->2"}, fig1},
        {{"fig2", "entangled state whose outer qubits share no dependence"}, fig2},
        {{"ghz", "GHZ-like state a1|000> + a2|111>, every qubit depends on U1"}, ghz},
        {{"w_state", "W state (|001>+|010>+|100>)/sqrt(3) from Ry rotations, CX and X"}, w_state},
        {{"eq4_6", "cancellation of Ub on q2 received via q1 and q0"}, eq4_6},
        {{"double_cx", "CX 0->1 twice cancels the copied dependence"}, double_cx},
        {{"eq13_15", "unitary between two CX 0->1 blocks the cancellation"}, eq13_15},
        {{"eq16_18", "entanglement with q2 protects the cancellation (static_only divergence)"}, eq16_18},
        {{"ansatz_a", "hardware-efficient ansatz layer with a CX ring entangler"}, ansatz_a},
        {{"ansatz_b", "hardware-efficient ansatz layer with a sparse CX entangler"}, ansatz_b},
    };
    return table;
}

}  // namespace

const std::vector<FixtureInfo> &fixture_catalog() {
    static const std::vector<FixtureInfo> infos = [] {
        std::vector<FixtureInfo> out;
        for (const auto &e : entries()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return infos;
}

Circuit build_fixture(std::string_view name) {
    for (const auto &e : entries()) {
        if (e.info.name == name) {
            return e.build();
        }
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace qdep
