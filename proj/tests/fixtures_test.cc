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

#include "gtest/gtest.h"
#include "oracle.h"
#include "qdep/statevector.h"

using namespace qdep;

namespace {

std::vector<std::pair<GateKind, std::vector<Qubit>>> shape(const Circuit &c) {
    std::vector<std::pair<GateKind, std::vector<Qubit>>> out;
    for (const auto &g : c.gates()) {
        out.emplace_back(g.kind, g.qubits);
    }
    return out;
}

}  // namespace

TEST(fixtures, catalog_has_ten_entries) {
    std::vector<std::string> names;
    for (const auto &f : fixture_catalog()) {
        names.push_back(f.name);
        EXPECT_FALSE(f.description.empty());
        EXPECT_NO_THROW(build_fixture(f.name));
    }
    EXPECT_EQ(names, (std::vector<std::string>{"fig1", "fig2", "ghz", "w_state", "eq4_6", "double_cx", "eq13_15",
                                               "eq16_18", "ansatz_a", "ansatz_b"}));
}

TEST(fixtures, unknown_name) {
    EXPECT_THROW(build_fixture("nope"), std::invalid_argument);
}

TEST(fixtures, ghz_shape) {
    Circuit c = build_fixture("ghz");
    using K = GateKind;
    EXPECT_EQ(shape(c), (decltype(shape(c)){{K::U3, {0}}, {K::CX, {0, 1}}, {K::CX, {1, 2}}}));
    EXPECT_EQ(c.gate(0).label, "U1");
}

TEST(fixtures, eq4_6_shape) {
    Circuit c = build_fixture("eq4_6");
    using K = GateKind;
    EXPECT_EQ(shape(c), (decltype(shape(c)){{K::U3, {0}},
                                            {K::U3, {1}},
                                            {K::U3, {2}},
                                            {K::CX, {1, 0}},
                                            {K::CX, {1, 2}},
                                            {K::CX, {0, 2}}}));
    EXPECT_EQ(c.gate(0).label, "Ua");
    EXPECT_EQ(c.gate(1).label, "Ub");
    EXPECT_EQ(c.gate(2).label, "Uc");
}

TEST(fixtures, ansatz_a_ring) {
    Circuit c = build_fixture("ansatz_a");
    ASSERT_EQ(c.num_qubits(), 6u);
    ASSERT_EQ(c.size(), 12u);
    for (Qubit q = 0; q < 6; q++) {
        EXPECT_EQ(c.gate(q).kind, GateKind::U3);
        EXPECT_EQ(c.gate(q).target(), q);
        EXPECT_EQ(c.gate(q).label, "U" + std::to_string(q + 1));
        EXPECT_EQ(c.gate(6 + q).qubits, (std::vector<Qubit>{q, (q + 1) % 6}));
    }
}

TEST(fixtures, w_state_uses_stated_angles) {
    Circuit c = build_fixture("w_state");
    std::vector<double> ry;
    size_t x_count = 0;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::RY) {
            ry.push_back(g.params.theta);
        }
        x_count += g.kind == GateKind::X;
    }
    ASSERT_EQ(ry.size(), 3u);
    EXPECT_DOUBLE_EQ(ry[0], 2 * std::acos(1 / std::sqrt(3.0)));
    EXPECT_DOUBLE_EQ(ry[1], M_PI / 4);
    EXPECT_DOUBLE_EQ(ry[2], -M_PI / 4);
    EXPECT_EQ(x_count, 1u);
}

TEST(fixtures, w_state_prepares_w) {
    Circuit c = build_fixture("w_state");
    qdep::testing::Vec w = qdep::testing::Vec::Zero(8);
    w(1) = w(2) = w(4) = 1 / std::sqrt(3.0);
    EXPECT_LT(qdep::testing::phase_insensitive_distance(simulate(c).amplitudes(), w), 1e-9);
    EXPECT_LT(qdep::testing::phase_insensitive_distance(qdep::testing::oracle_state(c), w), 1e-9);
}

TEST(fixtures, ghz_prepares_ghz) {
    qdep::testing::Vec ghz = qdep::testing::Vec::Zero(8);
    ghz(0) = ghz(7) = 1 / std::sqrt(2.0);
    EXPECT_LT((simulate(build_fixture("ghz")).amplitudes() - ghz).cwiseAbs().maxCoeff(), 1e-12);
}
