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

#include "qdep/circuit.h"

#include <random>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qdep/fixtures.h"
#include "qdep/random_circuit.h"

using namespace qdep;

TEST(circuit, parse_identity_angle_gate) {
    Circuit c = parse_circuit("qubits 1\nu3 0 0 0 0");
    ASSERT_EQ(c.num_qubits(), 1u);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.gate(0).kind, GateKind::U3);
    EXPECT_EQ(c.gate(0).qubits, std::vector<Qubit>{0});
    EXPECT_EQ(c.gate(0).params, (GateParams{0, 0, 0}));
    EXPECT_EQ(c.gate(0).label, std::nullopt);
}

TEST(circuit, parse_fig1_sequence) {
    Circuit c = parse_circuit("qubits 3\nu3 0 1.0 0.2 0.3 # label=U1\nu3 1 0.5 0 0 # label=U2\ncx 0 1\ncx 1 2");
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c.gate(0).label, "U1");
    EXPECT_EQ(c.gate(0).params, (GateParams{1.0, 0.2, 0.3}));
    EXPECT_EQ(c.gate(1).label, "U2");
    EXPECT_EQ(c.gate(1).target(), 1u);
    EXPECT_EQ(c.gate(2).kind, GateKind::CX);
    EXPECT_EQ(c.gate(2).qubits, (std::vector<Qubit>{0, 1}));
    EXPECT_EQ(c.gate(3).qubits, (std::vector<Qubit>{1, 2}));
    for (GateIndex i = 0; i < c.size(); i++) {
        EXPECT_EQ(c.gate(i).id, i);
    }
    EXPECT_EQ(c, build_fixture("fig1"));
}

TEST(circuit, parse_comments_and_blank_lines) {
    Circuit c = parse_circuit("# a comment\n\n  qubits 2   # trailing\n\nx 1\nry 0 0.25 # label=R\n");
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.gate(0).kind, GateKind::X);
    EXPECT_EQ(c.gate(0).params, x_params());
    EXPECT_EQ(c.gate(1).kind, GateKind::RY);
    EXPECT_EQ(c.gate(1).params, ry_params(0.25));
    EXPECT_EQ(c.gate(1).label, "R");
}

TEST(circuit, parse_errors) {
    auto line_of = [](std::string_view text) -> size_t {
        try {
            parse_circuit(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_THROW(parse_circuit("qubits 2\ncx 0 2"), ParseError);
    EXPECT_EQ(line_of("qubits 2\ncx 0 2"), 2u);
    try {
        parse_circuit("qubits 2\ncx 0 2");
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
    }
    EXPECT_EQ(line_of("qubits 2\n\nh 0"), 3u);
    EXPECT_EQ(line_of("u3 0 0 0 0"), 1u);
    EXPECT_EQ(line_of(""), 1u);
    EXPECT_EQ(line_of("qubits 0"), 1u);
    EXPECT_EQ(line_of("qubits 2\nx 0 # label=A\nx 1 # label=A"), 3u);
    EXPECT_EQ(line_of("qubits 2\ncx 1 1"), 2u);
    EXPECT_EQ(line_of("qubits 2\nu3 0 1 2"), 2u);
    EXPECT_EQ(line_of("qubits 2\nry 0 abc"), 2u);
    EXPECT_EQ(line_of("qubits 2\nry 0 inf"), 2u);
    EXPECT_EQ(line_of("qubits 2\nqubits 3"), 2u);
    EXPECT_EQ(line_of("qubits 2\nx -1"), 2u);
}

TEST(circuit, serialize_empty) {
    EXPECT_EQ(serialize_circuit(Circuit(2)), "qubits 2\n");
}

TEST(circuit, serialize_fig1) {
    EXPECT_EQ(serialize_circuit(build_fixture("fig1")),
              "qubits 3\n"
              "u3 0 1 0.2 0.3 # label=U1\n"
              "u3 1 0.5 0 0 # label=U2\n"
              "cx 0 1\n"
              "cx 1 2\n");
}

TEST(circuit, round_trip_random_circuits) {
    std::mt19937_64 rng(20260914);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 6;
        Circuit c = random_circuit(n, rng() % 25, rng);
        // Mix in the fixed kinds and some labels.
        Circuit mixed(n);
        for (const auto &g : c.gates()) {
            std::optional<std::string> label;
            if (rng() % 4 == 0) {
                label = "L" + std::to_string(g.id);
            }
            switch (rng() % 5) {
                case 0:
                    if (g.is_unitary()) {
                        mixed.add_x(g.target(), label);
                        continue;
                    }
                    break;
                case 1:
                    if (g.is_unitary()) {
                        mixed.add_ry(g.target(), g.params.theta, label);
                        continue;
                    }
                    break;
            }
            if (g.is_unitary()) {
                mixed.add_u3(g.target(), g.params, label);
            } else {
                mixed.add_cx(g.control(), g.target(), label);
            }
        }
        for (CircuitFormat f : {CircuitFormat::Native, CircuitFormat::Qasm2}) {
            Circuit back = parse_circuit(serialize_circuit(mixed, f), f);
            ASSERT_EQ(back, mixed) << serialize_circuit(mixed, f);
        }
    }
}

TEST(circuit, qasm_import) {
    Circuit c = parse_circuit(
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[3];\n"
        "u3(pi/2, -pi/4, 2*0.5) q[0]; // label=U1\n"
        "ry(-(pi)/4) q[1];\n"
        "x q[2];\n"
        "cx q[0],q[1];\n",
        CircuitFormat::Qasm2);
    ASSERT_EQ(c.num_qubits(), 3u);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c.gate(0).params, (GateParams{M_PI / 2, -M_PI / 4, 1.0}));
    EXPECT_EQ(c.gate(0).label, "U1");
    EXPECT_DOUBLE_EQ(c.gate(1).params.theta, -M_PI / 4);
    EXPECT_EQ(c.gate(2).kind, GateKind::X);
    EXPECT_EQ(c.gate(3).qubits, (std::vector<Qubit>{0, 1}));
}

TEST(circuit, qasm_unsupported_constructs) {
    auto message = [](std::string_view text) -> std::string {
        try {
            parse_circuit(text, CircuitFormat::Qasm2);
        } catch (const ParseError &e) {
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message("OPENQASM 2.0;\nqreg q[2];\nh q[0];").find("'h'"), std::string::npos);
    EXPECT_NE(message("OPENQASM 2.0;\nqreg q[2];\ncreg c[2];").find("'creg'"), std::string::npos);
    EXPECT_NE(message("OPENQASM 2.0;\nqreg q[2];\nmeasure q[0] -> c[0];").find("'measure'"), std::string::npos);
    EXPECT_NE(message("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];").find("qreg"), std::string::npos);
    EXPECT_NE(message("OPENQASM 2.0;\nqreg q[2];\nbarrier q;").find("'barrier'"), std::string::npos);
    EXPECT_NE(message("OPENQASM 2.0;\ninclude \"other.inc\";").find("include"), std::string::npos);
    EXPECT_NE(message("OPENQASM 3.0;").find("2.0"), std::string::npos);
    EXPECT_NE(message("qreg q[2];").find("OPENQASM"), std::string::npos);
    EXPECT_NE(message("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[2];").find("out of range"), std::string::npos);
    EXPECT_NE(message("OPENQASM 2.0;\nqreg q[2];\nry(sin(1)) q[0];").find("'sin'"), std::string::npos);
}

TEST(gate, matrix_examples) {
    GateInstance x{0, GateKind::X, {0}, x_params(), {}};
    Eigen::Matrix2cd expected_x;
    expected_x << 0, 1, 1, 0;
    EXPECT_LT((gate_matrix(x) - expected_x).cwiseAbs().maxCoeff(), 1e-15);

    for (double theta : {0.0, 0.3, -1.2, M_PI, 2.5}) {
        GateInstance ry{0, GateKind::RY, {0}, ry_params(theta), {}};
        Eigen::Matrix2cd expected;
        expected << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
        EXPECT_LT((gate_matrix(ry) - expected).cwiseAbs().maxCoeff(), 1e-15);
    }

    GateInstance id{0, GateKind::U3, {0}, {0, 0, 0}, {}};
    EXPECT_LT((gate_matrix(id) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);

    GateInstance cx{0, GateKind::CX, {0, 1}, {}, {}};
    EXPECT_THROW(gate_matrix(cx), std::logic_error);
}

TEST(gate, matrix_matches_amplitude_form) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; i++) {
        GateParams p = qdep::testing::random_gate_params(rng);
        EXPECT_LT((u3_matrix(p) - qdep::testing::amplitude_form(p)).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(gate, matrix_is_unitary) {
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; i++) {
        GateParams p = random_params(rng);
        auto m = u3_matrix(p);
        EXPECT_LT((m * m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(gate, matrix_templated_on_scalar) {
    auto m = u3_matrix<float>({1.0, 0.5, -0.25});
    auto md = u3_matrix<double>({1.0, 0.5, -0.25});
    EXPECT_LT((m.cast<std::complex<double>>() - md).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(circuit, hash_is_content_based) {
    EXPECT_EQ(circuit_hash(build_fixture("fig1")), circuit_hash(build_fixture("fig1")));
    EXPECT_NE(circuit_hash(build_fixture("fig1")), circuit_hash(build_fixture("fig2")));
    EXPECT_EQ(circuit_hash(build_fixture("fig1")).size(), 64u);
}

TEST(circuit, builder_validation) {
    Circuit c(2);
    EXPECT_THROW(c.add_u3(2, {}), std::invalid_argument);
    EXPECT_THROW(c.add_cx(0, 0), std::invalid_argument);
    EXPECT_THROW(c.add_u3(0, {NAN, 0, 0}), std::invalid_argument);
    EXPECT_THROW(c.add_x(0, "has space"), std::invalid_argument);
    c.add_x(0, "A");
    EXPECT_THROW(c.add_x(1, "A"), std::invalid_argument);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
    EXPECT_EQ(c.size(), 1u);
}
