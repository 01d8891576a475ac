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

#include <random>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qdep/fixtures.h"
#include "qdep/random_circuit.h"

using namespace qdep;
namespace oracle = qdep::testing;

namespace {

GateIndex gate_by_label(const Circuit &c, const std::string &label) {
    for (const auto &g : c.gates()) {
        if (g.label == label) {
            return g.id;
        }
    }
    throw std::out_of_range(label);
}

// Central difference through the Kronecker oracle, from scratch per point.
double oracle_gradient(const Circuit &c, const ParamAssignment &point, GateIndex gate, int param, Qubit k,
                       double eps) {
    auto eval = [&](double shift) {
        ParamAssignment p = point;
        double *slot = param == 0 ? &p[gate].theta : param == 1 ? &p[gate].phi : &p[gate].lam;
        *slot += shift;
        return oracle::oracle_prob0(oracle::oracle_state(c.with_params(p)), k);
    };
    return (eval(eps) - eval(-eps)) / (2 * eps);
}

}  // namespace

TEST(probe_config, validate) {
    ProbeConfig cfg;
    EXPECT_EQ(cfg.samples, 8u);
    EXPECT_EQ(cfg.eps, 1e-4);
    EXPECT_EQ(cfg.tol, 1e-6);
    EXPECT_EQ(cfg.seed, 42u);
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_THROW((ProbeConfig{0, 1e-4, 1e-6, 42}.validate()), std::invalid_argument);
    EXPECT_THROW((ProbeConfig{8, 0, 1e-6, 42}.validate()), std::invalid_argument);
    EXPECT_THROW((ProbeConfig{8, 1e-4, -1, 42}.validate()), std::invalid_argument);
}

TEST(draw_params, seeded_and_in_range) {
    Circuit c = build_fixture("ansatz_a");
    ProbeConfig cfg;
    EXPECT_EQ(draw_params(c, cfg, 3), draw_params(c, cfg, 3));
    EXPECT_NE(draw_params(c, cfg, 3), draw_params(c, cfg, 4));
    ProbeConfig other = cfg;
    other.seed = 7;
    EXPECT_NE(draw_params(c, cfg, 0), draw_params(c, other, 0));
    for (size_t s = 0; s < 20; s++) {
        for (GateIndex g : c.unitary_ids()) {
            auto p = draw_params(c, cfg, s)[g];
            for (int k = 0; k < 3; k++) {
                ASSERT_GE(p[k], -M_PI);
                ASSERT_LT(p[k], M_PI);
            }
        }
    }
}

TEST(sensitivity_probe, fig1_examples) {
    Circuit c = build_fixture("fig1");
    ProbeConfig cfg;
    ProbeResult r = sensitivity_probe(c, gate_by_label(c, "U1"), 2, cfg);
    EXPECT_TRUE(r.dependent);
    EXPECT_GT(r.max_abs_gradient, 1e-3);
    ProbeResult none = sensitivity_probe(c, gate_by_label(c, "U2"), 0, cfg);
    EXPECT_FALSE(none.dependent);
    EXPECT_LT(none.max_abs_gradient, 1e-9);
    EXPECT_THROW(sensitivity_probe(c, 2, 0, cfg), std::logic_error);
    EXPECT_THROW(sensitivity_probe(c, 0, 3, cfg), std::out_of_range);
}

TEST(sensitivity_probe, fig2_and_protected_cancellation) {
    Circuit fig2 = build_fixture("fig2");
    EXPECT_FALSE(sensitivity_probe(fig2, gate_by_label(fig2, "U1"), 2, {}).dependent);
    EXPECT_TRUE(sensitivity_probe(fig2, gate_by_label(fig2, "U1"), 1, {}).dependent);

    Circuit e16 = build_fixture("eq16_18");
    EXPECT_FALSE(sensitivity_probe(e16, gate_by_label(e16, "Ua"), 1, {}).dependent);
    Circuit e13 = build_fixture("eq13_15");
    EXPECT_TRUE(sensitivity_probe(e13, gate_by_label(e13, "Ua"), 1, {}).dependent);
}

TEST(sensitivity_table, matches_oracle_differences) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; trial++) {
        size_t n = 1 + rng() % 4;
        Circuit c = random_circuit(n, 1 + rng() % 10, rng);
        ProbeConfig cfg;
        cfg.samples = 2;
        cfg.seed = trial;
        auto points = probe_points(c, cfg);
        SensitivityTable t = sensitivity_table(c, cfg);
        for (GateIndex g : c.unitary_ids()) {
            for (Qubit k = 0; k < n; k++) {
                double expected = 0;
                for (const auto &pt : points) {
                    for (int param = 0; param < 3; param++) {
                        expected = std::max(expected, std::abs(oracle_gradient(c, pt, g, param, k, cfg.eps)));
                    }
                }
                ASSERT_NEAR(t.at(k, g), expected, 1e-9);
            }
        }
    }
}

TEST(sensitivity_table, determinism_across_jobs) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 5; trial++) {
        Circuit c = random_circuit(5, 20, rng);
        ProbeConfig cfg;
        auto one = sensitivity_table(c, cfg, 1);
        for (size_t jobs : {2, 4}) {
            auto many = sensitivity_table(c, cfg, jobs);
            ASSERT_EQ(one.gates, many.gates);
            ASSERT_EQ(one.max_gradient, many.max_gradient);
        }
        ASSERT_EQ(empirical_picture(c, cfg, 1), empirical_picture(c, cfg, 3));
    }
}

TEST(sensitivity_table, step_halving_is_second_order) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 5; trial++) {
        Circuit c = random_circuit(3, 8, rng);
        if (c.unitary_ids().empty()) {
            continue;
        }
        auto points = probe_points(c, {});
        auto coarse = sensitivity_table(c, points, 1e-3);
        auto fine = sensitivity_table(c, points, 5e-4);
        for (size_t k = 0; k < coarse.num_qubits; k++) {
            for (size_t pos = 0; pos < coarse.gates.size(); pos++) {
                // Gradients of p(|0>) are bounded by 1, and so are the third
                // derivatives, so the error term eps^2/6 is below 2e-7.
                ASSERT_NEAR(coarse.max_gradient[k][pos], fine.max_gradient[k][pos], 3e-7);
            }
        }
    }
}

TEST(empirical_picture, fixtures) {
    ProbeConfig cfg;
    auto names = [](const DependencePicture &p, Qubit q) {
        std::set<std::string> out;
        for (GateIndex g : p.by_qubit.at(q)) {
            out.insert(p.unitary_name(g));
        }
        return out;
    };
    DependencePicture fig1 = empirical_picture(build_fixture("fig1"), cfg);
    EXPECT_EQ(fig1.provenance, Provenance::Empirical);
    EXPECT_EQ(names(fig1, 0), (std::set<std::string>{"U1"}));
    EXPECT_EQ(names(fig1, 2), (std::set<std::string>{"U1", "U2"}));
    EXPECT_TRUE(is_transpose_consistent(fig1));

    DependencePicture e16 = empirical_picture(build_fixture("eq16_18"), cfg);
    EXPECT_EQ(names(e16, 1), (std::set<std::string>{"Ub", "U2"}));

    DependencePicture ghz = empirical_picture(build_fixture("ghz"), cfg);
    EXPECT_EQ(ghz.by_unitary.at(0), (std::set<Qubit>{0, 1, 2}));
}

TEST(empirical_picture, capacity_error_propagates) {
    Circuit c(6);
    c.add_u3(0, {1, 2, 3});
    EXPECT_THROW(empirical_picture(c, {}, 1, 5), CapacityError);
}

TEST(parallel_for, covers_every_index_and_rethrows) {
    std::vector<int> hits(100, 0);
    detail::parallel_for(hits.size(), 4, [&](size_t i) { hits[i]++; });
    EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 100);
    EXPECT_THROW(detail::parallel_for(10, 3,
                                      [](size_t i) {
                                          if (i == 7) {
                                              throw std::runtime_error("boom");
                                          }
                                      }),
                 std::runtime_error);
}
