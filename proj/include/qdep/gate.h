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

#ifndef QDEP_GATE_H
#define QDEP_GATE_H

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdep {

using Qubit = uint32_t;

/// Index of a gate instance in circuit order. Rendered as "g<index>".
using GateIndex = size_t;

template <typename Real>
using Matrix2c = Eigen::Matrix<std::complex<Real>, 2, 2>;

/// Canonical chart of the 1-qubit unitary family.
///
/// The induced matrix is
///     [[cos(t/2),            -e^{i lam} sin(t/2)],
///      [e^{i phi} sin(t/2),  e^{i(phi+lam)} cos(t/2)]]
/// which is the (a1, a2, alpha) form with a1 = cos(t/2), a2 = e^{i phi} sin(t/2)
/// and alpha = phi + lam + pi.
struct GateParams {
    double theta = 0;
    double phi = 0;
    double lam = 0;

    bool operator==(const GateParams &) const = default;

    bool is_finite() const {
        return std::isfinite(theta) && std::isfinite(phi) && std::isfinite(lam);
    }
    double &operator[](size_t k) {
        return k == 0 ? theta : (k == 1 ? phi : lam);
    }
    double operator[](size_t k) const {
        return k == 0 ? theta : (k == 1 ? phi : lam);
    }

    /// Amplitude of |0> after acting on |0>.
    std::complex<double> a1() const {
        return {std::cos(theta / 2), 0};
    }
    /// Amplitude of |1> after acting on |0>.
    std::complex<double> a2() const {
        return std::polar(std::sin(theta / 2), phi);
    }
    double alpha() const {
        return phi + lam + M_PI;
    }
};

enum class GateKind : uint8_t { U3, X, RY, CX };

std::string_view gate_kind_name(GateKind kind);

inline bool is_single_qubit(GateKind kind) {
    return kind != GateKind::CX;
}

/// One gate occurrence. Every 1-qubit kind carries a point in the U3 family
/// (X and RY are stored with their fixed/derived parameters) so each
/// occurrence can be perturbed independently.
struct GateInstance {
    GateIndex id = 0;
    GateKind kind = GateKind::U3;
    std::vector<Qubit> qubits;
    GateParams params;
    std::optional<std::string> label;

    bool operator==(const GateInstance &) const = default;

    bool is_unitary() const {
        return is_single_qubit(kind);
    }
    Qubit target() const {
        return qubits.back();
    }
    Qubit control() const {
        return qubits.front();
    }
    /// Label if present, otherwise "g<id>".
    std::string display_name() const;
};

std::string gate_token(GateIndex id);

GateParams x_params();
GateParams ry_params(double theta);

/// Matrix of a 1-qubit unitary in the canonical chart.
template <typename Real = double>
Matrix2c<Real> u3_matrix(const GateParams &p) {
    using C = std::complex<Real>;
    Real c = std::cos(Real(p.theta) / 2);
    Real s = std::sin(Real(p.theta) / 2);
    Matrix2c<Real> m;
    m(0, 0) = C(c, 0);
    m(0, 1) = -std::polar(s, Real(p.lam));
    m(1, 0) = std::polar(s, Real(p.phi));
    m(1, 1) = std::polar(c, Real(p.phi + p.lam));
    return m;
}

/// Throws std::logic_error when called on a CX instance.
template <typename Real = double>
Matrix2c<Real> gate_matrix(const GateInstance &g) {
    if (!g.is_unitary()) {
        throw std::logic_error("gate_matrix called on a two-qubit gate (" + gate_token(g.id) + ")");
    }
    return u3_matrix<Real>(g.params);
}

}  // namespace qdep

#endif
