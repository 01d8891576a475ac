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

#ifndef QDEP_STATEVECTOR_H
#define QDEP_STATEVECTOR_H

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdep/circuit.h"
#include "qdep/gate.h"

namespace qdep {

/// Default qubit-count guard for dense simulation (2^24 amplitudes).
inline constexpr size_t kDefaultMaxQubits = 24;

class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Dense state over n qubits. Bit k of an amplitude index is qubit k's
/// basis value (qubit 0 is the least significant bit).
template <typename Real>
class BasicStatevector {
   public:
    using Scalar = std::complex<Real>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    /// |0...0>. Throws CapacityError when num_qubits > max_qubits.
    explicit BasicStatevector(size_t num_qubits, size_t max_qubits = kDefaultMaxQubits) : num_qubits_(num_qubits) {
        if (num_qubits == 0) {
            throw std::invalid_argument("statevector needs at least one qubit");
        }
        if (num_qubits > max_qubits) {
            throw CapacityError("dense simulation of " + std::to_string(num_qubits) +
                                " qubits exceeds the capacity guard of " + std::to_string(max_qubits));
        }
        amps_ = Vector::Zero(Eigen::Index(1) << num_qubits);
        amps_(0) = Scalar(1);
    }

    BasicStatevector(size_t num_qubits, Vector amplitudes) : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
        if (amps_.size() != (Eigen::Index(1) << num_qubits)) {
            throw std::invalid_argument("amplitude vector length must be 2^n");
        }
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    const Vector &amplitudes() const {
        return amps_;
    }
    Eigen::Index dimension() const {
        return amps_.size();
    }

    void apply_1q(const Matrix2c<Real> &m, Qubit q) {
        check(q);
        const Eigen::Index stride = Eigen::Index(1) << q;
        const Eigen::Index dim = amps_.size();
        const Scalar m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
            for (Eigen::Index i = base; i < base + stride; i++) {
                Scalar a = amps_(i);
                Scalar b = amps_(i + stride);
                amps_(i) = m00 * a + m01 * b;
                amps_(i + stride) = m10 * a + m11 * b;
            }
        }
    }

    void apply_cx(Qubit control, Qubit target) {
        check(control);
        check(target);
        if (control == target) {
            throw std::invalid_argument("cx control and target must differ");
        }
        const Eigen::Index cbit = Eigen::Index(1) << control;
        const Eigen::Index tbit = Eigen::Index(1) << target;
        for (Eigen::Index i = 0; i < amps_.size(); i++) {
            if ((i & cbit) && !(i & tbit)) {
                std::swap(amps_(i), amps_(i | tbit));
            }
        }
    }

    void apply(const GateInstance &g) {
        if (g.is_unitary()) {
            apply_1q(u3_matrix<Real>(g.params), g.target());
        } else {
            apply_cx(g.control(), g.target());
        }
    }

    Real norm_squared() const {
        return amps_.squaredNorm();
    }

   private:
    void check(Qubit q) const {
        if (q >= num_qubits_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
        }
    }

    size_t num_qubits_;
    Vector amps_;
};

using Statevector = BasicStatevector<double>;

/// |0...0> evolved through every gate of `c` in order.
template <typename Real = double>
BasicStatevector<Real> simulate(const Circuit &c, size_t max_qubits = kDefaultMaxQubits) {
    BasicStatevector<Real> s(c.num_qubits(), max_qubits);
    for (const auto &g : c.gates()) {
        s.apply(g);
    }
    return s;
}

template <typename Real>
Real marginal_prob0(const BasicStatevector<Real> &s, Qubit k) {
    if (k >= s.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(k) + " out of range");
    }
    const Eigen::Index bit = Eigen::Index(1) << k;
    Real p = 0;
    for (Eigen::Index i = 0; i < s.dimension(); i++) {
        if (!(i & bit)) {
            p += std::norm(s.amplitudes()(i));
        }
    }
    return p;
}

/// p(|0>_k) for every qubit k in one pass.
template <typename Real>
std::vector<Real> marginals_prob0(const BasicStatevector<Real> &s) {
    std::vector<Real> p(s.num_qubits(), Real(0));
    const auto &a = s.amplitudes();
    for (Eigen::Index i = 0; i < s.dimension(); i++) {
        Real w = std::norm(a(i));
        if (w == Real(0)) {
            continue;
        }
        for (size_t k = 0; k < p.size(); k++) {
            if (!((i >> k) & 1)) {
                p[k] += w;
            }
        }
    }
    return p;
}

/// Joint computational-basis distribution of two qubits.
template <typename Real>
struct JointDistribution {
    /// probs[b_i + 2 * b_j]
    std::array<Real, 4> probs{};

    Real operator()(int b_i, int b_j) const {
        return probs[b_i + 2 * b_j];
    }
    Real marginal_i(int b) const {
        return (*this)(b, 0) + (*this)(b, 1);
    }
    Real marginal_j(int b) const {
        return (*this)(0, b) + (*this)(1, b);
    }
    /// max over outcomes of |p(b_i, b_j) - p(b_i) p(b_j)|.
    Real factorization_gap() const {
        Real gap = 0;
        for (int bi = 0; bi < 2; bi++) {
            for (int bj = 0; bj < 2; bj++) {
                gap = std::max(gap, std::abs((*this)(bi, bj) - marginal_i(bi) * marginal_j(bj)));
            }
        }
        return gap;
    }
};

template <typename Real>
JointDistribution<Real> joint_distribution(const BasicStatevector<Real> &s, Qubit i, Qubit j) {
    if (i == j) {
        throw std::invalid_argument("joint_distribution needs two distinct qubits");
    }
    if (i >= s.num_qubits() || j >= s.num_qubits()) {
        throw std::out_of_range("qubit out of range");
    }
    JointDistribution<Real> d;
    for (Eigen::Index x = 0; x < s.dimension(); x++) {
        d.probs[((x >> i) & 1) + 2 * ((x >> j) & 1)] += std::norm(s.amplitudes()(x));
    }
    return d;
}

}  // namespace qdep

#endif
