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

#ifndef QDEP_DENSITY_MATRIX_H
#define QDEP_DENSITY_MATRIX_H

#include <Eigen/Dense>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qdep/statevector.h"

namespace qdep {

/// Reduced state over m retained qubits. Bit p of a row/column index is the
/// basis value of the p-th retained qubit.
template <typename Real>
struct BasicDensityMatrix {
    using Scalar = std::complex<Real>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    std::vector<Qubit> qubits;
    Matrix entries;

    size_t num_qubits() const {
        return qubits.size();
    }
    Scalar trace() const {
        return entries.trace();
    }
    Real purity() const {
        return (entries * entries).trace().real();
    }
    Real hermiticity_error() const {
        return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    }
    Eigen::Matrix<Real, Eigen::Dynamic, 1> eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(entries, Eigen::EigenvaluesOnly);
        return solver.eigenvalues();
    }
    bool is_valid(Real tol = Real(1e-10), Real psd_tol = Real(1e-9)) const {
        return hermiticity_error() < tol && std::abs(trace() - Scalar(1)) < tol && eigenvalues().minCoeff() > -psd_tol;
    }
};

using DensityMatrix = BasicDensityMatrix<double>;

/// Traces out every qubit not in `keep`. `keep[p]` becomes bit p of the
/// reduced index. Throws on an empty, repeated, or out-of-range `keep`.
template <typename Real>
BasicDensityMatrix<Real> partial_trace(const BasicStatevector<Real> &s, const std::vector<Qubit> &keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs at least one retained qubit");
    }
    std::set<Qubit> unique(keep.begin(), keep.end());
    if (unique.size() != keep.size()) {
        throw std::invalid_argument("partial_trace: repeated qubit in keep");
    }
    const size_t n = s.num_qubits();
    std::vector<Qubit> rest;
    for (Qubit q = 0; q < n; q++) {
        if (!unique.contains(q)) {
            rest.push_back(q);
        }
    }
    if (*unique.rbegin() >= n) {
        throw std::out_of_range("partial_trace: qubit out of range");
    }
    const Eigen::Index dk = Eigen::Index(1) << keep.size();
    const Eigen::Index dr = Eigen::Index(1) << rest.size();
    typename BasicDensityMatrix<Real>::Matrix psi(dk, dr);
    for (Eigen::Index a = 0; a < dk; a++) {
        Eigen::Index base = 0;
        for (size_t p = 0; p < keep.size(); p++) {
            if ((a >> p) & 1) {
                base |= Eigen::Index(1) << keep[p];
            }
        }
        for (Eigen::Index b = 0; b < dr; b++) {
            Eigen::Index idx = base;
            for (size_t p = 0; p < rest.size(); p++) {
                if ((b >> p) & 1) {
                    idx |= Eigen::Index(1) << rest[p];
                }
            }
            psi(a, b) = s.amplitudes()(idx);
        }
    }
    BasicDensityMatrix<Real> rho;
    rho.qubits = keep;
    rho.entries = psi * psi.adjoint();
    return rho;
}

/// Partial transpose over the retained-qubit positions in `split`.
template <typename Real>
typename BasicDensityMatrix<Real>::Matrix partial_transpose(const BasicDensityMatrix<Real> &rho,
                                                            const std::set<size_t> &split) {
    const size_t m = rho.num_qubits();
    if (split.empty() || split.size() >= m || *split.rbegin() >= m) {
        throw std::invalid_argument("partial transpose needs a nontrivial bipartition of the retained qubits");
    }
    Eigen::Index mask = 0;
    for (size_t p : split) {
        mask |= Eigen::Index(1) << p;
    }
    const Eigen::Index d = rho.entries.rows();
    typename BasicDensityMatrix<Real>::Matrix out(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            Eigen::Index i2 = (i & ~mask) | (j & mask);
            Eigen::Index j2 = (j & ~mask) | (i & mask);
            out(i2, j2) = rho.entries(i, j);
        }
    }
    return out;
}

/// Sum of |negative eigenvalues| of the partial transpose. Zero for
/// separable two-qubit states; positive certifies entanglement across
/// the bipartition.
template <typename Real>
Real ppt_negativity(const BasicDensityMatrix<Real> &rho, const std::set<size_t> &split) {
    auto pt = partial_transpose(rho, split);
    Eigen::SelfAdjointEigenSolver<typename BasicDensityMatrix<Real>::Matrix> solver(pt, Eigen::EigenvaluesOnly);
    Real neg = 0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        if (solver.eigenvalues()(k) < 0) {
            neg -= solver.eigenvalues()(k);
        }
    }
    return neg;
}

}  // namespace qdep

#endif
