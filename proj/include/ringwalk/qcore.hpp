// Copyright 2026 The ringwalk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ringwalk/errors.hpp"

namespace ringwalk::qcore {

using Amplitude = std::complex<double>;

/// Which labelled basis a statevector lives in. The data register is the
/// 2^n computational basis with wire 0 as the most significant bit; the
/// walk line is the step basis of a trajectory.
enum class BasisLabel { DataRegister, WalkLine };

struct Statevector {
    std::vector<Amplitude> amps;
    BasisLabel basis_label = BasisLabel::DataRegister;

    int dim() const { return static_cast<int>(amps.size()); }
    int num_qubits() const;
    double norm() const;

    /// |index> on n qubits; wire 0 is the most significant bit of index.
    static Statevector computational_basis(int n_qubits, std::uint64_t index);
};

enum class GateKind { X, H, S, ControlledS, Swap, SigmaCascade, ControlledH };

struct Gate {
    GateKind kind;
    std::vector<int> wires;  // ordered, distinct
};

/// Circuit over the two-gate universal basis {H, Lambda(S)}.
struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    int t_hadamard() const;
    int t_controlled_s() const;
    int size() const { return static_cast<int>(gates.size()); }
    /// Throws DomainError unless every gate is H or ControlledS with valid wires.
    void validate() const;
};

/// Returns U_gate |state>. The input is left untouched.
Statevector apply_gate(const Statevector& state, const Gate& gate);

/// Cyclic shift of ordered cell contents: (x1, x2, ..., xm) -> (x2, ..., xm, x1),
/// the net effect of the nearest-neighbour swap cascade. m >= 2.
template <typename T>
std::vector<T> apply_sigma(std::vector<T> cells) {
    if (cells.size() < 2) throw DomainError("apply_sigma: need at least two cells");
    std::rotate(cells.begin(), cells.begin() + 1, cells.end());
    return cells;
}

/// Reorders qubits: output wire d carries what input wire source_of[d] carried.
Statevector permute_qubits(const Statevector& state, const std::vector<int>& source_of);

/// Dense unitary of a circuit, gates applied in list order. n <= 10.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// Dense matrix of a single gate kind on its own wires (m = wire count).
Eigen::MatrixXcd gate_matrix(GateKind kind, int m);

/// One-time sanity check: every gate kind's matrix is unitary to 1e-12.
/// Throws IntegrityError on failure.
void self_test();

}  // namespace ringwalk::qcore
