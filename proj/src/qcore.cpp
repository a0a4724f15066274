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

#include "ringwalk/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ringwalk::qcore {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

int wires_needed(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::S:
            return 1;
        case GateKind::ControlledS:
        case GateKind::Swap:
        case GateKind::ControlledH:
            return 2;
        case GateKind::SigmaCascade:
            return -1;  // m >= 2
    }
    return -1;
}

void check_wires(const Gate& gate, int n) {
    int need = wires_needed(gate.kind);
    if (need > 0 && static_cast<int>(gate.wires.size()) != need)
        throw DomainError("gate has wrong wire count");
    if (gate.kind == GateKind::SigmaCascade && gate.wires.size() < 2)
        throw DomainError("sigma cascade needs at least two wires");
    std::set<int> seen;
    for (int w : gate.wires) {
        if (w < 0 || w >= n) throw DomainError("wire index out of range");
        if (!seen.insert(w).second) throw DomainError("duplicate wire index");
    }
}

inline int bit_pos(int n, int wire) { return n - 1 - wire; }

void apply_single(std::vector<Amplitude>& a, int n, int wire, const Amplitude m00,
                  const Amplitude m01, const Amplitude m10, const Amplitude m11) {
    const std::uint64_t mask = std::uint64_t{1} << bit_pos(n, wire);
    const std::uint64_t dim = a.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const Amplitude lo = a[i], hi = a[i | mask];
        a[i] = m00 * lo + m01 * hi;
        a[i | mask] = m10 * lo + m11 * hi;
    }
}

}  // namespace

int Statevector::num_qubits() const {
    int d = dim();
    if (d <= 0 || (d & (d - 1)) != 0) throw DomainError("statevector dimension is not a power of two");
    int n = 0;
    while ((1 << n) < d) ++n;
    return n;
}

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

Statevector Statevector::computational_basis(int n_qubits, std::uint64_t index) {
    if (n_qubits < 1 || n_qubits > 24) throw DomainError("unsupported qubit count");
    Statevector s;
    s.amps.assign(std::uint64_t{1} << n_qubits, Amplitude{0.0, 0.0});
    if (index >= s.amps.size()) throw DomainError("basis index out of range");
    s.amps[index] = Amplitude{1.0, 0.0};
    return s;
}

int Circuit::t_hadamard() const {
    int c = 0;
    for (const auto& g : gates) c += (g.kind == GateKind::H);
    return c;
}

int Circuit::t_controlled_s() const {
    int c = 0;
    for (const auto& g : gates) c += (g.kind == GateKind::ControlledS);
    return c;
}

void Circuit::validate() const {
    if (n < 1) throw DomainError("circuit needs at least one qubit");
    for (const auto& g : gates) {
        if (g.kind != GateKind::H && g.kind != GateKind::ControlledS)
            throw DomainError("circuit gate outside the {H, Lambda(S)} basis");
        check_wires(g, n);
    }
}

Statevector apply_gate(const Statevector& state, const Gate& gate) {
    if (state.basis_label != BasisLabel::DataRegister)
        throw DomainError("apply_gate expects a data-register state");
    const int n = state.num_qubits();
    check_wires(gate, n);

    Statevector out = state;
    auto& a = out.amps;
    const Amplitude I{0.0, 1.0};

    switch (gate.kind) {
        case GateKind::X:
            apply_single(a, n, gate.wires[0], 0.0, 1.0, 1.0, 0.0);
            break;
        case GateKind::H:
            apply_single(a, n, gate.wires[0], kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
            break;
        case GateKind::S:
            apply_single(a, n, gate.wires[0], 1.0, 0.0, 0.0, I);
            break;
        case GateKind::ControlledS: {
            const std::uint64_t m =
                (std::uint64_t{1} << bit_pos(n, gate.wires[0])) | (std::uint64_t{1} << bit_pos(n, gate.wires[1]));
            for (std::uint64_t i = 0; i < a.size(); ++i)
                if ((i & m) == m) a[i] *= I;
            break;
        }
        case GateKind::Swap: {
            const std::uint64_t m0 = std::uint64_t{1} << bit_pos(n, gate.wires[0]);
            const std::uint64_t m1 = std::uint64_t{1} << bit_pos(n, gate.wires[1]);
            for (std::uint64_t i = 0; i < a.size(); ++i) {
                const bool b0 = i & m0, b1 = i & m1;
                if (b0 && !b1) std::swap(a[i], a[(i ^ m0) | m1]);
            }
            break;
        }
        case GateKind::ControlledH: {
            const std::uint64_t c = std::uint64_t{1} << bit_pos(n, gate.wires[0]);
            const std::uint64_t t = std::uint64_t{1} << bit_pos(n, gate.wires[1]);
            for (std::uint64_t i = 0; i < a.size(); ++i) {
                if (!(i & c) || (i & t)) continue;
                const Amplitude lo = a[i], hi = a[i | t];
                a[i] = kInvSqrt2 * (lo + hi);
                a[i | t] = kInvSqrt2 * (lo - hi);
            }
            break;
        }
        case GateKind::SigmaCascade: {
            // Contents of wire w1 travel to wm, everything else moves up one.
            std::vector<Amplitude> dst(a.size(), Amplitude{0.0, 0.0});
            const auto& w = gate.wires;
            const int m = static_cast<int>(w.size());
            for (std::uint64_t i = 0; i < a.size(); ++i) {
                std::uint64_t j = i;
                for (int k = 0; k < m; ++k) {
                    const std::uint64_t mk = std::uint64_t{1} << bit_pos(n, w[k]);
                    j &= ~mk;
                }
                for (int k = 0; k < m; ++k) {
                    const int src = w[(k + 1) % m];  // dst w[k] <- src w[k+1]; w[m-1] <- w[0]
                    if (i & (std::uint64_t{1} << bit_pos(n, src)))
                        j |= std::uint64_t{1} << bit_pos(n, w[k]);
                }
                dst[j] = a[i];
            }
            a = std::move(dst);
            break;
        }
    }
    return out;
}

Statevector permute_qubits(const Statevector& state, const std::vector<int>& source_of) {
    const int n = state.num_qubits();
    if (static_cast<int>(source_of.size()) != n) throw DomainError("permutation size mismatch");
    std::vector<bool> hit(n, false);
    for (int s : source_of) {
        if (s < 0 || s >= n || hit[s]) throw DomainError("source_of is not a permutation");
        hit[s] = true;
    }
    Statevector out = state;
    std::fill(out.amps.begin(), out.amps.end(), Amplitude{0.0, 0.0});
    for (std::uint64_t i = 0; i < state.amps.size(); ++i) {
        std::uint64_t j = 0;
        for (int d = 0; d < n; ++d)
            if (i & (std::uint64_t{1} << bit_pos(n, source_of[d]))) j |= std::uint64_t{1} << bit_pos(n, d);
        out.amps[j] = state.amps[i];
    }
    return out;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
    circuit.validate();
    if (circuit.n > 10) throw CapacityError("dense circuit unitary limited to n <= 10");
    const std::uint64_t dim = std::uint64_t{1} << circuit.n;
    Eigen::MatrixXcd u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Statevector v = Statevector::computational_basis(circuit.n, col);
        for (const auto& g : circuit.gates) v = apply_gate(v, g);
        for (std::uint64_t row = 0; row < dim; ++row) u(row, col) = v.amps[row];
    }
    return u;
}

Eigen::MatrixXcd gate_matrix(GateKind kind, int m) {
    Gate g{kind, {}};
    for (int k = 0; k < m; ++k) g.wires.push_back(k);
    const std::uint64_t dim = std::uint64_t{1} << m;
    Eigen::MatrixXcd u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Statevector v = apply_gate(Statevector::computational_basis(m, col), g);
        for (std::uint64_t row = 0; row < dim; ++row) u(row, col) = v.amps[row];
    }
    return u;
}

void self_test() {
    auto check = [](GateKind kind, int m) {
        Eigen::MatrixXcd u = gate_matrix(kind, m);
        Eigen::MatrixXcd res = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
        if (res.cwiseAbs().maxCoeff() > 1e-12) throw IntegrityError("gate matrix fails unitarity self-test");
    };
    check(GateKind::X, 1);
    check(GateKind::H, 1);
    check(GateKind::S, 1);
    check(GateKind::ControlledS, 2);
    check(GateKind::Swap, 2);
    check(GateKind::ControlledH, 2);
    for (int m = 2; m <= 4; ++m) check(GateKind::SigmaCascade, m);
}

}  // namespace ringwalk::qcore
