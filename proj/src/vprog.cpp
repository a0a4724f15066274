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

#include "ringwalk/vprog.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace ringwalk::vprog {

namespace {

void rotate_up(std::vector<std::uint8_t>& v) {
    if (v.size() > 1) std::rotate(v.begin(), v.begin() + 1, v.end());
}

// (x0 .. x_{n-1}) -> (x1, ..., x_{n-2}, x0, x_{n-1}): cycle all but the last.
void rotate_all_but_last(std::vector<int>& v) {
    if (v.size() > 2) std::rotate(v.begin(), v.begin() + 1, v.end() - 1);
}

void rotate_full(std::vector<int>& v) {
    if (v.size() > 1) std::rotate(v.begin(), v.begin() + 1, v.end());
}

int slot_of(const std::vector<int>& perm, int wire) {
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (perm[i] == wire) return i;
    throw IntegrityError("wire missing from slot permutation");
}

}  // namespace

void VProgram::validate() const {
    if (n < 2) throw DomainError("program needs at least two data qubits");
    if (swap_bits.size() != hadamard_bits.size())
        throw DomainError("swap and Hadamard program lengths differ");
    if (iterations != static_cast<int>(swap_bits.size()))
        throw DomainError("iterations must equal the program length");
    for (auto b : swap_bits)
        if (b > 1) throw DomainError("swap program holds a non-bit");
    for (auto b : hadamard_bits)
        if (b > 1) throw DomainError("Hadamard program holds a non-bit");
    if (static_cast<int>(slot_to_wire.size()) != n) throw DomainError("slot placement size mismatch");
    std::vector<bool> hit(n, false);
    for (int w : slot_to_wire) {
        if (w < 0 || w >= n || hit[w]) throw DomainError("slot placement is not a permutation");
        hit[w] = true;
    }
}

VState initial_vstate(const VProgram& prog, const qcore::Statevector& wire_input) {
    prog.validate();
    if (wire_input.dim() != (1 << prog.n)) throw DomainError("input state dimension mismatch");
    VState st;
    st.cursor = Cursor::Gate;
    st.swap_program.assign(1, 1);
    st.swap_program.insert(st.swap_program.end(), prog.swap_bits.begin(), prog.swap_bits.end());
    st.hadamard_program = prog.hadamard_bits;
    st.data = qcore::permute_qubits(wire_input, prog.slot_to_wire);
    st.slot_to_label.resize(prog.n);
    std::iota(st.slot_to_label.begin(), st.slot_to_label.end(), 0);
    return st;
}

VState iterate_v(const VState& state) {
    if (state.swap_program.empty() || state.hadamard_program.empty())
        throw DomainError("iterate_v needs non-empty program registers");
    VState st = state;
    const int n = static_cast<int>(st.slot_to_label.size());

    // Phase I: swap program cycles up.
    rotate_up(st.swap_program);

    // Phase II: lower-most swap qubit 0 cycles the cursor.
    if (st.swap_program.back() == 0) st.cursor = cycle_cursor(st.cursor);

    // Phase III: top data qubit moves to the penultimate slot.
    if (n >= 3) {
        qcore::Gate sigma{qcore::GateKind::SigmaCascade, {}};
        for (int w = 0; w < n - 1; ++w) sigma.wires.push_back(w);
        st.data = qcore::apply_gate(st.data, sigma);
        rotate_all_but_last(st.slot_to_label);
    }

    // Phase IV: cursor-dependent action on the last two slots.
    if (st.cursor == Cursor::Cycle) {
        st.data = qcore::apply_gate(st.data, {qcore::GateKind::Swap, {n - 2, n - 1}});
        std::swap(st.slot_to_label[n - 2], st.slot_to_label[n - 1]);
    } else if (st.cursor == Cursor::Gate) {
        st.data = qcore::apply_gate(st.data, {qcore::GateKind::ControlledS, {n - 2, n - 1}});
        if (st.hadamard_program.front() == 1)
            st.data = qcore::apply_gate(st.data, {qcore::GateKind::H, {n - 1}});
    }

    // Phase V: Hadamard program cycles up.
    rotate_up(st.hadamard_program);
    return st;
}

VProgram compile(const qcore::Circuit& circuit) {
    circuit.validate();
    const int n = circuit.n;
    if (n < 2) throw DomainError("compile needs at least two data qubits");

    // One application per Lambda(S); four per H (the Lambda(S)^3 (IxH)Lambda(S) trick).
    struct App {
        int p;  // routed to the penultimate slot
        int q;  // routed to the last slot
        bool hadamard;
    };
    std::vector<App> apps;
    for (const auto& g : circuit.gates) {
        if (g.kind == qcore::GateKind::ControlledS) {
            apps.push_back({g.wires[0], g.wires[1], false});
        } else {
            apps.push_back({-1, g.wires[0], false});
            apps.push_back({-1, g.wires[0], false});
            apps.push_back({-1, g.wires[0], false});
            apps.push_back({-1, g.wires[0], true});
        }
    }

    VProgram prog;
    prog.n = n;
    prog.slot_to_wire.resize(n);
    std::iota(prog.slot_to_wire.begin(), prog.slot_to_wire.end(), 0);
    if (apps.empty()) return prog;  // identity: zero iterations, empty programs

    // Partner for an H expansion: the current lower neighbour of the target
    // at expansion start (lowest other wire when the expansion opens the
    // program and no arrangement exists yet).
    auto resolve_partner = [&](std::size_t app_index, const std::vector<int>* perm) {
        const int q = apps[app_index].q;
        int p;
        if (perm == nullptr) {
            p = (q == 0) ? 1 : 0;
        } else {
            p = (*perm)[(slot_of(*perm, q) + 1) % n];
        }
        for (std::size_t k = app_index; k < app_index + 4; ++k) apps[k].p = p;
    };

    if (apps[0].p < 0) resolve_partner(0, nullptr);

    // Initial placement: first application's pair goes to the outer slots,
    // remaining wires fill the middle in ascending order.
    {
        std::vector<int> middle;
        for (int w = 0; w < n; ++w)
            if (w != apps[0].p && w != apps[0].q) middle.push_back(w);
        prog.slot_to_wire.clear();
        prog.slot_to_wire.push_back(apps[0].p);
        prog.slot_to_wire.insert(prog.slot_to_wire.end(), middle.begin(), middle.end());
        prog.slot_to_wire.push_back(apps[0].q);
    }

    std::vector<int> perm = prog.slot_to_wire;  // slot -> wire
    std::vector<std::uint8_t> consumed;         // cursor-control bits, iteration order
    std::vector<int> gate_iterations;           // 1-based iteration index of each firing

    // Iteration 1 rides the initial Gate cursor over the appended |1>.
    consumed.push_back(1);
    rotate_all_but_last(perm);
    if (perm[n - 2] != apps[0].p || perm[n - 1] != apps[0].q)
        throw IntegrityError("compile: first application misrouted");
    gate_iterations.push_back(1);

    for (std::size_t g = 1; g < apps.size(); ++g) {
        if (apps[g].p < 0) resolve_partner(g, &perm);
        const int pw = apps[g].p, qw = apps[g].q;

        const int r1 = slot_of(perm, qw);
        consumed.push_back(0);  // behavior 4: Gate -> Cycle, full cycle
        rotate_full(perm);
        for (int k = 0; k < r1; ++k) {  // behavior 1: hold Cycle
            consumed.push_back(1);
            rotate_full(perm);
        }
        if (perm[n - 1] != qw) throw IntegrityError("compile: target misrouted");

        const int r2 = (slot_of(perm, pw) - 1 + (n - 1)) % (n - 1);
        consumed.push_back(0);  // behavior 2 head: Cycle -> HoldCycle
        rotate_all_but_last(perm);
        for (int k = 0; k < r2; ++k) {  // behavior 2 tail: hold HoldCycle
            consumed.push_back(1);
            rotate_all_but_last(perm);
        }
        if (perm[0] != pw) throw IntegrityError("compile: partner misrouted");

        consumed.push_back(0);  // behavior 3: HoldCycle -> Gate, gate fires
        rotate_all_but_last(perm);
        if (perm[n - 2] != pw || perm[n - 1] != qw) throw IntegrityError("compile: gate pair misrouted");
        gate_iterations.push_back(static_cast<int>(consumed.size()));
    }

    prog.iterations = static_cast<int>(consumed.size());
    prog.swap_bits.assign(consumed.begin() + 1, consumed.end());
    prog.swap_bits.push_back(1);  // stop marker; also the penultimate ring swap bit
    prog.hadamard_bits.assign(prog.iterations, 0);
    for (std::size_t g = 0; g < apps.size(); ++g)
        if (apps[g].hadamard) prog.hadamard_bits[gate_iterations[g] - 1] = 1;

    const int bound = 4 * n * (circuit.t_controlled_s() + 2 * circuit.t_hadamard());
    if (prog.iterations > bound) throw IntegrityError("compile: program exceeds the size bound");
    prog.validate();
    return prog;
}

qcore::Statevector simulate_program(const VProgram& prog, const qcore::Statevector& input) {
    VState st = initial_vstate(prog, input);
    for (int it = 0; it < prog.iterations; ++it) st = iterate_v(st);

    // Slot s carries label slot_to_label[s], which started life at slot
    // slot_to_label[s] holding wire slot_to_wire[slot_to_label[s]].
    const int n = prog.n;
    std::vector<int> source_of(n);
    for (int s = 0; s < n; ++s) source_of[prog.slot_to_wire[st.slot_to_label[s]]] = s;
    qcore::Statevector out = qcore::permute_qubits(st.data, source_of);
    out.basis_label = qcore::BasisLabel::DataRegister;
    return out;
}

void save_program(const VProgram& prog, std::ostream& out) {
    prog.validate();
    out << "ringwalk-program v1\n";
    out << "qubits " << prog.n << "\n";
    out << "iterations " << prog.iterations << "\n";
    out << "swap ";
    for (auto b : prog.swap_bits) out << int(b);
    out << "\nhadamard ";
    for (auto b : prog.hadamard_bits) out << int(b);
    out << "\nslots";
    for (int w : prog.slot_to_wire) out << ' ' << w;
    out << "\n";
}

VProgram load_program(std::istream& in) {
    VProgram prog;
    std::string line;
    if (!std::getline(in, line) || line != "ringwalk-program v1")
        throw ParseError("not a ringwalk program file", 0, 0);
    auto bits = [](const std::string& s, int lineno) {
        std::vector<std::uint8_t> v;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1') throw ParseError("bit string expects 0/1", lineno, int(i));
            v.push_back(s[i] == '1');
        }
        return v;
    };
    int lineno = 0;
    bool have_swap = false, have_had = false, have_slots = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "qubits") {
            if (!(ss >> prog.n)) throw ParseError("qubits expects an integer", lineno, 0);
        } else if (key == "iterations") {
            if (!(ss >> prog.iterations)) throw ParseError("iterations expects an integer", lineno, 0);
        } else if (key == "swap") {
            std::string s;
            ss >> s;
            prog.swap_bits = bits(s, lineno);
            have_swap = true;
        } else if (key == "hadamard") {
            std::string s;
            ss >> s;
            prog.hadamard_bits = bits(s, lineno);
            have_had = true;
        } else if (key == "slots") {
            int w;
            prog.slot_to_wire.clear();
            while (ss >> w) prog.slot_to_wire.push_back(w);
            have_slots = true;
        } else {
            throw ParseError("unknown program key '" + key + "'", lineno, 0);
        }
    }
    if (!have_swap || !have_had || !have_slots)
        throw ParseError("program file missing a required section");
    prog.validate();
    return prog;
}

}  // namespace ringwalk::vprog
