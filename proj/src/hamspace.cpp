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

#include "ringwalk/hamspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <ostream>

#include <Eigen/Dense>

#include "ringwalk/format.hpp"
#include "ringwalk/parallel.hpp"

namespace ringwalk::hamspace {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::complex<double> kI{0.0, 1.0};

// What one trajectory edge does to the data-site basis strings.
struct EdgeOp {
    enum class Kind { Identity, SwapCells, ControlledS, Hadamard } kind = Kind::Identity;
    int a = -1;  // data-site offsets
    int b = -1;
};

EdgeOp edge_op(const ring::RingConfiguration& from, const ring::RingConfiguration& to,
               const std::optional<rules::GateEvent>& event) {
    const auto& lay = from.layout;
    const int n = lay.data_len;
    if (event) {
        if (event->kind == rules::GateEvent::Kind::ControlledS)
            return {EdgeOp::Kind::ControlledS, n - 2, n - 1};
        return {EdgeOp::Kind::Hadamard, n - 1, -1};
    }
    int first = -1, second = -1;
    for (int d = 0; d < n; ++d) {
        if (from.cell[lay.data_begin() + d] != to.cell[lay.data_begin() + d]) {
            if (first < 0)
                first = d;
            else if (second < 0)
                second = d;
            else
                throw IntegrityError("edge changed more than two data cells");
        }
    }
    if (first < 0) return {EdgeOp::Kind::Identity, -1, -1};
    if (second != first + 1) throw IntegrityError("edge changed non-adjacent data cells");
    return {EdgeOp::Kind::SwapCells, first, second};
}

// Expands W|s> as a list of (s', amplitude). Bit d of s = data site d,
// site 0 most significant.
void apply_edge(const EdgeOp& op, int n, std::uint32_t s,
                std::vector<std::pair<std::uint32_t, std::complex<double>>>& out) {
    out.clear();
    const auto mask = [n](int d) { return std::uint32_t{1} << (n - 1 - d); };
    switch (op.kind) {
        case EdgeOp::Kind::Identity:
            out.emplace_back(s, 1.0);
            break;
        case EdgeOp::Kind::SwapCells: {
            const std::uint32_t ma = mask(op.a), mb = mask(op.b);
            const bool ba = s & ma, bb = s & mb;
            std::uint32_t t = s & ~(ma | mb);
            if (ba) t |= mb;
            if (bb) t |= ma;
            out.emplace_back(t, 1.0);
            break;
        }
        case EdgeOp::Kind::ControlledS: {
            const std::uint32_t m = mask(op.a) | mask(op.b);
            out.emplace_back(s, (s & m) == m ? kI : std::complex<double>{1.0});
            break;
        }
        case EdgeOp::Kind::Hadamard: {
            const std::uint32_t m = mask(op.a);
            if (s & m) {
                out.emplace_back(s & ~m, kInvSqrt2);
                out.emplace_back(s, -kInvSqrt2);
            } else {
                out.emplace_back(s, kInvSqrt2);
                out.emplace_back(s | m, kInvSqrt2);
            }
            break;
        }
    }
}

Eigen::MatrixXcd edge_matrix(const EdgeOp& op, int n) {
    const int dim = 1 << n;
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<std::pair<std::uint32_t, std::complex<double>>> img;
    for (int s = 0; s < dim; ++s) {
        apply_edge(op, n, static_cast<std::uint32_t>(s), img);
        for (const auto& [sp, amp] : img) w(sp, s) += amp;
    }
    return w;
}

}  // namespace

RestrictedHamiltonian build_restricted(const vprog::VProgram& prog, std::size_t basis_cap) {
    prog.validate();
    if (prog.n > 4) throw CapacityError("restricted Hamiltonian limited to n <= 4");

    RestrictedHamiltonian h;
    h.n = prog.n;
    h.trajectory = rules::enumerate_trajectory(prog);
    h.tbar = h.trajectory.tbar();
    const std::size_t nstrings = std::size_t{1} << h.n;
    h.dim = static_cast<std::size_t>(h.tbar + 1) * nstrings;
    if (h.dim > basis_cap) throw CapacityError("reachable basis exceeds the cap");

    const rules::RuleTable table = rules::RuleTable::build(h.trajectory.steps.front().layout);

    // Closure check: starting from every data string at t = 0, the edge
    // operators must reach every string at every step.
    std::vector<EdgeOp> ops(h.tbar);
    for (int t = 0; t < h.tbar; ++t)
        ops[t] = edge_op(h.trajectory.steps[t], h.trajectory.steps[t + 1], h.trajectory.events[t]);
    {
        std::vector<bool> reach(nstrings, true);  // all strings seeded at t = 0
        std::vector<std::pair<std::uint32_t, std::complex<double>>> img;
        for (int t = 0; t < h.tbar; ++t) {
            std::vector<bool> next(nstrings, false);
            for (std::uint32_t s = 0; s < nstrings; ++s) {
                if (!reach[s]) continue;
                apply_edge(ops[t], h.n, s, img);
                for (const auto& [sp, amp] : img)
                    if (std::abs(amp) > 0.0) next[sp] = true;
            }
            reach = std::move(next);
            for (std::uint32_t s = 0; s < nstrings; ++s)
                if (!reach[s]) throw IntegrityError("closure lost a data string");
        }
    }

    // Off-diagonal hops: <t+1, s'| g |t, s> plus the Hermitian partner.
    std::vector<std::pair<std::uint32_t, std::complex<double>>> img;
    for (int t = 0; t < h.tbar; ++t) {
        for (std::uint32_t s = 0; s < nstrings; ++s) {
            apply_edge(ops[t], h.n, s, img);
            for (const auto& [sp, amp] : img) {
                h.entries.push_back({h.index(t + 1, sp), h.index(t, s), amp});
                h.entries.push_back({h.index(t, s), h.index(t + 1, sp), std::conj(amp)});
            }
        }
    }
    // Diagonal projector terms: each match contributes 1/2 from g and 1/2
    // from g-dagger on every data string.
    for (int t = 0; t <= h.tbar; ++t) {
        const auto diags = table.matching_diagonals(h.trajectory.steps[t]);
        if (diags.empty()) continue;
        const double weight = static_cast<double>(diags.size());
        for (std::uint32_t s = 0; s < nstrings; ++s)
            h.entries.push_back({h.index(t, s), h.index(t, s), weight});
    }

    std::sort(h.entries.begin(), h.entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    // Merge duplicates (none expected, but keeps the export canonical).
    std::vector<SparseEntry> merged;
    for (const auto& e : h.entries) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
            merged.back().value += e.value;
        else
            merged.push_back(e);
    }
    h.entries = std::move(merged);

    // Hermiticity: every (r, c, v) needs its (c, r, conj v).
    for (const auto& e : h.entries) {
        SparseEntry probe{e.col, e.row, 0.0};
        auto it = std::lower_bound(h.entries.begin(), h.entries.end(), probe,
                                   [](const SparseEntry& a, const SparseEntry& b) {
                                       return a.row != b.row ? a.row < b.row : a.col < b.col;
                                   });
        if (it == h.entries.end() || it->row != e.col || it->col != e.row ||
            std::abs(it->value - std::conj(e.value)) != 0.0)
            throw IntegrityError("restricted Hamiltonian is not Hermitian");
    }
    return h;
}

void export_coordinate(const RestrictedHamiltonian& h, std::ostream& out) {
    for (const auto& e : h.entries)
        out << e.row << ' ' << e.col << ' ' << fmt12(e.value.real()) << ' ' << fmt12(e.value.imag())
            << '\n';
}

EquivalenceReport check_effective_equivalence(const vprog::VProgram& prog) {
    RestrictedHamiltonian h = build_restricted(prog);
    EquivalenceReport rep;
    rep.n = h.n;
    rep.tbar = h.tbar;
    rep.dim = h.dim;
    const int dim = 1 << h.n;

    // Accumulated edge unitaries U_t (site picture).
    std::vector<Eigen::MatrixXcd> u(h.tbar + 1);
    u[0] = Eigen::MatrixXcd::Identity(dim, dim);
    for (int t = 0; t < h.tbar; ++t) {
        const EdgeOp op =
            edge_op(h.trajectory.steps[t], h.trajectory.steps[t + 1], h.trajectory.events[t]);
        u[t + 1] = edge_matrix(op, h.n) * u[t];
    }

    // Bucket entries into (t_row, t_col) blocks.
    std::map<std::pair<int, int>, Eigen::MatrixXcd> blocks;
    for (const auto& e : h.entries) {
        const BasisState r = h.basis(e.row), c = h.basis(e.col);
        auto key = std::make_pair(r.t, c.t);
        auto it = blocks.find(key);
        if (it == blocks.end())
            it = blocks.emplace(key, Eigen::MatrixXcd::Zero(dim, dim)).first;
        it->second(r.data, c.data) += e.value;
    }

    auto note = [&](double dev, int tr, int tc) {
        if (dev > rep.max_deviation) {
            rep.max_deviation = dev;
            rep.worst_row_block = tr;
            rep.worst_col_block = tc;
        }
    };

    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& [key, block] : blocks) {
        const auto [tr, tc] = key;
        const Eigen::MatrixXcd rotated = u[tr].adjoint() * block * u[tc];
        double expected_hop = (tr == tc + 1) || (tc == tr + 1) ? 1.0 : 0.0;
        double expected_diag = (tr == tc && (tr == 0 || tr == h.tbar)) ? 1.0 : 0.0;
        if (expected_hop > 0.0 || expected_diag > 0.0)
            note((rotated - id).cwiseAbs().maxCoeff(), tr, tc);
        else
            note(rotated.cwiseAbs().maxCoeff(), tr, tc);
    }
    // Required blocks that never appeared count in full.
    auto require = [&](int tr, int tc) {
        if (!blocks.count({tr, tc})) note(1.0, tr, tc);
    };
    require(0, 0);
    require(h.tbar, h.tbar);
    for (int t = 0; t < h.tbar; ++t) {
        require(t + 1, t);
        require(t, t + 1);
    }
    rep.pass = rep.max_deviation <= 1e-10;
    return rep;
}

std::vector<std::uint8_t> PenaltyHamiltonian::desired_codes() const {
    std::vector<std::uint8_t> codes;
    codes.reserve(desired.size());
    for (const auto& p : desired) codes.push_back(static_cast<std::uint8_t>(pattern_code(p)));
    return codes;
}

int PenaltyHamiltonian::penalty(const std::vector<std::uint8_t>& codes) const {
    const int K = layout.ring_size();
    if (static_cast<int>(codes.size()) != K) throw DomainError("assignment size mismatch");
    const std::vector<std::uint8_t> want = desired_codes();
    int total = 0;
    for (int i = 0; i < K; ++i) {
        const int j = (i + 1) % K;
        if (i == anchor_site) {
            if (anchor_enabled && (codes[i] != want[i] || codes[j] != want[j])) ++total;
        } else {
            if (codes[j] == want[j] && codes[i] != want[i]) ++total;
        }
    }
    return total;
}

PenaltyHamiltonian build_hinit(const vprog::VProgram& prog, std::uint32_t data_input) {
    const ring::RingConfiguration start = ring::initial_configuration(prog);
    if (data_input >= (std::uint32_t{1} << prog.n)) throw DomainError("data input out of range");
    PenaltyHamiltonian ph;
    ph.layout = start.layout;
    ph.anchor_site = start.layout.swap_len - 2;
    const int K = start.layout.ring_size();
    ph.desired.resize(K);
    for (int i = 0; i < K; ++i) {
        SitePattern p;
        p.cursor = start.cursor[i];
        if (start.layout.region_of(i) == ring::Region::Data) {
            const int d = i - start.layout.data_begin();
            p.bit = (data_input >> (prog.n - 1 - d)) & 1;
        } else {
            p.bit = start.cell[i];
        }
        ph.desired[i] = p;
    }
    return ph;
}

KernelReport count_ground_configs(const PenaltyHamiltonian& h) {
    const int K = h.layout.ring_size();
    if (K > 8) throw CapacityError("exhaustive kernel scan limited to K <= 8");
    const std::uint64_t total = std::uint64_t{1} << (3 * K);

    const int workers = scan_threads();
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::uint64_t> first(workers, total);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    parallel_ranges(static_cast<std::size_t>(workers), [&](std::size_t wb, std::size_t we) {
        std::vector<std::uint8_t> codes(K);
        for (std::size_t w = wb; w < we; ++w) {
            const std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
            for (std::uint64_t x = lo; x < hi; ++x) {
                for (int i = 0; i < K; ++i) codes[i] = (x >> (3 * i)) & 7;
                if (h.penalty(codes) == 0) {
                    ++counts[w];
                    if (first[w] == total) first[w] = x;
                }
            }
        }
    });
    KernelReport rep;
    std::uint64_t best = total;
    for (int w = 0; w < workers; ++w) {
        rep.count += counts[w];
        best = std::min(best, first[w]);
    }
    if (best < total) {
        std::vector<std::uint8_t> codes(K);
        for (int i = 0; i < K; ++i) codes[i] = (best >> (3 * i)) & 7;
        rep.witness = codes;
    }
    return rep;
}

std::uint64_t count_ground_configs_transfer(const PenaltyHamiltonian& h) {
    const int K = h.layout.ring_size();
    if (K > 21) throw CapacityError("transfer-matrix count limited to K <= 21");
    const std::vector<std::uint8_t> want = h.desired_codes();

    using Mat = std::array<std::array<std::uint64_t, 8>, 8>;
    auto matmul = [](const Mat& a, const Mat& b) {
        Mat c{};
        for (int i = 0; i < 8; ++i)
            for (int k = 0; k < 8; ++k) {
                if (!a[i][k]) continue;
                for (int j = 0; j < 8; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    };

    Mat prod{};
    bool started = false;
    for (int p = 0; p < K; ++p) {
        Mat m{};
        const int j = (p + 1) % K;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                bool allowed;
                if (p == h.anchor_site)
                    allowed = !h.anchor_enabled || (a == want[p] && b == want[j]);
                else
                    allowed = !(b == want[j] && a != want[p]);
                m[a][b] = allowed ? 1 : 0;
            }
        prod = started ? matmul(prod, m) : m;
        started = true;
    }
    std::uint64_t trace = 0;
    for (int i = 0; i < 8; ++i) trace += prod[i][i];
    return trace;
}

}  // namespace ringwalk::hamspace
