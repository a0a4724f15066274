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

#include "ringwalk/rules.hpp"

#include <sstream>

namespace ringwalk::rules {

namespace {

constexpr Cursor kActive[3] = {Cursor::Cycle, Cursor::HoldCycle, Cursor::Gate};

bool bit_ok(int req, std::uint8_t value) { return req < 0 || req == int(value); }

}  // namespace

std::string GateEvent::tag() const {
    std::string s;
    if (kind == Kind::ControlledS) {
        s = "CS ";
        s += static_cast<char>('a' + label_a);
        s += ' ';
        s += static_cast<char>('a' + label_b);
    } else {
        s = "H ";
        s += static_cast<char>('a' + label_a);
    }
    return s;
}

RuleTable RuleTable::build(const RingLayout& layout) {
    if (layout.swap_len < 2 || layout.data_len < 2 || layout.hadamard_len < 1)
        throw DomainError("layout below the legal minimum region sizes");
    RuleTable table;
    table.layout_ = layout;
    const int K = layout.ring_size();
    table.by_site_.resize(K);

    const int tail = layout.swap_len - 2;        // pair of the last two swap sites
    const int sd = layout.swap_len - 1;          // swap-data boundary pair
    const int dtail = layout.hadamard_begin() - 2;  // last two data sites
    const int dh = layout.hadamard_begin() - 1;  // data-Hadamard boundary pair
    const int hs = K - 1;                        // Hadamard-swap boundary pair (wraps)

    auto add = [&](TransitionTerm t) { table.by_site_[t.site].push_back(t); };

    for (int i = 0; i < K; ++i) {
        if (i == tail) {
            // Cursor passage over the last two swap sites; Gate passes only
            // over a 0, leaving the start/stop projections to hold it.
            for (Cursor c : {Cursor::Cycle, Cursor::HoldCycle})
                add({RuleKind::SwapRegionTail, i, false, 0, c, c, -1, -1, true, {}});
            add({RuleKind::SwapRegionTail, i, false, 0, Cursor::Gate, Cursor::Gate, 0, -1, true, {}});
            add({RuleKind::StartProjector, i, true, 1, Cursor::Gate, Cursor::Gate, 1, 1, false, {}});
            add({RuleKind::StopProjector, i, true, 0, Cursor::Gate, Cursor::Gate, 1, 0, false, {}});
            add({RuleKind::SecondStopProjector, i, true, 0, Cursor::Gate, Cursor::Gate, 1, 1, false, {}});
        } else if (i == sd) {
            for (Cursor c : kActive)
                add({RuleKind::SwapDataBoundaryPass, i, false, 0, c, c, 1, -1, false, {}});
            add({RuleKind::SwapDataBoundaryCycle, i, false, 0, Cursor::Cycle, Cursor::HoldCycle, 0, -1, false, {}});
            add({RuleKind::SwapDataBoundaryCycle, i, false, 0, Cursor::HoldCycle, Cursor::Gate, 0, -1, false, {}});
            add({RuleKind::SwapDataBoundaryCycle, i, false, 0, Cursor::Gate, Cursor::Cycle, 0, -1, false, {}});
        } else if (i == dtail) {
            add({RuleKind::DataTail, i, false, 0, Cursor::HoldCycle, Cursor::HoldCycle, -1, -1, false, {}});
            add({RuleKind::DataTail, i, false, 0, Cursor::Cycle, Cursor::Cycle, -1, -1, true, {}});
            add({RuleKind::DataTail, i, false, 0, Cursor::Gate, Cursor::Gate, -1, -1, false,
                 GateEvent::Kind::ControlledS});
        } else if (i == dh) {
            for (Cursor c : {Cursor::Cycle, Cursor::HoldCycle})
                add({RuleKind::DataHadamardBoundary, i, false, 0, c, c, -1, -1, false, {}});
            add({RuleKind::DataHadamardBoundary, i, false, 0, Cursor::Gate, Cursor::Gate, -1, 0, false, {}});
            add({RuleKind::DataHadamardBoundary, i, false, 0, Cursor::Gate, Cursor::Gate, -1, 1, false,
                 GateEvent::Kind::Hadamard});
        } else if (i == hs) {
            for (Cursor c : kActive)
                add({RuleKind::HadamardSwapBoundary, i, false, 0, c, c, -1, -1, false, {}});
        } else {
            for (Cursor c : kActive) add({RuleKind::GeneralSwap, i, false, 0, c, c, -1, -1, true, {}});
        }
    }
    return table;
}

std::vector<TransitionTerm> rule_set(const RingLayout& layout) {
    RuleTable table = RuleTable::build(layout);
    std::vector<TransitionTerm> flat;
    for (int i = 0; i < layout.ring_size(); ++i)
        for (const auto& t : table.at(i)) flat.push_back(t);
    return flat;
}

namespace {

std::optional<GateEvent> make_event(const TransitionTerm& term, const RingConfiguration& cfg, int i,
                                    int j) {
    if (!term.event) return std::nullopt;
    if (*term.event == GateEvent::Kind::ControlledS)
        return GateEvent{GateEvent::Kind::ControlledS, int(cfg.cell[i]), int(cfg.cell[j])};
    return GateEvent{GateEvent::Kind::Hadamard, int(cfg.cell[i]), -1};
}

}  // namespace

std::optional<Step> RuleTable::successor(const RingConfiguration& config) const {
    const int K = layout_.ring_size();
    const int i = config.active_site();
    const int j = (i + 1) % K;
    const TransitionTerm* hit = nullptr;
    for (const auto& t : by_site_[i]) {
        if (t.diagonal) continue;
        if (t.cursor_before != config.cursor[i]) continue;
        if (!bit_ok(t.bit_i, config.cell[i]) || !bit_ok(t.bit_j, config.cell[j])) continue;
        if (hit) throw IntegrityError("more than one forward rule matches");
        hit = &t;
    }
    if (!hit) return std::nullopt;
    Step step{config, make_event(*hit, config, i, j)};
    step.config.cursor[i] = Cursor::Empty;
    step.config.cursor[j] = hit->cursor_after;
    if (hit->swap_cells) std::swap(step.config.cell[i], step.config.cell[j]);
    return step;
}

std::optional<Step> RuleTable::predecessor(const RingConfiguration& config) const {
    const int K = layout_.ring_size();
    const int j = config.active_site();
    const int i = (j - 1 + K) % K;
    const TransitionTerm* hit = nullptr;
    for (const auto& t : by_site_[i]) {
        if (t.diagonal) continue;
        if (t.cursor_after != config.cursor[j]) continue;
        // Bits sit in their produced positions: swapped terms moved bit_i to j.
        const int req_i = t.swap_cells ? t.bit_j : t.bit_i;
        const int req_j = t.swap_cells ? t.bit_i : t.bit_j;
        if (!bit_ok(req_i, config.cell[i]) || !bit_ok(req_j, config.cell[j])) continue;
        if (hit) throw IntegrityError("more than one backward rule matches");
        hit = &t;
    }
    if (!hit) return std::nullopt;
    Step step{config, std::nullopt};
    step.config.cursor[j] = Cursor::Empty;
    step.config.cursor[i] = hit->cursor_before;
    if (hit->swap_cells) std::swap(step.config.cell[i], step.config.cell[j]);
    step.event = make_event(*hit, step.config, i, j);
    return step;
}

int RuleTable::forward_match_count(const RingConfiguration& config) const {
    const int K = layout_.ring_size();
    const int i = config.active_site();
    const int j = (i + 1) % K;
    int count = 0;
    for (const auto& t : by_site_[i]) {
        if (t.diagonal) continue;
        if (t.cursor_before == config.cursor[i] && bit_ok(t.bit_i, config.cell[i]) &&
            bit_ok(t.bit_j, config.cell[j]))
            ++count;
    }
    return count;
}

int RuleTable::backward_match_count(const RingConfiguration& config) const {
    const int K = layout_.ring_size();
    const int j = config.active_site();
    const int i = (j - 1 + K) % K;
    int count = 0;
    for (const auto& t : by_site_[i]) {
        if (t.diagonal) continue;
        const int req_i = t.swap_cells ? t.bit_j : t.bit_i;
        const int req_j = t.swap_cells ? t.bit_i : t.bit_j;
        if (t.cursor_after == config.cursor[j] && bit_ok(req_i, config.cell[i]) &&
            bit_ok(req_j, config.cell[j]))
            ++count;
    }
    return count;
}

std::vector<const TransitionTerm*> RuleTable::matching_diagonals(const RingConfiguration& config) const {
    const int K = layout_.ring_size();
    const int a = config.active_site();
    std::vector<const TransitionTerm*> out;
    for (int pos = 0; pos <= 1; ++pos) {
        const int site = (a - pos + K) % K;
        const int j = (site + 1) % K;
        for (const auto& t : by_site_[site]) {
            if (!t.diagonal || t.diag_pos != pos) continue;
            if (t.cursor_before != config.cursor[(site + t.diag_pos) % K]) continue;
            if (bit_ok(t.bit_i, config.cell[site]) && bit_ok(t.bit_j, config.cell[j])) out.push_back(&t);
        }
    }
    return out;
}

Trajectory enumerate_trajectory(const vprog::VProgram& prog, std::size_t cap) {
    const RingConfiguration start = ring::initial_configuration(prog);
    const RuleTable table = RuleTable::build(start.layout);

    auto ones = [&](const RingConfiguration& c) {
        int count = 0;
        for (int s = 0; s < c.layout.ring_size(); ++s)
            if (c.layout.region_of(s) != ring::Region::Data) count += c.cell[s];
        return count;
    };
    const int ones0 = ones(start);

    Trajectory traj;
    traj.steps.push_back(start);
    while (true) {
        if (traj.steps.size() > cap)
            throw RunawayError("trajectory exceeded the step cap of " + std::to_string(cap));
        const RingConfiguration& cur = traj.steps.back();
        auto next = table.successor(cur);
        if (!next) {
            bool stop1 = false, stop2 = false;
            for (const auto* d : table.matching_diagonals(cur)) {
                stop1 |= d->kind == RuleKind::StopProjector;
                stop2 |= d->kind == RuleKind::SecondStopProjector;
            }
            if (stop1)
                traj.stop = StopKind::Primary;
            else if (stop2)
                traj.stop = StopKind::Secondary;
            else
                throw DomainError("trajectory halted outside the stop manifold");
            break;
        }
        next->config.active_site();  // single-cursor conservation
        if (ones(next->config) != ones0)
            throw IntegrityError("program-bit multiset not conserved");
        auto back = table.predecessor(next->config);
        if (!back || !(back->config == cur))
            throw IntegrityError("predecessor does not invert successor");
        traj.events.push_back(next->event);
        traj.steps.push_back(std::move(next->config));
    }
    return traj;
}

std::string dump_trajectory(const Trajectory& traj) {
    std::ostringstream out;
    for (std::size_t t = 0; t < traj.steps.size(); ++t) {
        out << "step " << t;
        if (t < traj.events.size() && traj.events[t]) out << ' ' << traj.events[t]->tag();
        out << '\n' << ring::render(traj.steps[t]) << "\n\n";
    }
    return out.str();
}

}  // namespace ringwalk::rules
