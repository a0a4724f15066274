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

#include <optional>
#include <string>
#include <vector>

#include "ringwalk/ring.hpp"

namespace ringwalk::rules {

using ring::RingConfiguration;
using ring::RingLayout;
using vprog::Cursor;

enum class RuleKind {
    GeneralSwap,
    StartProjector,
    StopProjector,
    SecondStopProjector,
    SwapRegionTail,
    SwapDataBoundaryCycle,
    SwapDataBoundaryPass,
    DataTail,
    DataHadamardBoundary,
    HadamardSwapBoundary,
};

/// Gate applied to the data register during a transition, identified by the
/// permutation labels of the cells involved (labels survive the cell
/// shuffling; sites do not).
struct GateEvent {
    enum class Kind { ControlledS, Hadamard };
    Kind kind;
    int label_a;
    int label_b = -1;  // ControlledS only

    bool operator==(const GateEvent&) const = default;
    std::string tag() const;  // "CS a b" / "H a"
};

/// One ket-bra term of a g_i, concrete in cursor values. Forward terms move
/// the cursor from site to site+1 (mod K); diagonal terms are the start/stop
/// projections. Program-bit requirements of -1 mean "any"; data cells are
/// never bit-constrained.
struct TransitionTerm {
    RuleKind kind;
    int site = 0;
    bool diagonal = false;
    int diag_pos = 0;  // diagonal only: cursor at site + diag_pos
    Cursor cursor_before = Cursor::Empty;
    Cursor cursor_after = Cursor::Empty;
    int bit_i = -1;
    int bit_j = -1;
    bool swap_cells = false;
    std::optional<GateEvent::Kind> event;
};

struct Step {
    RingConfiguration config;
    std::optional<GateEvent> event;
};

/// The site-indexed g_i table for one layout.
class RuleTable {
  public:
    static RuleTable build(const RingLayout& layout);

    const RingLayout& layout() const { return layout_; }
    const std::vector<TransitionTerm>& at(int site) const { return by_site_[site]; }

    /// The unique forward successor, or nothing at a stop state.
    /// Throws IntegrityError if more than one forward term matches.
    std::optional<Step> successor(const RingConfiguration& config) const;

    /// The unique backward predecessor, or nothing at the start state. The
    /// returned event is the forward event of the traversed edge; stepping
    /// backward applies its inverse.
    std::optional<Step> predecessor(const RingConfiguration& config) const;

    int forward_match_count(const RingConfiguration& config) const;
    int backward_match_count(const RingConfiguration& config) const;

    /// Diagonal (projector) terms matching the configuration. Each match
    /// contributes g + g-dagger = 1 to the Hamiltonian diagonal.
    std::vector<const TransitionTerm*> matching_diagonals(const RingConfiguration& config) const;

  private:
    RingLayout layout_;
    std::vector<std::vector<TransitionTerm>> by_site_;
};

/// rule_set per the module contract: the flat term list of a layout.
std::vector<TransitionTerm> rule_set(const RingLayout& layout);

enum class StopKind { Primary, Secondary };

struct Trajectory {
    std::vector<RingConfiguration> steps;
    std::vector<std::optional<GateEvent>> events;  // events[t] fires on the edge t -> t+1
    StopKind stop = StopKind::Primary;

    int tbar() const { return static_cast<int>(steps.size()) - 1; }
};

/// Runs the forward rules from the start state to the stop state, checking
/// forward/backward uniqueness, cursor and program-bit conservation at every
/// step. Throws RunawayError past `cap` steps.
Trajectory enumerate_trajectory(const vprog::VProgram& prog, std::size_t cap = 1000000);

/// Newline-delimited dump, one record per step: "step <t>" with the edge
/// event tag appended when the transition leaving t applies a gate, then the
/// two glyph lines, then a blank line.
std::string dump_trajectory(const Trajectory& traj);

}  // namespace ringwalk::rules
