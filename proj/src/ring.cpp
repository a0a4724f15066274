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

#include "ringwalk/ring.hpp"

#include <array>

namespace ringwalk::ring {

namespace {

char cursor_char(Cursor c) {
    switch (c) {
        case Cursor::Empty: return '.';
        case Cursor::Cycle: return 'c';
        case Cursor::HoldCycle: return 'h';
        case Cursor::Gate: return 'g';
    }
    return '?';
}

Cursor cursor_from_char(char ch, int line, int col) {
    switch (ch) {
        case '.': return Cursor::Empty;
        case 'c': return Cursor::Cycle;
        case 'h': return Cursor::HoldCycle;
        case 'g': return Cursor::Gate;
    }
    throw ParseError(std::string("unknown cursor glyph '") + ch + "'", line, col);
}

}  // namespace

Region RingLayout::region_of(int site) const {
    if (site < 0 || site >= ring_size()) throw DomainError("site index out of range");
    if (site < swap_len) return Region::Swap;
    if (site < swap_len + data_len) return Region::Data;
    return Region::Hadamard;
}

int RingConfiguration::active_site() const {
    int found = -1;
    for (int i = 0; i < static_cast<int>(cursor.size()); ++i) {
        if (cursor[i] == Cursor::Empty) continue;
        if (found >= 0) throw IntegrityError("more than one active cursor site");
        found = i;
    }
    if (found < 0) throw IntegrityError("no active cursor site");
    return found;
}

RingLayout build_layout(const vprog::VProgram& prog) {
    prog.validate();
    RingLayout lay;
    lay.swap_len = static_cast<int>(prog.swap_bits.size()) + 1;
    lay.data_len = prog.n;
    lay.hadamard_len = static_cast<int>(prog.hadamard_bits.size());
    if (lay.data_len < 2) throw DomainError("ring needs at least two data sites");
    if (lay.hadamard_len < 1) throw DomainError("ring needs a non-empty Hadamard region");
    return lay;
}

RingConfiguration initial_configuration(const vprog::VProgram& prog) {
    RingLayout lay = build_layout(prog);
    RingConfiguration cfg;
    cfg.layout = lay;
    cfg.cursor.assign(lay.ring_size(), Cursor::Empty);
    cfg.cursor[lay.swap_len - 1] = Cursor::Gate;
    cfg.cell.reserve(lay.ring_size());
    for (auto b : prog.swap_bits) cfg.cell.push_back(b);
    cfg.cell.push_back(1);
    for (int i = 0; i < prog.n; ++i) cfg.cell.push_back(static_cast<std::uint8_t>(i));
    for (auto b : prog.hadamard_bits) cfg.cell.push_back(b);
    return cfg;
}

std::string render(const RingConfiguration& config) {
    const RingLayout& lay = config.layout;
    const int K = lay.ring_size();
    if (static_cast<int>(config.cursor.size()) != K || static_cast<int>(config.cell.size()) != K)
        throw DomainError("configuration does not match its layout");
    std::string top, bottom;
    for (int i = 0; i < K; ++i) {
        if (i == lay.data_begin() || i == lay.hadamard_begin()) {
            top += '|';
            bottom += '|';
        }
        top += cursor_char(config.cursor[i]);
        if (lay.region_of(i) == Region::Data)
            bottom += static_cast<char>('a' + config.cell[i]);
        else
            bottom += static_cast<char>('0' + config.cell[i]);
    }
    return top + "\n" + bottom;
}

RingConfiguration parse(const std::string& text) {
    const std::size_t nl = text.find('\n');
    if (nl == std::string::npos) throw ParseError("expected two lines", 0, 0);
    std::string top = text.substr(0, nl);
    std::string bottom = text.substr(nl + 1);
    if (!bottom.empty() && bottom.back() == '\n') bottom.pop_back();
    if (bottom.find('\n') != std::string::npos) throw ParseError("expected exactly two lines", 2, 0);
    if (top.size() != bottom.size()) throw ParseError("line lengths differ", 1, 0);

    std::array<int, 2> bars{-1, -1};
    int nbars = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
        const bool bt = top[i] == '|', bb = bottom[i] == '|';
        if (bt != bb) throw ParseError("region boundary columns differ between lines", 1, int(i));
        if (bt) {
            if (nbars >= 2) throw ParseError("too many region boundaries", 0, int(i));
            bars[nbars++] = static_cast<int>(i);
        }
    }
    if (nbars != 2) throw ParseError("expected two region boundaries");

    RingLayout lay;
    lay.swap_len = bars[0];
    lay.data_len = bars[1] - bars[0] - 1;
    lay.hadamard_len = static_cast<int>(top.size()) - bars[1] - 1;
    if (lay.swap_len < 2 || lay.data_len < 2 || lay.hadamard_len < 1)
        throw ParseError("region sizes below the legal minimum");

    RingConfiguration cfg;
    cfg.layout = lay;
    std::vector<bool> label_seen(lay.data_len, false);
    int col = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (top[i] == '|') continue;
        cfg.cursor.push_back(cursor_from_char(top[i], 0, int(i)));
        const char b = bottom[i];
        if (lay.region_of(col) == Region::Data) {
            if (b < 'a' || b >= 'a' + lay.data_len)
                throw ParseError("data cell expects a label letter", 1, int(i));
            if (label_seen[b - 'a']) throw ParseError("duplicate data label", 1, int(i));
            label_seen[b - 'a'] = true;
            cfg.cell.push_back(static_cast<std::uint8_t>(b - 'a'));
        } else {
            if (b != '0' && b != '1') throw ParseError("program cell expects a bit", 1, int(i));
            cfg.cell.push_back(b == '1');
        }
        ++col;
    }
    int active = 0;
    for (auto c : cfg.cursor) active += (c != Cursor::Empty);
    if (active != 1) throw ParseError("expected exactly one active cursor");
    return cfg;
}

}  // namespace ringwalk::ring
