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

#include <stdexcept>
#include <string>

namespace ringwalk {

/// Invalid argument or state outside an operation's domain.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem size beyond a hard implementation bound.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency violation (more than one rule matched, broken table).
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input. Carries a 0-based line and column when known.
struct ParseError : std::runtime_error {
    int line = -1;
    int column = -1;
    ParseError(const std::string& what, int line_, int column_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Trajectory exceeded the configured step cap.
struct RunawayError : std::runtime_error {
    explicit RunawayError(const std::string& what) : std::runtime_error(what) {}
};

/// Integration step size too coarse for the requested evolution.
struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Ground state numerically degenerate where uniqueness is required.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringwalk
