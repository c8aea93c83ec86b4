// Copyright 2026 The hgpsim Authors
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

#ifndef HGPSIM_ERRORS_H
#define HGPSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace hgpsim {

/// Bad arguments: dimension mismatches, probabilities out of range, malformed parameters.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds an enumeration budget (subset tables, codeword enumeration).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Random code generation exhausted its retry budget.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A fit was asked to work with too few usable points.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input text (matrix files, CSVs, configs) could not be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hgpsim

#endif
