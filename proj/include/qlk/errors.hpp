// Copyright 2026 The qlk Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qlk {

/// Shapes of the operands do not fit together.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain an operation is defined on (e.g. k < 3).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An enumeration would exceed its configured cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A required input property (certified distance, commutation) is missing.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed text or binary input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qlk
