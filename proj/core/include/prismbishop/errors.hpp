// Copyright 2026 prismbishop contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace prismbishop {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid board dimensions (n < 2 or m < n).
struct DimensionError : Error {
    using Error::Error;
};

/// The surface model or a derived structure failed an internal coherence
/// check.  Always indicates a bug or an unsupported board, never bad user
/// input.
struct StructuralError : Error {
    using Error::Error;
};

/// A placement procedure produced a non-independent or wrongly sized
/// placement.  Treated as an implementation fault, never repaired silently.
struct ConstructionFault : Error {
    using Error::Error;
};

/// Two redundant computations of the same quantity disagreed.
struct ConsistencyError : Error {
    using Error::Error;
};

} // namespace prismbishop
