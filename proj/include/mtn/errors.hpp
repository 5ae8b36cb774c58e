// Copyright 2026 The mintensor authors
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

#ifndef MINTENSOR_ERRORS_HPP
#define MINTENSOR_ERRORS_HPP

#include <stdexcept>

namespace mtn {

/// Dimension violations: mismatched products, trace of a non-square matrix.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Semantic rejections: unitarity defect above tolerance, bad parameters,
/// guard limits exceeded.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed file contents (bad magic, truncation, unparseable JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failures (open/read/write).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mtn

#endif
