// Copyright 2026 The qlbm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qlbm {

/// Index falls in the zero-padding tail of a power-of-two DF vector.
class PaddingIndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A numerical kernel (SVD) failed to produce a usable result.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Rejected run configuration (unknown key, bad value, qubit ceiling).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qlbm
