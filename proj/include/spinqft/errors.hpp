// Copyright 2026 The spinqft Authors
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

namespace spinqft {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A qubit index outside [0, n) of the containing circuit.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The requested width exceeds what the dense simulator will materialize.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A hardware model that cannot execute anything (e.g. tau0 below t_R).
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinqft
