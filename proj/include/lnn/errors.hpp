// Copyright 2026 The lnn-route Authors
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

namespace lnn {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line ordering whose length does not match the circuit it is applied to.
class OrderingMismatch : public Error {
 public:
  using Error::Error;
};

/// An input exceeds a size guard (simulation width, exhaustive search, ancilla pool).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation defined only on NCT circuits received a multiple-controlled gate.
class MustDecomposeError : public Error {
 public:
  using Error::Error;
};

class NotAnMctError : public Error {
 public:
  using Error::Error;
};

}  // namespace lnn
