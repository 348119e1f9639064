// Copyright 2026 The ghzsim Authors
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

namespace ghzsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NormalizationError : public Error {
  public:
    using Error::Error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Raised when an operation receives a state of the wrong layout
/// (e.g. a spins-only register where a photon is required).
class LayoutError : public Error {
  public:
    using Error::Error;
};

class IndexError : public Error {
  public:
    using Error::Error;
};

class ArgumentError : public Error {
  public:
    using Error::Error;
};

class LabelError : public Error {
  public:
    using Error::Error;
};

/// A protocol invariant was violated at run time, which only happens with a
/// non-physical cavity rule table.
class ProtocolError : public Error {
  public:
    using Error::Error;
};

} // namespace ghzsim
