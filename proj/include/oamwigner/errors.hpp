// Copyright 2026 The oamwigner Authors
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

namespace oamwigner {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain. The CLI maps
/// this family to a usage error.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonNormalizedState : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DuplicateMode : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroMode : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Two mode indices that must differ (m1 != m0, n1 != n0) coincide.
class DegenerateModes : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidBlochVector : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class SubspaceMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidGrid : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class StateParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A computation ran but its result failed an internal accuracy check.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NumericalHermiticityViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureNotConverged : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace oamwigner
