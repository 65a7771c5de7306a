// Copyright 2026 The qdisc Authors
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

#ifndef QDISC_ERRORS_HPP
#define QDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdisc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NegativeEigenvalue : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilityBranch : public Error {
 public:
  using Error::Error;
};

class DepthCapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPOVM : public Error {
 public:
  using Error::Error;
};

class AngleCountMismatch : public Error {
 public:
  using Error::Error;
};

/// A computed quantity broke a bound it must satisfy (e.g. R(M) > 1).
class BoundViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qdisc

#endif  // QDISC_ERRORS_HPP
