/*
 *   Copyright 2026 The monovcs authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#ifndef MONOVCS_ERROR_HPP
#define MONOVCS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace monovcs {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed monoid: structural problems or violated algebraic laws.
class MonoidError : public Error {
 public:
  using Error::Error;
};

/// Two objects built over different ambient monoids were combined.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// Invalid polynomial operation (unknown variable, parse failure, ...).
class PolyError : public Error {
 public:
  using Error::Error;
};

/// A polynomial that cannot be expanded into a basis matrix.
class ExpansionError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid scheme (mismatched dimensions, bad colors, ...).
class SchemeError : public Error {
 public:
  using Error::Error;
};

/// A construction family received bad parameters or produced a scheme
/// that fails its own verification.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// File, format or serialization failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace monovcs

#endif  // MONOVCS_ERROR_HPP
