/*
 * Copyright 2026 The mexpart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace mexpart {

// Every error raised by the library derives from Error. The C API maps each
// concrete class to one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad family parameter (r < 1, wrong parity of r, unknown table id, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Well-formed object outside the domain of the operation applied to it.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Text that does not follow the object grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mexpart
