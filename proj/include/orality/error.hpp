/*
 * Copyright 2026 The Orality Authors
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

namespace orality {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input: files, lexicons, configuration.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A metric cannot be computed on the given document (too short, no
/// articles, missing parse, ...). Reports record these as absent values.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace orality
