//
// Copyright 2026 The gecsynth Authors
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
//

#ifndef GECSYNTH_ERRORS_H_
#define GECSYNTH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gecsynth {

// Base class for every error raised by the library. Each subclass maps to a
// distinct process exit code in the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or unknown configuration keys, out-of-range knobs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input: bad UTF-8, wrong column count, broken M2 lines.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Not enough applicable input to satisfy a request.
class ExhaustionError : public Error {
 public:
  using Error::Error;
};

// Line-aligned inputs disagree in length.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// An edit log does not match the text it claims to describe.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace gecsynth

#endif  // GECSYNTH_ERRORS_H_
