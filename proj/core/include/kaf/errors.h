// Copyright 2026 The KAF Authors. All Rights Reserved.
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

#ifndef KAF_ERRORS_H_
#define KAF_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kaf {

// Base for every error raised by the library. Each subclass corresponds to
// one failure category of the command-line tool (see ExitCodeFor in
// tools/kaf_main.cc).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter value: nonpositive lengthscale, mu outside (0, 1), ...
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Caller broke a precondition, e.g. mixed dimensions or wrong dictionary mode.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Malformed or unusable input data.
class IngestionError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf appeared during filtering. Carries the step that produced it.
class NumericFault : public Error {
 public:
  NumericFault(const std::string& what, std::size_t step)
      : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Dictionary reached its configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A metric has no defined value for the given data (e.g. zero variance).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kaf

#endif  // KAF_ERRORS_H_
