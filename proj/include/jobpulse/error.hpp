// Copyright 2026 The JobPulse Authors.
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

#ifndef JOBPULSE_ERROR_HPP_
#define JOBPULSE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jobpulse {

// Base class for all errors raised by the pipeline.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input. Carries the 1-based line number of the offending row.
class ParseError : public Error {
 public:
  ParseError(const std::string &source, std::size_t line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string &source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Well-formed input or configuration that violates a semantic rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An upstream stage broke the contract a downstream stage relies on,
// e.g. two match records for the same (job_id, region).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Files that cannot be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A rejected input record. Never silently dropped; always surfaced to the
// caller so it can be written to a diagnostics artifact.
struct Diagnostic {
  std::string source;
  std::size_t line = 0;
  std::string reason;
};

}  // namespace jobpulse

#endif  // JOBPULSE_ERROR_HPP_
