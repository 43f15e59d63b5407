// Copyright 2026 The gausscheck Authors
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
#include <string_view>

namespace gauss {

enum class Errc {
  DuplicateEndpoint,
  MissingEndpoint,
  ParityViolation,
  NotAPermutation,
  SizeMismatch,
  LetterCountViolation,
  SameChordArc,
  IndexOutOfRange,
  SizeTooLargeForOracle,
  SizeTooLargeForCensus,
  OddOrder,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures surface as this exception type; code() tells which.
class GaussError : public std::runtime_error {
 public:
  GaussError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

  // Resource-style failures map to CLI exit status 2.
  bool is_resource_limit() const noexcept {
    return code_ == Errc::SizeTooLargeForOracle ||
           code_ == Errc::SizeTooLargeForCensus;
  }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateEndpoint: return "DuplicateEndpoint";
    case Errc::MissingEndpoint: return "MissingEndpoint";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::LetterCountViolation: return "LetterCountViolation";
    case Errc::SameChordArc: return "SameChordArc";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SizeTooLargeForOracle: return "SizeTooLargeForOracle";
    case Errc::SizeTooLargeForCensus: return "SizeTooLargeForCensus";
    case Errc::OddOrder: return "OddOrder";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gauss
