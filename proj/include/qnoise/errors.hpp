// Copyright 2026 The qnoise Authors
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
#include <string>

namespace qnoise {

#define QNOISE_ERROR(Name, Base)                                   \
  class Name : public Base {                                       \
   public:                                                         \
    explicit Name(const std::string &what) : Base(#Name ": " + what) {} \
  }

// linalg
QNOISE_ERROR(NotHermitian, std::invalid_argument);
QNOISE_ERROR(NotPSD, std::invalid_argument);
QNOISE_ERROR(DimMismatch, std::invalid_argument);

// state
QNOISE_ERROR(NotNormalized, std::invalid_argument);
QNOISE_ERROR(InvalidState, std::invalid_argument);

// circuit
QNOISE_ERROR(IndexOutOfRange, std::out_of_range);
QNOISE_ERROR(WidthMismatch, std::invalid_argument);
QNOISE_ERROR(DuplicateIndex, std::invalid_argument);
QNOISE_ERROR(CircuitParseError, std::invalid_argument);

// noise
QNOISE_ERROR(InvalidParams, std::invalid_argument);
QNOISE_ERROR(UnknownLevel, std::invalid_argument);

// metrics
QNOISE_ERROR(OutOfRange, std::domain_error);
QNOISE_ERROR(NotADistribution, std::invalid_argument);

// compile
QNOISE_ERROR(NotUnitary, std::invalid_argument);
QNOISE_ERROR(SearchExhausted, std::runtime_error);
QNOISE_ERROR(NotInterleaved, std::invalid_argument);

// protocols
QNOISE_ERROR(FitDiverged, std::runtime_error);
QNOISE_ERROR(ZeroIdealProbability, std::domain_error);

// harness
QNOISE_ERROR(ConfigError, std::invalid_argument);
QNOISE_ERROR(IoError, std::runtime_error);

#undef QNOISE_ERROR

}  // namespace qnoise
