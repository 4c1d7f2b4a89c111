// Copyright 2026 The Congest Subgraph Detection Authors
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

namespace congest {

/// Base of every error raised by the library. Each subclass corresponds to a
/// named failure mode of one operation; callers that only care about success
/// can catch `Error`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CONGEST_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

CONGEST_DEFINE_ERROR(ParseError);
CONGEST_DEFINE_ERROR(InvalidGraph);
CONGEST_DEFINE_ERROR(InvalidPattern);
CONGEST_DEFINE_ERROR(InvalidParams);
CONGEST_DEFINE_ERROR(BudgetExceeded);
CONGEST_DEFINE_ERROR(RoundLimitExceeded);
CONGEST_DEFINE_ERROR(ProtocolError);
CONGEST_DEFINE_ERROR(IterationBudgetExceeded);
CONGEST_DEFINE_ERROR(TrialBudgetExceeded);
CONGEST_DEFINE_ERROR(EnumerationLimitExceeded);
CONGEST_DEFINE_ERROR(AnchorNotAnEdge);
CONGEST_DEFINE_ERROR(EmptyGraph);
CONGEST_DEFINE_ERROR(NotASubfamily);
CONGEST_DEFINE_ERROR(PatternTooLarge);
CONGEST_DEFINE_ERROR(TooLarge);

#undef CONGEST_DEFINE_ERROR

}  // namespace congest
