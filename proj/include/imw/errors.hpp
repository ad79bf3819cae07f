// Copyright 2026 The imw Authors
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

namespace imw {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define IMW_DEFINE_ERROR(Name)      \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

IMW_DEFINE_ERROR(DimensionMismatch)
IMW_DEFINE_ERROR(SingularMatrix)
IMW_DEFINE_ERROR(DivisionByZero)
IMW_DEFINE_ERROR(UnsupportedDivision)
IMW_DEFINE_ERROR(FactorizationBoundExceeded)
IMW_DEFINE_ERROR(NonRationalResult)
IMW_DEFINE_ERROR(NotReachable)
IMW_DEFINE_ERROR(DepthBoundExceeded)
IMW_DEFINE_ERROR(InternalInconsistency)
IMW_DEFINE_ERROR(MultiplicityPresent)
IMW_DEFINE_ERROR(TriangleViolation)
IMW_DEFINE_ERROR(InfeasibleInput)
IMW_DEFINE_ERROR(InfeasibleAll)
IMW_DEFINE_ERROR(ShapeMismatch)
IMW_DEFINE_ERROR(NonOrthogonalCodewords)
IMW_DEFINE_ERROR(InvalidSpec)
IMW_DEFINE_ERROR(TooLarge)
IMW_DEFINE_ERROR(ParseError)

#undef IMW_DEFINE_ERROR

}  // namespace imw
