// Copyright 2026 The cspsamle Authors
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

#ifndef CSPSAMLE_ERRORS_H
#define CSPSAMLE_ERRORS_H

#include <stdexcept>
#include <string>

namespace cspsamle {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CSPSAMLE_DEFINE_ERROR(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

CSPSAMLE_DEFINE_ERROR(ZeroVector);
CSPSAMLE_DEFINE_ERROR(DimensionMismatch);
CSPSAMLE_DEFINE_ERROR(InvalidDistribution);
CSPSAMLE_DEFINE_ERROR(InvalidArgument);
CSPSAMLE_DEFINE_ERROR(DegenerateIterate);
CSPSAMLE_DEFINE_ERROR(EmptyData);
CSPSAMLE_DEFINE_ERROR(EmptyInput);
CSPSAMLE_DEFINE_ERROR(ConfigInvalid);
CSPSAMLE_DEFINE_ERROR(IoFailure);

#undef CSPSAMLE_DEFINE_ERROR

}  // namespace cspsamle

#endif  // CSPSAMLE_ERRORS_H
