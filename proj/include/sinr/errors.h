// Copyright 2026 The SINR Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SINR_ERRORS_H_
#define SINR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sinr {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates a precondition (bad shape, bad range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A sparse code would not satisfy 2s < k1.
class BudgetError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The Gram matrix of a least-squares basis is numerically singular.
class RankDeficientError : public Error {
 public:
  using Error::Error;
};

// NaN or Inf showed up where finite values are required.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Malformed, truncated or corrupted file / byte stream.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace sinr

#endif  // SINR_ERRORS_H_
