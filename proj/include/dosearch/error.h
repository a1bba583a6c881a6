// Copyright 2026 The dosearch Authors
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

namespace dosearch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// State count is not 4^M, is zero, or overflows size_t.
class SizeError : public Error {
    using Error::Error;
};

/// Two costs collide where an exact sublevel-set cardinality is needed.
class TieError : public Error {
    using Error::Error;
};

/// Malformed input value (non-finite cost, bad length, non-unitary matrix...).
class ValidationError : public Error {
    using Error::Error;
};

/// Requested schedule perturbation breaks nesting or positivity.
class PerturbationError : public Error {
    using Error::Error;
};

/// good_mask is not contained in prev_mask.
class NestingError : public Error {
    using Error::Error;
};

/// Operation undefined on its input (empty subspace, ratio outside (0, 1)).
class DomainError : public Error {
    using Error::Error;
};

/// The oracle marks no states.
class NoTargetError : public Error {
    using Error::Error;
};

/// good_mask == prev_mask, there is nothing to amplify.
class DegenerateRatioError : public Error {
    using Error::Error;
};

/// Precondition of a driver does not hold (e.g. inexact schedule).
class PreconditionError : public Error {
    using Error::Error;
};

/// Robustness configuration cannot be satisfied.
class ConfigurationError : public Error {
    using Error::Error;
};

/// Text document could not be parsed.
class ParseError : public Error {
    using Error::Error;
};

}  // namespace dosearch
