/*
   Copyright 2026 The infmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INFMOD_ERRORS_HPP
#define INFMOD_ERRORS_HPP

#include <stdexcept>

namespace infmod {

/// An input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class ShapeError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

class SingularMatrixError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// A rational function or matrix that must be proper is not.
class ImproperError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// A computed result failed its own postcondition check. Always a bug.
class VerificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace infmod

#endif  // INFMOD_ERRORS_HPP
