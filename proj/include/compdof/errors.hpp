// compdof - degrees-of-freedom toolkit for interference channels with cooperating transmit/receive sets
// Copyright 2026 compdof contributors
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

#ifndef COMPDOF_ERRORS_HPP
#define COMPDOF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace compdof
{

// Numerical-domain failure: a singular matrix where an inverse is required, a
// diverged iteration, non-finite values entering a computation, and the like.
// Argument/precondition violations throw std::invalid_argument instead.
class numerical_error : public std::runtime_error
{
  public:
    explicit numerical_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Requested computation exceeds a documented resource limit (e.g. an
// enumeration that would produce more than 10^6 elements).
class resource_error : public std::runtime_error
{
  public:
    explicit resource_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A checked mathematical property failed verification (used by the CLI to
// distinguish "the check ran and said no" from numerical breakdown).
class verification_error : public std::runtime_error
{
  public:
    explicit verification_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace compdof

#endif
