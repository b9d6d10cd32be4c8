/*
   Copyright 2026 The euclid Authors

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

#ifndef EUCLID_ERROR_HPP
#define EUCLID_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace euclid {

/// A precondition on the mathematical input does not hold (undefined
/// subtraction, non-principal ring, empty poset, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A configured size, depth or growth bound was exceeded.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset into the source.
class SyntaxError : public std::runtime_error {
   public:
    SyntaxError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// Well-formed ring specification that names an invalid ring.
class SpecError : public DomainError {
   public:
    enum class Kind { ModulusTooSmall, NotPrimePower, ReducibleModulus, DegenerateModulus };

    SpecError(Kind kind, const std::string& message) : DomainError(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

   private:
    Kind kind_;
};

}  // namespace euclid

#endif
