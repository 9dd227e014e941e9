/*
   Copyright 2026 The kkpencil Authors

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

#ifndef KKP_ERRORS_HPP
#define KKP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kkp {

class SpecMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

class UnboundGenerator : public std::invalid_argument {
   public:
    explicit UnboundGenerator(const std::string& name)
        : std::invalid_argument("unbound generator '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

   private:
    std::string name_;
};

class NonHyperbolicSignature : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class NonIntegralGenus : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class UnsupportedSignature : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class InvalidIndex : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

class NotAnEpimorphism : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class SubgroupNotContained : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class IdentityElement : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Restriction failures: each one means the word list does not describe the claimed Fuchsian subgroup.
class OrderMismatch : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class NonTrivialProduct : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class IndexMismatch : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class SingularParameter : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class RelatorFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace kkp

#endif  // KKP_ERRORS_HPP
