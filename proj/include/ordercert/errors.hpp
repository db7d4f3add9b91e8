/*
   Copyright 2026 The ordercert Authors

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

#ifndef ORDERCERT_ERRORS_HPP
#define ORDERCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordercert {

/// Bad user input: malformed knot pair, out-of-range cover degree, ...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPair : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A Laurent coefficient is not invariant under m -> 1/m.
class NotSymmetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant that holds for every two-bridge knot failed. Always a bug.
class PropertyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DegenerateLeading : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonPositiveT : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotOntoZn : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ordercert

#endif
