/*
   Copyright 2026 The ternopt Authors

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

#ifndef TERNOPT_ERRORS_HPP
#define TERNOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ternopt {

// Error idiom: preconditions and malformed input raise std::invalid_argument,
// algebraic impossibilities (division by zero polynomial, ...) raise
// std::domain_error, and requests beyond a configured size cap raise
// CapabilityExceeded so callers can switch strategy (e.g. witness mode).

class CapabilityExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ternopt

#endif  // TERNOPT_ERRORS_HPP
