/*
   Copyright 2026 the genus2 authors

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

#ifndef GENUS2_ERRORS_HPP
#define GENUS2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace genus2 {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad characteristic, composite p, mismatched contexts.
struct invalid_field_error : error {
    explicit invalid_field_error(const std::string& what) : error(what) {}
};

/// Repeated roots, vanishing discriminants, degenerate models.
struct singular_error : error {
    explicit singular_error(const std::string& what) : error(what) {}
};

/// Stratum/characteristic combination with no defining data.
struct unsupported_error : error {
    explicit unsupported_error(const std::string& what) : error(what) {}
};

/// Census grid larger than the configured budget.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

/// A closed formula evaluated to a non-integer.
struct formula_error : error {
    explicit formula_error(const std::string& what) : error(what) {}
};

/// Broken internal invariant (group closure, division exactness).
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace genus2

#endif
