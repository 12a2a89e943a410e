/*
   Copyright 2026 The jetsplit authors

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

#ifndef JETSPLIT_ERRORS_HPP
#define JETSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetsplit {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct field_mismatch : error {
    field_mismatch() : error("operands belong to different fields") {}
};

struct shape_mismatch : error {
    shape_mismatch() : error("matrix shapes do not match") {}
};

struct invalid_params : error {
    using error::error;
};

struct unsupported : error {
    using error::error;
};

struct not_invertible : error {
    not_invertible() : error("determinant is not a unit") {}
};

struct window_too_small : error {
    window_too_small() : error("section window failed saturation checks") {}
};

struct characteristic_divides_n : error {
    characteristic_divides_n() : error("field characteristic divides n") {}
};

struct gluing_failed : error {
    using error::error;
};

struct missing_solution : error {
    using error::error;
};

struct unexpected_singular : error {
    using error::error;
};

// Raised when an internal exactness check fails; never expected to fire.
struct internal_error : error {
    using error::error;
};

} // namespace jetsplit

#endif // JETSPLIT_ERRORS_HPP
