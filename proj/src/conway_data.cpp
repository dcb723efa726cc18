/*
 * Copyright 2026 The tracecode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tracecode/field.hpp"

namespace tracecode {
namespace detail {

// Norm-compatible primitive polynomials (Conway polynomials) for every
// GF(p^m) the bundled constructions touch.  Computed offline by the standard
// deterministic search: smallest candidate in the word order on
// (b_{m-1}, ..., b_0) with b_i = ((-1)^{m-i} a_i) mod p, subject to being
// primitive and norm-compatible with the entries of all proper divisor
// degrees.  Coefficients are low-degree first and include the leading 1.
const std::vector<ModulusEntry>& builtin_moduli() {
    static const std::vector<ModulusEntry> table = {
        {2, 1, {1, 1}},
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
        {3, 1, {1, 1}},
        {3, 2, {2, 2, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
        {5, 1, {3, 1}},
        {5, 2, {2, 4, 1}},
        {5, 4, {2, 4, 4, 0, 1}},
        {5, 8, {2, 4, 3, 0, 1, 0, 0, 0, 1}},
        {7, 1, {4, 1}},
        {7, 2, {3, 6, 1}},
        {7, 4, {3, 4, 5, 0, 1}},
        {11, 1, {9, 1}},
        {11, 2, {2, 7, 1}},
        {11, 4, {2, 10, 8, 0, 1}},
    };
    return table;
}

}  // namespace detail
}  // namespace tracecode
