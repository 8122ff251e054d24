/*
   Copyright 2026 The cppforge Authors

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


// A short tour of the library: build F_{3^4}, do some arithmetic, then ask
// which coefficients a make a^{-1} x^41 a complete permutation polynomial.

#include <cstdint>
#include <iostream>
#include <vector>

#include <cppforge/cppforge.hpp>

int main() {
    using namespace cppforge;

    const Field f = Field::build(3, 4);
    std::cout << "field: " << format_field_spec(f) << " with " << to_string(f.size()) << " elements\n";

    const std::vector<std::uint32_t> cx{1, 2, 0, 1};
    const Elem x = f.from_coeffs(cx);
    const Elem y = f.inv(x);
    std::cout << "x = " << to_string(x) << ", 1/x = " << to_string(y) << ", x * (1/x) = " << to_string(f.mul(x, y))
              << '\n';
    std::cout << "Tr_1^4(x) = " << to_string(f.trace(x, 1)) << '\n';

    // d = (3^4 - 1)/(3 - 1) + 1 = 41.
    const wide_t d = dr_exponent(3, 1, 4);
    const HaChecker ha(f, 4, 1);
    unsigned count = 0;
    for (wide_t v = 1; v < f.size(); ++v) {
        const Elem a(v);
        if (!ha.check(a)) continue;
        ++count;
        if (!is_cpp_exponent_pair(f, d, a)) std::cout << "disagreement at " << to_string(a) << '\n';
    }
    std::cout << count << " coefficients give a CPP for d = " << to_string(d) << '\n';
    return 0;
}
