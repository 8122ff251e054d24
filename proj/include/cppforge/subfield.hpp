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

#ifndef CPPFORGE_SUBFIELD_HPP
#define CPPFORGE_SUBFIELD_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "field.hpp"

namespace cppforge {

/// Dense slot numbering of F_{p^k} inside F_{p^n}, for occupancy sets.
/// Slots are a bijection onto [0, p^k) but not in encoding order.
class SubfieldIndex {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    SubfieldIndex(const Field& f, unsigned k) : field_(f), k_(k), elements_(f.subfield_elements(k)) {
        if (f.tables()) stride_ = static_cast<std::uint32_t>(f.group_order() / (elements_.size() - 1));
    }

    const Field& field() const { return field_; }
    unsigned k() const { return k_; }
    std::size_t size() const { return elements_.size(); }
    /// Ascending by encoding.
    const std::vector<Elem>& elements() const { return elements_; }

    std::size_t slot(Elem y) const {
        if (y.is_zero()) return 0;
        if (auto* t = field_.tables()) {
            const std::uint32_t l = t->log[static_cast<std::uint32_t>(y.v)];
            if (l % stride_ != 0) return npos;
            return 1 + l / stride_;
        }
        auto it = std::lower_bound(elements_.begin(), elements_.end(), y);
        if (it == elements_.end() || *it != y) return npos;
        return static_cast<std::size_t>(it - elements_.begin());
    }

private:
    Field field_;
    unsigned k_;
    std::vector<Elem> elements_;
    std::uint32_t stride_ = 0;
};

}  // namespace cppforge

#endif  // CPPFORGE_SUBFIELD_HPP
