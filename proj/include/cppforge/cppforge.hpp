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


/**
 * @file cppforge.hpp
 * @brief Single include for the whole library.
 */

#ifndef CPPFORGE_CPPFORGE_HPP
#define CPPFORGE_CPPFORGE_HPP

#include "error.hpp"
#include "families.hpp"
#include "field.hpp"
#include "ha_dickson.hpp"
#include "harness.hpp"
#include "niho.hpp"
#include "perm_oracle.hpp"
#include "poly.hpp"
#include "subfield.hpp"
#include "wide.hpp"

#endif  // CPPFORGE_CPPFORGE_HPP
