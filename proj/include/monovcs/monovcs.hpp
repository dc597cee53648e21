/*
 *   Copyright 2026 The monovcs authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

/// Umbrella header for the whole library.

#ifndef MONOVCS_MONOVCS_HPP
#define MONOVCS_MONOVCS_HPP

#include "monovcs/basis.hpp"
#include "monovcs/color_monoid.hpp"
#include "monovcs/constructions.hpp"
#include "monovcs/error.hpp"
#include "monovcs/image.hpp"
#include "monovcs/io.hpp"
#include "monovcs/poly.hpp"
#include "monovcs/scheme.hpp"
#include "monovcs/share.hpp"

#endif  // MONOVCS_MONOVCS_HPP
