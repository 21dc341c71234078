// Copyright 2026 The quantakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quantakit/vecmonad.hpp"

namespace quantakit {

/// "a+bi" with 12 significant digits; negative zero prints as 0.
std::string format_amp(Amp a);
Amp parse_amp(std::string_view text);

/// First line: column labels separated by spaces. Then one line per row,
/// "label: a+bi a+bi ...".
std::string dump_matrix(const CMatrix& m);
std::string dump_matrix_json(const CMatrix& m);
/// Inverse of dump_matrix.
CMatrix parse_matrix_dump(std::string_view text);

/// "label: a+bi" per nonzero entry, in basis order when a basis is given.
std::string dump_state(const AmpVec& v,
                       const std::optional<FinBasis>& basis = std::nullopt);
std::string dump_state_json(const AmpVec& v,
                            const std::optional<FinBasis>& basis = std::nullopt);

}  // namespace quantakit
