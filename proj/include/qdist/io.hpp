// Copyright 2026 The qdist developers
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
//
// JSON state schema ({"dim": D, "matrix": [[[re,im],...],...]} or
// {"bloch": [x,y,z]}) and deterministic CSV output.

#ifndef QDIST_IO_HPP
#define QDIST_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qdist/states.hpp"

namespace qdist {

DensityOperator state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const DensityOperator& rho);
DensityOperator load_state(const std::string& path);

// %.12g with '.' decimal separator regardless of locale.
std::string format_real(Real v);

// Writes header + rows with LF endings, atomically (temp file + rename).
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<Real>>& rows);

}  // namespace qdist

#endif  // QDIST_IO_HPP
