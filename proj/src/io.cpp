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

#include "qdist/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace qdist {

using nlohmann::json;

DensityOperator state_from_json(const json& j) {
  if (j.contains("bloch")) {
    const auto& arr = j.at("bloch");
    if (!arr.is_array() || arr.size() != 3) fail(Errc::BadInput, "bloch needs 3 components");
    return bloch_to_density(Bloch(arr[0].get<Real>(), arr[1].get<Real>(), arr[2].get<Real>()));
  }
  if (!j.contains("dim") || !j.contains("matrix"))
    fail(Errc::BadInput, "state JSON needs dim+matrix or bloch");
  Eigen::Index d = j.at("dim").get<Eigen::Index>();
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d)
    fail(Errc::BadInput, "matrix row count != dim");
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
      fail(Errc::BadInput, "matrix column count != dim");
    for (Eigen::Index k = 0; k < d; ++k) {
      const auto& cell = row[static_cast<size_t>(k)];
      if (!cell.is_array() || cell.size() != 2) fail(Errc::BadInput, "entries are [re,im]");
      m(i, k) = Complex(cell[0].get<Real>(), cell[1].get<Real>());
    }
  }
  return DensityOperator(m);
}

json state_to_json(const DensityOperator& rho) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < rho.dim(); ++k)
      row.push_back({rho.matrix()(i, k).real(), rho.matrix()(i, k).imag()});
    rows.push_back(row);
  }
  return json{{"dim", rho.dim()}, {"matrix", rows}};
}

DensityOperator load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::BadInput, std::string("JSON parse: ") + e.what());
  }
  return state_from_json(j);
}

std::string format_real(Real v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<Real>>& rows) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) fail(Errc::BadInput, "cannot write " + tmp);
    out << header << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out << ",";
        out << format_real(row[i]);
      }
      out << "\n";
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qdist
