// Copyright 2026 The mumw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "mumw/json_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mumw {

namespace {

Json row_major(const ComplexMatrix& m, bool imag) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

Json vector_to_json(const ComplexVector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"re", re}, {"im", im}};
}

ComplexVector vector_from_json(const Json& j) {
  const auto re = field(j, "re").get<std::vector<double>>();
  const auto im = field(j, "im").get<std::vector<double>>();
  if (re.size() != im.size()) throw std::invalid_argument("JSON: vector re/im length mismatch");
  ComplexVector v(static_cast<Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Index>(i)) = Complex(re[i], im[i]);
  return v;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_json: matrix is not square");
  return {{"dim", m.rows()}, {"re", row_major(m, false)}, {"im", row_major(m, true)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Index n = field(j, "dim").get<Index>();
  if (n < 1) throw std::invalid_argument("JSON: matrix dim must be >= 1");
  const auto re = field(j, "re").get<std::vector<std::vector<double>>>();
  const auto im = field(j, "im").get<std::vector<std::vector<double>>>();
  if (static_cast<Index>(re.size()) != n || static_cast<Index>(im.size()) != n) {
    throw std::invalid_argument("JSON: matrix row count does not match dim");
  }
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    if (static_cast<Index>(re[r].size()) != n || static_cast<Index>(im[r].size()) != n) {
      throw std::invalid_argument("JSON: matrix row length does not match dim");
    }
    for (Index c = 0; c < n; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
  }
  return m;
}

Json mum_to_json(const MUM& mum) {
  Json elements = Json::array();
  for (int b = 1; b <= mum.L(); ++b) {
    for (int n = 1; n <= mum.d; ++n) {
      elements.push_back({{"b", b}, {"n", n}, {"matrix", matrix_to_json(mum.at(b, n).matrix())}});
    }
  }
  Json j = {{"d", mum.d}, {"L", mum.L()}, {"kappa", mum.kappa}, {"id", mum.id}, {"elements", elements}};
  j["t"] = mum.t ? Json(*mum.t) : Json(nullptr);
  return j;
}

MUM mum_from_json(const Json& j, const ToleranceConfig& cfg, ValidationPolicy policy) {
  const int d = field(j, "d").get<int>();
  const int L = field(j, "L").get<int>();
  if (d < 2 || L < 1) throw std::invalid_argument("JSON: MUM needs d >= 2 and L >= 1");
  std::vector<std::vector<std::optional<HermitianOperator>>> grid(L, std::vector<std::optional<HermitianOperator>>(d));
  for (const auto& e : field(j, "elements")) {
    const int b = field(e, "b").get<int>();
    const int n = field(e, "n").get<int>();
    if (b < 1 || b > L || n < 1 || n > d) throw std::invalid_argument("JSON: MUM element index out of range");
    if (grid[b - 1][n - 1]) throw std::invalid_argument("JSON: duplicate MUM element");
    grid[b - 1][n - 1] = validate_hermitian(matrix_from_json(field(e, "matrix")), cfg, policy).op;
  }
  std::vector<std::vector<HermitianOperator>> elements(L);
  for (int b = 0; b < L; ++b) {
    for (int n = 0; n < d; ++n) {
      if (!grid[b][n]) throw std::invalid_argument("JSON: missing MUM element");
      elements[b].push_back(*grid[b][n]);
    }
  }
  std::optional<double> t;
  if (j.contains("t") && !j.at("t").is_null()) t = j.at("t").get<double>();
  const std::string id = j.contains("id") ? j.at("id").get<std::string>() : std::string("file");
  MUM mum = make_mum(d, std::move(elements), t, id, cfg, policy);
  if (j.contains("kappa") && std::abs(j.at("kappa").get<double>() - mum.kappa) > 1e-9) {
    throw std::invalid_argument("JSON: stored kappa disagrees with the elements");
  }
  return mum;
}

Json mub_to_json(const MUBSet& mubs) {
  Json bases = Json::array();
  for (const auto& basis : mubs.bases) {
    Json vectors = Json::array();
    for (const auto& v : basis) vectors.push_back(vector_to_json(v));
    bases.push_back(std::move(vectors));
  }
  return {{"d", mubs.d}, {"bases", bases}};
}

MUBSet mub_from_json(const Json& j) {
  MUBSet mubs{field(j, "d").get<int>(), {}};
  for (const auto& basis : field(j, "bases")) {
    std::vector<ComplexVector> vectors;
    for (const auto& v : basis) vectors.push_back(vector_from_json(v));
    mubs.bases.push_back(std::move(vectors));
  }
  return mubs;
}

Json generator_basis_to_json(const GeneratorBasis& basis) {
  Json cells = Json::array();
  for (std::size_t b = 0; b < basis.cells.size(); ++b) {
    for (std::size_t n = 0; n < basis.cells[b].size(); ++n) {
      const auto& g = basis.cells[b][n];
      cells.push_back({{"b", b + 1}, {"n", n + 1}, {"label", g.label.str()}, {"matrix", matrix_to_json(g.op.matrix())}});
    }
  }
  return {{"d", basis.d}, {"scheme", basis.scheme}, {"cells", cells}};
}

Json rotations_to_json(const RotationSet& rots) {
  Json list = Json::array();
  for (const auto& o : rots.rotations) {
    Json rows = Json::array();
    for (Index r = 0; r < o.rows(); ++r) {
      Json row = Json::array();
      for (Index c = 0; c < o.cols(); ++c) row.push_back(o(r, c));
      rows.push_back(std::move(row));
    }
    list.push_back(std::move(rows));
  }
  return {{"d", rots.d}, {"rotations", list}};
}

RotationSet rotations_from_json(const Json& j, const ToleranceConfig& cfg) {
  const int d = field(j, "d").get<int>();
  std::vector<RealMatrix> rotations;
  for (const auto& rows : field(j, "rotations")) {
    const auto v = rows.get<std::vector<std::vector<double>>>();
    RealMatrix o(static_cast<Index>(v.size()), v.empty() ? 0 : static_cast<Index>(v[0].size()));
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (static_cast<Index>(v[r].size()) != o.cols()) throw std::invalid_argument("JSON: ragged rotation matrix");
      for (std::size_t c = 0; c < v[r].size(); ++c) o(static_cast<Index>(r), static_cast<Index>(c)) = v[r][c];
    }
    rotations.push_back(std::move(o));
  }
  return make_rotation_set(d, std::move(rotations), cfg);
}

Json witness_to_json(const Witness& w) {
  Json j = matrix_to_json(w.matrix.matrix());
  j["d"] = w.d;
  j["L"] = w.L;
  j["kappa"] = w.kappa;
  j["route"] = to_string(w.provenance.route);
  j["convention"] = to_string(w.provenance.convention);
  j["angles"] = w.provenance.angles;
  j["mum_id"] = w.provenance.mum_id;
  j["rotations"] = w.provenance.rotations;
  return j;
}

Witness witness_from_json(const Json& j, const ToleranceConfig& cfg) {
  Witness w;
  w.d = field(j, "d").get<int>();
  w.L = field(j, "L").get<int>();
  w.kappa = field(j, "kappa").get<double>();
  w.matrix = validate_hermitian(matrix_from_json(j), cfg).op;
  if (w.matrix.dim() != static_cast<Index>(w.d) * w.d) throw std::invalid_argument("JSON: witness dim is not d^2");
  const std::string route = j.value("route", "direct");
  if (route != "direct" && route != "choi") throw std::invalid_argument("JSON: unknown witness route '" + route + "'");
  w.provenance.route = route == "choi" ? WitnessRoute::choi : WitnessRoute::direct;
  w.provenance.convention = factor_convention_from_string(j.value("convention", "conjugated"));
  w.provenance.angles = j.value("angles", std::vector<double>{});
  w.provenance.mum_id = j.value("mum_id", "");
  w.provenance.rotations = j.value("rotations", "");
  return w;
}

Json state_to_json(const DensityMatrix& rho) {
  Json j = matrix_to_json(rho.matrix());
  j["policy"] = to_string(rho.policy());
  return j;
}

DensityMatrix state_from_json(const Json& j, const ToleranceConfig& cfg) {
  const auto policy = validation_policy_from_string(j.value("policy", "strict"));
  return DensityMatrix::from_matrix(matrix_from_json(j), policy, cfg);
}

Json report_to_json(const DetectionReport& r) {
  return {{"criterion", r.criterion}, {"value", r.value},   {"threshold", r.threshold}, {"detected", r.detected},
          {"mum_id", r.mum_id},       {"angles", r.angles}, {"convention", r.convention}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace mumw
