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


#include "mumw/fixtures.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <stdexcept>

namespace mumw {

namespace detail {
const std::map<std::string, std::string>& embedded_fixture_sources();
}  // namespace detail

using nlohmann::json;

Complex parse_fixture_entry(std::string_view text, const std::map<std::string, double>& magnitudes) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  static const std::regex complex_form(R"(([+-]?)(\d+(?:\.\d+)?)([+-])(\d+(?:\.\d+)?)i)");
  static const std::regex phase_form(R"(([+-]?)(\d+(?:\.\d+)?)(i?)(w(?:\^(\d+))?)?)");
  std::smatch m;

  auto magnitude = [&](const std::string& token) {
    auto it = magnitudes.find(token);
    return it != magnitudes.end() ? it->second : std::stod(token);
  };

  if (std::regex_match(s, m, complex_form)) {
    const double re = (m[1] == "-" ? -1.0 : 1.0) * magnitude(m[2]);
    const double im = (m[3] == "-" ? -1.0 : 1.0) * std::stod(m[4]);
    return {re, im};
  }
  if (std::regex_match(s, m, phase_form)) {
    Complex z = (m[1] == "-" ? -1.0 : 1.0) * magnitude(m[2]);
    if (m[3].matched && m[3].length() > 0) z *= Complex(0, 1);
    if (m[4].matched) {
      const int power = m[5].matched ? std::stoi(m[5]) : 1;
      const double phase = 2.0 * std::numbers::pi * (power % 3) / 3.0;
      z *= Complex(std::cos(phase), std::sin(phase));
    }
    return z;
  }
  throw std::invalid_argument("unrecognized fixture entry '" + std::string(text) + "'");
}

namespace {

const json& need(const json& j, const char* key, const std::string& name) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument("fixture " + name + ": missing field '" + key + "'");
  }
  return j.at(key);
}

using Table = std::vector<std::vector<std::string>>;

Table table_of(const json& j, const std::string& name) {
  Table t = j.get<Table>();
  if (t.empty()) throw std::invalid_argument("fixture " + name + ": empty table");
  for (const auto& row : t) {
    if (row.size() != t[0].size()) throw std::invalid_argument("fixture " + name + ": ragged table");
  }
  return t;
}

void apply_erratum(Table& t, int row, int col, const std::string& recorded, const std::string& corrected,
                   const std::string& name) {
  if (row < 1 || col < 1 || row > static_cast<int>(t.size()) || col > static_cast<int>(t[0].size())) {
    throw std::invalid_argument("fixture " + name + ": erratum position out of range");
  }
  std::string& cell = t[row - 1][col - 1];
  if (cell != recorded) {
    throw std::invalid_argument("fixture " + name + ": erratum expects '" + recorded + "' at (" +
                                std::to_string(row) + "," + std::to_string(col) + "), found '" + cell + "'");
  }
  cell = corrected;
}

ComplexMatrix to_matrix(const Table& t, const std::map<std::string, double>& magnitudes) {
  ComplexMatrix m(static_cast<Index>(t.size()), static_cast<Index>(t[0].size()));
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = parse_fixture_entry(t[r][c], magnitudes);
    }
  }
  return m;
}

std::map<std::string, double> magnitude_readings(const json& j, int d, const std::string& name) {
  std::map<std::string, double> out;
  if (!j.contains("magnitude_readings")) return out;
  for (const auto& r : j.at("magnitude_readings")) {
    const std::string value = need(r, "value", name).get<std::string>();
    double v = 0.0;
    if (value == "1/sqrt(d)") {
      v = 1.0 / std::sqrt(static_cast<double>(d));
    } else if (value == "1/d") {
      v = 1.0 / d;
    } else {
      throw std::invalid_argument("fixture " + name + ": unsupported reading '" + value + "'");
    }
    out[need(r, "recorded", name).get<std::string>()] = v;
  }
  return out;
}

}  // namespace

const FixtureStore& FixtureStore::embedded() {
  static const FixtureStore store = [] {
    FixtureStore s;
    for (const auto& [name, text] : detail::embedded_fixture_sources()) s.sources_[name] = json::parse(text);
    return s;
  }();
  return store;
}

FixtureStore FixtureStore::from_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("fixture directory not found: " + dir.string());
  FixtureStore s;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::runtime_error("fixture " + path.string() + ": " + e.what());
    }
    const std::string name = j.value("name", path.stem().string());
    s.sources_[name] = std::move(j);
  }
  return s;
}

std::vector<std::string> FixtureStore::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : sources_) out.push_back(name);
  return out;
}

const json& FixtureStore::raw(const std::string& name) const {
  auto it = sources_.find(name);
  if (it == sources_.end()) throw std::invalid_argument("unknown fixture '" + name + "'");
  return it->second;
}

std::string FixtureStore::kind(const std::string& name) const { return need(raw(name), "kind", name).get<std::string>(); }

MUM FixtureStore::mum(const std::string& name, const ToleranceConfig& cfg) const {
  const json& j = raw(name);
  if (kind(name) != "mum") throw std::invalid_argument("fixture " + name + " is not a MUM");
  const int d = need(j, "d", name).get<int>();
  const int L = need(j, "L", name).get<int>();
  const auto diag_readings = j.value("identity_diagonal_readings", std::vector<std::string>{});
  const auto magnitudes = magnitude_readings(j, d, name);

  std::map<std::pair<int, int>, Table> tables;
  for (const auto& e : need(j, "elements", name)) {
    const int b = need(e, "b", name).get<int>();
    const int n = need(e, "n", name).get<int>();
    if (b < 1 || b > L || n < 1 || n > d) throw std::invalid_argument("fixture " + name + ": element index out of range");
    Table t = table_of(need(e, "entries", name), name);
    if (static_cast<int>(t.size()) != d || static_cast<int>(t[0].size()) != d) {
      throw std::invalid_argument("fixture " + name + ": element is not d x d");
    }
    if (!tables.emplace(std::pair{b, n}, std::move(t)).second) {
      throw std::invalid_argument("fixture " + name + ": duplicate element");
    }
  }
  for (const auto& e : j.value("errata", json::array())) {
    auto it = tables.find({need(e, "b", name).get<int>(), need(e, "n", name).get<int>()});
    if (it == tables.end()) throw std::invalid_argument("fixture " + name + ": erratum for missing element");
    apply_erratum(it->second, need(e, "row", name).get<int>(), need(e, "col", name).get<int>(),
                  need(e, "recorded", name).get<std::string>(), need(e, "corrected", name).get<std::string>(), name);
  }

  std::vector<std::vector<HermitianOperator>> elements(L);
  for (int b = 1; b <= L; ++b) {
    for (int n = 1; n <= d; ++n) {
      auto it = tables.find({b, n});
      if (it == tables.end()) throw std::invalid_argument("fixture " + name + ": missing element");
      ComplexMatrix m = to_matrix(it->second, magnitudes);
      for (int i = 0; i < d; ++i) {
        const auto& cell = it->second[i][i];
        if (std::find(diag_readings.begin(), diag_readings.end(), cell) != diag_readings.end()) m(i, i) = 1.0 / d;
      }
      elements[b - 1].push_back(validate_hermitian(m, cfg, ValidationPolicy::fixture).op);
    }
  }
  return make_mum(d, std::move(elements), std::nullopt, "fixture:" + name, cfg, ValidationPolicy::fixture);
}

MUBSet FixtureStore::mub(const std::string& name) const {
  const json& j = raw(name);
  if (kind(name) != "mub") throw std::invalid_argument("fixture " + name + " is not a MUB set");
  const int d = need(j, "d", name).get<int>();
  const auto magnitudes = magnitude_readings(j, d, name);
  std::vector<Table> tables;
  for (const auto& b : need(j, "bases", name)) {
    Table t = table_of(b, name);
    if (static_cast<int>(t.size()) != d || static_cast<int>(t[0].size()) != d) {
      throw std::invalid_argument("fixture " + name + ": basis is not d x d");
    }
    tables.push_back(std::move(t));
  }
  for (const auto& e : j.value("errata", json::array())) {
    const int basis = need(e, "basis", name).get<int>();
    if (basis < 1 || basis > static_cast<int>(tables.size())) {
      throw std::invalid_argument("fixture " + name + ": erratum for missing basis");
    }
    apply_erratum(tables[basis - 1], need(e, "row", name).get<int>(), need(e, "col", name).get<int>(),
                  need(e, "recorded", name).get<std::string>(), need(e, "corrected", name).get<std::string>(), name);
  }
  MUBSet set{d, {}};
  for (const auto& t : tables) {
    const ComplexMatrix m = to_matrix(t, magnitudes);
    std::vector<ComplexVector> vectors;
    for (int c = 0; c < d; ++c) vectors.push_back(m.col(c));
    set.bases.push_back(std::move(vectors));
  }
  return set;
}

DensityMatrix FixtureStore::state(const std::string& name, const ToleranceConfig& cfg) const {
  const json& j = raw(name);
  const std::string k = kind(name);
  const auto dims = need(j, "dims", name).get<std::vector<int>>();
  Index expected = 1;
  for (int x : dims) expected *= x;

  ComplexMatrix m;
  if (k == "state") {
    m = to_matrix(table_of(need(j, "entries", name), name), {});
  } else if (k == "block-state") {
    const json& blocks = need(j, "blocks", name);
    std::map<std::string, ComplexMatrix> parts;
    for (const auto& [key, value] : blocks.items()) {
      if (value.is_string()) {
        parts[key] = ComplexMatrix::Constant(1, 1, parse_fixture_entry(value.get<std::string>()));
      } else if (!value.empty() && value[0].is_string()) {
        // A column vector.
        const auto v = value.get<std::vector<std::string>>();
        ComplexMatrix col(static_cast<Index>(v.size()), 1);
        for (std::size_t i = 0; i < v.size(); ++i) col(static_cast<Index>(i), 0) = parse_fixture_entry(v[i]);
        parts[key] = col;
      } else {
        parts[key] = to_matrix(table_of(value, name), {});
      }
    }
    auto block = [&](const std::string& label) -> ComplexMatrix {
      const bool transposed = label.size() > 2 && label.ends_with("^t");
      const std::string base = transposed ? label.substr(0, label.size() - 2) : label;
      auto it = parts.find(base);
      if (it == parts.end()) throw std::invalid_argument("fixture " + name + ": unknown block '" + base + "'");
      return transposed ? ComplexMatrix(it->second.transpose()) : it->second;
    };
    const auto layout = need(j, "layout", name).get<std::vector<std::vector<std::string>>>();
    if (layout.empty()) throw std::invalid_argument("fixture " + name + ": empty layout");
    std::vector<Index> heights;
    std::vector<Index> widths;
    for (const auto& row : layout) heights.push_back(block(row.at(0)).rows());
    for (const auto& label : layout[0]) widths.push_back(block(label).cols());
    Index rows = 0;
    Index cols = 0;
    for (Index h : heights) rows += h;
    for (Index w : widths) cols += w;
    m = ComplexMatrix::Zero(rows, cols);
    Index r0 = 0;
    for (std::size_t r = 0; r < layout.size(); ++r) {
      if (layout[r].size() != widths.size()) throw std::invalid_argument("fixture " + name + ": ragged layout");
      Index c0 = 0;
      for (std::size_t c = 0; c < layout[r].size(); ++c) {
        const ComplexMatrix b = block(layout[r][c]);
        if (b.rows() != heights[r] || b.cols() != widths[c]) {
          throw std::invalid_argument("fixture " + name + ": block '" + layout[r][c] + "' does not fit the layout");
        }
        m.block(r0, c0, b.rows(), b.cols()) = b;
        c0 += widths[c];
      }
      r0 += heights[r];
    }
  } else {
    throw std::invalid_argument("fixture " + name + " is not a state");
  }
  if (m.rows() != expected || m.cols() != expected) {
    throw std::invalid_argument("fixture " + name + ": assembled dimension " + std::to_string(m.rows()) +
                                " does not match dims product " + std::to_string(expected));
  }
  return DensityMatrix::from_matrix(m, ValidationPolicy::fixture, cfg);
}

FactorConvention FixtureStore::witness_convention(const std::string& name) const {
  return factor_convention_from_string(raw(name).value("witness_convention", "conjugated"));
}

MUM mum_fixture_d3() { return FixtureStore::embedded().mum("mum-d3"); }
MUM mum_fixture_d6() { return FixtureStore::embedded().mum("mum-d6"); }
MUBSet mub_fixture_d6() { return FixtureStore::embedded().mub("mub-d6"); }
DensityMatrix rho_fixture_3x3() { return FixtureStore::embedded().state("rho-3x3"); }
DensityMatrix rho_fixture_6x6() { return FixtureStore::embedded().state("rho-6x6"); }

}  // namespace mumw
