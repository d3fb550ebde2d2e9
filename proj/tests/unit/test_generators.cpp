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


#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "mumw/generators.h"

namespace mumw {
namespace {

TEST(GellMann, CountAndOrder) {
  for (int d = 2; d <= 8; ++d) {
    const auto gens = gellmann_generators(d);
    ASSERT_EQ(gens.size(), static_cast<std::size_t>(d * d - 1));
    EXPECT_EQ(gens.front().label, GeneratorLabel::sym(1, 2));
    EXPECT_EQ(gens.back().label, GeneratorLabel::diag(d - 1));
  }
  EXPECT_THROW(gellmann_generators(1), std::invalid_argument);
}

TEST(GellMann, OrthonormalTracelessHermitian) {
  for (int d = 2; d <= 6; ++d) {
    const auto gens = gellmann_generators(d);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      EXPECT_NEAR(std::abs(gens[a].op.matrix().trace()), 0.0, 1e-15);
      for (std::size_t b = a; b < gens.size(); ++b) {
        EXPECT_NEAR(hs_inner(gens[a].op, gens[b].op), a == b ? 1.0 : 0.0, 1e-14);
      }
    }
  }
}

TEST(GellMann, QubitGeneratorsArePaulisOverSqrt2) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const auto x = gellmann_operator(2, GeneratorLabel::sym(1, 2));
  const auto y = gellmann_operator(2, GeneratorLabel::asym(1, 2));
  const auto z = gellmann_operator(2, GeneratorLabel::diag(1));
  EXPECT_NEAR(x(0, 1).real(), r2, 1e-15);
  EXPECT_NEAR(y(0, 1).imag(), -r2, 1e-15);
  EXPECT_NEAR(z(0, 0).real(), r2, 1e-15);
  EXPECT_NEAR(z(1, 1).real(), -r2, 1e-15);
}

TEST(GellMann, InvalidLabels) {
  EXPECT_THROW(gellmann_operator(3, GeneratorLabel::sym(2, 2)), std::invalid_argument);
  EXPECT_THROW(gellmann_operator(3, GeneratorLabel::asym(1, 4)), std::invalid_argument);
  EXPECT_THROW(gellmann_operator(3, GeneratorLabel::diag(3)), std::invalid_argument);
}

TEST(LabelText, Format) {
  EXPECT_EQ(GeneratorLabel::sym(1, 3).str(), "sym(1,3)");
  EXPECT_EQ(GeneratorLabel::asym(2, 3).str(), "asym(2,3)");
  EXPECT_EQ(GeneratorLabel::diag(2).str(), "diag(2)");
}

TEST(PartitionScheme, AllSchemesCoverEveryGeneratorOnce) {
  for (int d = 2; d <= 8; ++d) {
    for (const auto& name : partition_scheme_names()) {
      if (name == "paper-d3" && d != 3) {
        EXPECT_THROW(partition_scheme(name, d), std::invalid_argument);
        continue;
      }
      const auto s = partition_scheme(name, d);
      ASSERT_EQ(s.groups.size(), static_cast<std::size_t>(d + 1)) << name << " d=" << d;
      std::set<std::string> seen;
      for (const auto& g : s.groups) {
        EXPECT_EQ(g.size(), static_cast<std::size_t>(d - 1));
        for (const auto& l : g) EXPECT_TRUE(seen.insert(l.str()).second) << l.str();
      }
      EXPECT_EQ(seen.size(), static_cast<std::size_t>(d * d - 1));
    }
  }
  EXPECT_THROW(partition_scheme("nope", 3), std::invalid_argument);
}

TEST(PartitionScheme, DefaultMatchesExplicitD3Layout) {
  const auto def = partition_scheme("default", 3);
  const auto explicit_d3 = partition_scheme("paper-d3", 3);
  EXPECT_EQ(def.groups, explicit_d3.groups);
}

TEST(PartitionScheme, DefaultGroupStructure) {
  const auto s = partition_scheme("default", 6);
  // Group 1: antisymmetric generators of row 1.
  EXPECT_EQ(s.groups[0][0], GeneratorLabel::asym(1, 2));
  EXPECT_EQ(s.groups[0][4], GeneratorLabel::asym(1, 6));
  // Group 4: symmetric (j,4) for j<4, then antisymmetric (4,k).
  EXPECT_EQ(s.groups[3][0], GeneratorLabel::sym(1, 4));
  EXPECT_EQ(s.groups[3][3], GeneratorLabel::asym(4, 5));
  // Last group: the diagonal generators.
  EXPECT_EQ(s.groups[6][0], GeneratorLabel::diag(1));
}

TEST(PartitionGenerators, RejectsWrongCount) {
  auto gens = gellmann_generators(3);
  gens.pop_back();
  EXPECT_THROW(partition_generators(gens, 3, "default"), std::invalid_argument);
}

TEST(PartitionGenerators, RejectsNonOrthonormalInput) {
  auto gens = gellmann_generators(3);
  gens[0].op = HermitianOperator(2.0 * gens[0].op.matrix());
  EXPECT_THROW(partition_generators(gens, 3, "default"), std::invalid_argument);
}

TEST(PartitionGenerators, RejectsDuplicateLabels) {
  auto gens = gellmann_generators(3);
  gens[1].label = gens[0].label;
  EXPECT_THROW(partition_generators(gens, 3, "default"), std::invalid_argument);
}

TEST(GeneratorBasis, AccessAndAxioms) {
  const auto basis = make_generator_basis(4, "sequential");
  EXPECT_EQ(basis.size(), 15u);
  EXPECT_EQ(basis.at(1, 1).label, GeneratorLabel::sym(1, 2));
  EXPECT_THROW(basis.at(6, 1), std::out_of_range);
  EXPECT_THROW(basis.at(1, 4), std::out_of_range);
  EXPECT_TRUE(verify_generator_axioms(basis).passed());
}

TEST(GeneratorBasis, AxiomReportFlagsBrokenCell) {
  auto basis = make_generator_basis(3);
  basis.cells[0][0].op = HermitianOperator(basis.cells[0][0].op.matrix() + identity(3));
  const auto report = verify_generator_axioms(basis);
  EXPECT_FALSE(report.at("trace").pass());
  EXPECT_FALSE(report.at("orthonormality").pass());
  EXPECT_TRUE(report.at("hermiticity").pass());
}

}  // namespace
}  // namespace mumw
