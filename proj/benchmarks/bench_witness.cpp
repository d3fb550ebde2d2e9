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


#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "mumw/criteria.h"
#include "mumw/fixtures.h"
#include "mumw/generators.h"
#include "mumw/measurements.h"
#include "mumw/rotations.h"
#include "mumw/states.h"
#include "mumw/witness.h"

namespace {

mumw::MUM constructed(int d) {
  const auto basis = mumw::make_generator_basis(d);
  return mumw::build_mums(basis, 0.5 * mumw::max_feasible_t(basis));
}

void BM_BuildMums(benchmark::State& state) {
  const auto basis = mumw::make_generator_basis(static_cast<int>(state.range(0)));
  const double t = 0.5 * mumw::max_feasible_t(basis);
  for (auto _ : state) benchmark::DoNotOptimize(mumw::build_mums(basis, t));
}
BENCHMARK(BM_BuildMums)->DenseRange(2, 8, 2);

void BM_WitnessDirect(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto mum = constructed(d);
  const auto rots = mumw::identity_rotations(d, d + 1);
  for (auto _ : state) benchmark::DoNotOptimize(mumw::build_witness_direct(mum, rots));
}
BENCHMARK(BM_WitnessDirect)->DenseRange(2, 8, 2);

void BM_WitnessChoi(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto mum = constructed(d);
  const auto rots = mumw::identity_rotations(d, d + 1);
  for (auto _ : state) benchmark::DoNotOptimize(mumw::build_witness_choi(mum, rots));
}
BENCHMARK(BM_WitnessChoi)->DenseRange(2, 8, 2);

void BM_FixtureD3EndToEnd(benchmark::State& state) {
  const double pi = std::numbers::pi;
  const std::vector<double> angles{pi / 3, pi / 3, 0.0, 0.0};
  for (auto _ : state) {
    const auto w = mumw::build_witness_direct(mumw::mum_fixture_d3(), mumw::circulant_rotations_d3(angles));
    benchmark::DoNotOptimize(mumw::evaluate_witness(w, mumw::rho_fixture_3x3()));
  }
}
BENCHMARK(BM_FixtureD3EndToEnd);

void BM_BlockPositivityScan(benchmark::State& state) {
  const auto w = mumw::build_witness_direct(constructed(3), mumw::identity_rotations(3, 4));
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mumw::block_positivity_scan(w, 10000, 1, workers));
}
BENCHMARK(BM_BlockPositivityScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
