// Copyright 2026 The mzi-qkd Authors
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

#include <benchmark/benchmark.h>

#include "mziqkd/measurement.hpp"
#include "mziqkd/protocol.hpp"
#include "mziqkd/rng.hpp"
#include "mziqkd/source.hpp"
#include "mziqkd/verify.hpp"

namespace {

using namespace mziqkd;

void BM_InterferometerCompose(benchmark::State& state) {
  const Phase alpha(1.234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(interferometer(alpha));
  }
}
BENCHMARK(BM_InterferometerCompose);

void BM_PairDistribution(benchmark::State& state) {
  const PairState psi = psi_plus();
  const Apparatus alice = Apparatus::interferometer(Phase(0.7));
  const Apparatus bob = Apparatus::interferometer(Phase(2.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_distribution(psi, alice, bob));
  }
}
BENCHMARK(BM_PairDistribution);

void BM_SampleJoint(benchmark::State& state) {
  const auto dist = pair_distribution(psi_plus(),
                                      Apparatus::interferometer(Phase(0.7)),
                                      Apparatus::interferometer(Phase(2.1)));
  RngStream rng(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist.sample_joint(rng));
  }
}
BENCHMARK(BM_SampleJoint);

void BM_RunSession(benchmark::State& state) {
  SessionConfig config;
  config.n_pairs = static_cast<std::uint64_t>(state.range(0));
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_session(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunSession)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_identity_suite());
  }
}
BENCHMARK(BM_IdentitySuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
