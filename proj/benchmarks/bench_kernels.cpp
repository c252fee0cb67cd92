/*
 *   Copyright 2026 The morita authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Microbenchmarks for the combinatorial search kernels: sandwich-function
// enumeration, Rees construction, congruence computation, isomorphism
// search and category-equivalence decision.

#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "morita/biset.hpp"
#include "morita/category.hpp"
#include "morita/congruence.hpp"
#include "morita/hom.hpp"
#include "morita/rees.hpp"
#include "morita/semigroup.hpp"

namespace {

using namespace morita;

FiniteSemigroup brandt_b2() {
  return FiniteSemigroup::from_rows({{0, 0, 0, 0, 0},
                                     {0, 1, 2, 0, 0},
                                     {0, 0, 0, 1, 2},
                                     {0, 3, 4, 0, 0},
                                     {0, 0, 0, 3, 4}});
}

// Symmetric inverse monoid on two points, seven partial injections.
FiniteSemigroup sym_inverse_2() {
  using PMap = std::array<int, 2>;
  std::vector<PMap> maps;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      if (a != 0 && a == b) continue;
      maps.push_back({a, b});
    }
  }
  const int n = static_cast<int>(maps.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      PMap c{0, 0};
      for (int x = 0; x < 2; ++x) {
        c[x] = (maps[a][x] == 0) ? 0 : maps[b][maps[a][x] - 1];
      }
      for (int k = 0; k < n; ++k) {
        if (maps[k] == c) rows[a][b] = k;
      }
    }
  }
  return FiniteSemigroup::from_rows(rows);
}

void BM_EnumerateMcalister_I2(benchmark::State& state) {
  const auto S = sym_inverse_2();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    uint64_t count = enumerate_mcalister(
        S, m, [](const SandwichFunction&) { return true; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateMcalister_I2)->Arg(2)->Arg(3);

void BM_BuildReesRegular_I2(benchmark::State& state) {
  const auto S = sym_inverse_2();
  const auto functions = enumerate_mcalister(S, 3, 1);
  for (auto _ : state) {
    auto rm = build_rees(functions.front(), ReesMode::regular);
    benchmark::DoNotOptimize(rm.size());
  }
}
BENCHMARK(BM_BuildReesRegular_I2);

void BM_MinInverseCongruence_ReesOverI2(benchmark::State& state) {
  const auto S = sym_inverse_2();
  const auto rm =
      build_rees(enumerate_mcalister(S, 3, 1).front(), ReesMode::regular);
  for (auto _ : state) {
    auto gamma = min_inverse_congruence(rm.semigroup());
    benchmark::DoNotOptimize(gamma.num_classes());
  }
}
BENCHMARK(BM_MinInverseCongruence_ReesOverI2);

void BM_GammaClosedForm_ReesOverI2(benchmark::State& state) {
  const auto S = sym_inverse_2();
  const auto rm =
      build_rees(enumerate_mcalister(S, 3, 1).front(), ReesMode::regular);
  for (auto _ : state) {
    auto gamma = gamma_closed_form(rm);
    benchmark::DoNotOptimize(gamma.num_classes());
  }
}
BENCHMARK(BM_GammaClosedForm_ReesOverI2);

void BM_FindIsomorphism_ShuffledB2(benchmark::State& state) {
  const auto B2 = brandt_b2();
  const std::vector<int> perm{4, 2, 0, 3, 1};
  std::vector<std::vector<int>> rows(5, std::vector<int>(5));
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      rows[perm[a]][perm[b]] = perm[B2.product(a, b)];
    }
  }
  const auto shuffled = FiniteSemigroup::from_rows(rows);
  for (auto _ : state) {
    auto iso = find_isomorphism(B2, shuffled);
    benchmark::DoNotOptimize(iso.has_value());
  }
}
BENCHMARK(BM_FindIsomorphism_ShuffledB2);

void BM_CauchyCompletion_ReesOverI2(benchmark::State& state) {
  const auto S = sym_inverse_2();
  const auto rm =
      build_rees(enumerate_mcalister(S, 3, 1).front(), ReesMode::regular);
  for (auto _ : state) {
    auto C = cauchy_completion(rm.semigroup());
    benchmark::DoNotOptimize(C.num_morphisms());
  }
}
BENCHMARK(BM_CauchyCompletion_ReesOverI2);

void BM_DecideEquivalence_I2vsPartner(benchmark::State& state) {
  const auto S = sym_inverse_2();
  const auto partner = synthesize_partner(identity_biset(S));
  const auto CS = cauchy_completion(S);
  const auto CP = cauchy_completion(partner.im);
  for (auto _ : state) {
    auto verdict = decide_equivalence(CS, CP);
    benchmark::DoNotOptimize(verdict.equivalent);
  }
}
BENCHMARK(BM_DecideEquivalence_I2vsPartner);

void BM_SynthesizePartner_B2(benchmark::State& state) {
  const auto B = identity_biset(brandt_b2());
  for (auto _ : state) {
    auto partner = synthesize_partner(B);
    benchmark::DoNotOptimize(partner.im.order());
  }
}
BENCHMARK(BM_SynthesizePartner_B2);

}  // namespace

BENCHMARK_MAIN();
