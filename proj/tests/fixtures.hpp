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

// Shared test corpus: small semigroups with hand-checked structure, plus
// brute-force oracles that stay independent of the library's fast paths.

#ifndef MORITA_TESTS_FIXTURES_HPP_
#define MORITA_TESTS_FIXTURES_HPP_

#include <array>
#include <string>
#include <vector>

#include "morita/rees.hpp"
#include "morita/semigroup.hpp"

namespace fixtures {

using morita::FiniteSemigroup;

inline FiniteSemigroup trivial() {
  return FiniteSemigroup::from_rows({{0}}, {"e"});
}

/// Two-element chain semilattice, e0 < e1.
inline FiniteSemigroup e2() {
  return FiniteSemigroup::from_rows({{0, 0}, {0, 1}}, {"e0", "e1"});
}

/// Three-element chain semilattice.
inline FiniteSemigroup e3() {
  return FiniteSemigroup::from_rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                                    {"e0", "e1", "e2"});
}

inline FiniteSemigroup z2() {
  return FiniteSemigroup::from_rows({{0, 1}, {1, 0}}, {"1", "a"});
}

inline FiniteSemigroup z3() {
  return FiniteSemigroup::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
                                    {"1", "a", "a2"});
}

/// Five-element Brandt semigroup: matrix units e11, e12, e21, e22 and zero.
inline FiniteSemigroup b2() {
  return FiniteSemigroup::from_rows(
      {{0, 0, 0, 0, 0},
       {0, 1, 2, 0, 0},
       {0, 0, 0, 1, 2},
       {0, 3, 4, 0, 0},
       {0, 0, 0, 3, 4}},
      {"0", "e11", "e12", "e21", "e22"});
}

/// Symmetric inverse monoid on two points: all 7 partial injections,
/// composed left factor first. Built from the maps themselves.
inline FiniteSemigroup sym_inverse_2() {
  using PMap = std::array<int, 2>;  // images of 1 and 2; 0 = undefined
  std::vector<PMap> maps;
  std::vector<std::string> labels;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      if (a != 0 && a == b) continue;  // not injective
      maps.push_back({a, b});
    }
  }
  auto name = [](const PMap& f) {
    if (f == PMap{0, 0}) return std::string("0");
    if (f == PMap{1, 2}) return std::string("1");
    if (f == PMap{2, 1}) return std::string("s");
    std::string out;
    if (f[0] != 0) out += "1>" + std::to_string(f[0]);
    if (f[1] != 0) out += (out.empty() ? "" : ",") + std::string("2>") +
                          std::to_string(f[1]);
    return "(" + out + ")";
  };
  const int n = static_cast<int>(maps.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(name(maps[a]));
    for (int b = 0; b < n; ++b) {
      PMap c{0, 0};
      for (int x = 1; x <= 2; ++x) {
        const int mid = maps[a][x - 1];
        c[x - 1] = (mid == 0) ? 0 : maps[b][mid - 1];
      }
      int id = -1;
      for (int k = 0; k < n; ++k) {
        if (maps[k] == c) {
          id = k;
          break;
        }
      }
      rows[a][b] = id;
    }
  }
  return FiniteSemigroup::from_rows(rows, labels);
}

/// B2 with an adjoined identity: a 6-element inverse monoid.
inline FiniteSemigroup b2_monoid() {
  return FiniteSemigroup::from_rows(
      {{0, 0, 0, 0, 0, 0},
       {0, 1, 2, 0, 0, 1},
       {0, 0, 0, 1, 2, 2},
       {0, 3, 4, 0, 0, 3},
       {0, 0, 0, 3, 4, 4},
       {0, 1, 2, 3, 4, 5}},
      {"0", "e11", "e12", "e21", "e22", "1"});
}

/// Right-zero semigroup of order 2: regular, orthodox, not inverse.
inline FiniteSemigroup right_zero_2() {
  return FiniteSemigroup::from_rows({{0, 1}, {0, 1}}, {"r0", "r1"});
}

/// Left-zero semigroup {a,b} with an adjoined identity: a 3-element band
/// that is orthodox but not locally inverse (1S1 = S is not inverse).
inline FiniteSemigroup left_zero_monoid() {
  return FiniteSemigroup::from_rows({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}},
                                    {"1", "a", "b"});
}

/// Null semigroup of order 2: not regular, no local units.
inline FiniteSemigroup null_2() {
  return FiniteSemigroup::from_rows({{0, 0}, {0, 0}}, {"0", "a"});
}

struct Named {
  std::string name;
  FiniteSemigroup semigroup;
};

/// The acceptance corpus.
inline std::vector<Named> corpus() {
  return {{"trivial", trivial()}, {"E2", e2()}, {"E3", e3()},
          {"Z2", z2()},           {"Z3", z3()}, {"B2", b2()},
          {"I2", sym_inverse_2()}};
}

/// Unpruned enumeration oracle: every one of the n^(m*m) grids, filtered by
/// validate_mcalister, in lexicographic order. Small inputs only.
inline std::vector<morita::SandwichFunction> naive_enumerate_mcalister(
    const FiniteSemigroup& S, int m) {
  const int n = S.order();
  const size_t cells = static_cast<size_t>(m) * m;
  std::vector<int> entries(cells, 0);
  std::vector<morita::SandwichFunction> out;
  while (true) {
    auto p = morita::SandwichFunction::create(S, m, entries);
    if (morita::validate_mcalister(p).all()) {
      out.push_back(p);
    }
    size_t k = cells;
    bool done = true;
    while (k > 0) {
      --k;
      if (++entries[k] < n) {
        done = false;
        break;
      }
      entries[k] = 0;
    }
    if (done) break;
  }
  return out;
}

/// All partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    int k = n - 1;
    for (; k > 0; --k) {
      int max_prefix = 0;
      for (int i = 0; i < k; ++i) {
        max_prefix = std::max(max_prefix, rgs[i]);
      }
      if (rgs[k] <= max_prefix) {
        ++rgs[k];
        for (int i = k + 1; i < n; ++i) {
          rgs[i] = 0;
        }
        break;
      }
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace fixtures

#endif  // MORITA_TESTS_FIXTURES_HPP_
