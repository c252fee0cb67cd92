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

#include "morita/congruence.hpp"

#include <algorithm>
#include <map>

namespace morita {

std::optional<std::array<int, 4>> compatibility_witness(
    const FiniteSemigroup& S, const Partition& p) {
  const int n = S.order();
  // Left and right compatibility with one varying side suffices: together
  // they give ab ~ a'b ~ a'b'.
  for (int a = 0; a < n; ++a) {
    for (int a2 = a + 1; a2 < n; ++a2) {
      if (p.class_of[a] != p.class_of[a2]) continue;
      for (int b = 0; b < n; ++b) {
        if (p.class_of[S.product(a, b)] != p.class_of[S.product(a2, b)]) {
          return std::array<int, 4>{a, a2, b, b};
        }
        if (p.class_of[S.product(b, a)] != p.class_of[S.product(b, a2)]) {
          return std::array<int, 4>{b, b, a, a2};
        }
      }
    }
  }
  return std::nullopt;
}

Congruence make_congruence(const FiniteSemigroup& S, const Partition& p) {
  if (auto w = compatibility_witness(S, p)) {
    throw DomainError(Errc::not_compatible,
                      "partition is not compatible with multiplication",
                      {{"a", std::to_string((*w)[0])},
                       {"a2", std::to_string((*w)[1])},
                       {"b", std::to_string((*w)[2])},
                       {"b2", std::to_string((*w)[3])}});
  }
  return Congruence{Partition::from_class_of(p.class_of)};
}

Quotient quotient(const FiniteSemigroup& S, const Congruence& c) {
  const int n = S.order();
  const Partition& p = c.partition;
  const int k = p.num_classes;

  std::vector<int> table(static_cast<size_t>(k) * k, -1);
  std::vector<std::pair<int, int>> defined_by(static_cast<size_t>(k) * k);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const size_t cell =
          static_cast<size_t>(p.class_of[a]) * k + p.class_of[b];
      const int value = p.class_of[S.product(a, b)];
      if (table[cell] < 0) {
        table[cell] = value;
        defined_by[cell] = {a, b};
      } else if (table[cell] != value) {
        throw DomainError(Errc::not_compatible,
                          "quotient table is not well-defined",
                          {{"a", std::to_string(defined_by[cell].first)},
                           {"a2", std::to_string(a)},
                           {"b", std::to_string(defined_by[cell].second)},
                           {"b2", std::to_string(b)}});
      }
    }
  }

  std::vector<int> least_rep(k, -1);
  for (int s = n - 1; s >= 0; --s) {
    least_rep[p.class_of[s]] = s;
  }
  std::vector<std::string> labels(k);
  for (int c2 = 0; c2 < k; ++c2) {
    labels[c2] = "[" + S.label(least_rep[c2]) + "]";
  }

  FiniteSemigroup Q =
      FiniteSemigroup::from_flat(k, std::move(table), std::move(labels));
  return Quotient{Q, SemigroupMap{S, Q, p.class_of}};
}

Congruence min_inverse_congruence(const FiniteSemigroup& S) {
  {
    const ClassificationReport rep = classify(S);
    if (!rep.is_orthodox) {
      std::map<std::string, std::string> details;
      if (rep.regular_witness) {
        details["non_regular_element"] = std::to_string(*rep.regular_witness);
      }
      if (rep.orthodox_witness) {
        details["e"] = std::to_string(rep.orthodox_witness->first);
        details["f"] = std::to_string(rep.orthodox_witness->second);
      }
      throw DomainError(Errc::not_orthodox, "semigroup is not orthodox",
                        details);
    }
  }

  const int n = S.order();
  std::vector<std::vector<int>> v(n);
  for (int s = 0; s < n; ++s) {
    v[s] = inverses_of(S, s);
  }

  // On orthodox semigroups the classical characterizations must agree:
  // V(s) and V(t) intersect iff V(s) = V(t).
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      std::vector<int> common;
      std::set_intersection(v[s].begin(), v[s].end(), v[t].begin(),
                            v[t].end(), std::back_inserter(common));
      if (common.empty() != (v[s] != v[t])) {
        throw DomainError(Errc::internal_inconsistency,
                          "inverse-set characterizations disagree on an "
                          "orthodox semigroup",
                          {{"s", std::to_string(s)},
                           {"t", std::to_string(t)}});
      }
    }
  }

  std::map<std::vector<int>, int> group;
  std::vector<int> raw(n);
  for (int s = 0; s < n; ++s) {
    auto [it, inserted] = group.emplace(v[s], static_cast<int>(group.size()));
    raw[s] = it->second;
  }

  Congruence gamma = [&] {
    try {
      return make_congruence(S, Partition::from_class_of(raw));
    } catch (const DomainError& e) {
      throw DomainError(Errc::internal_not_congruence,
                        "inverse-set partition failed compatibility",
                        e.details());
    }
  }();

  // The quotient must be inverse.
  const Quotient q = quotient(S, gamma);
  for (int x = 0; x < q.semigroup.order(); ++x) {
    if (inverses_of(q.semigroup, x).size() != 1) {
      throw DomainError(Errc::internal_inconsistency,
                        "minimum inverse congruence quotient is not inverse",
                        {{"class", std::to_string(x)}});
    }
  }
  return gamma;
}

}  // namespace morita
