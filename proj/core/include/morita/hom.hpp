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

#ifndef MORITA_HOM_HPP_
#define MORITA_HOM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace morita {

/// A mapping between finite semigroups, given element-wise.
struct SemigroupMap {
  FiniteSemigroup source;
  FiniteSemigroup target;
  std::vector<int> images;  // source element id -> target element id

  int apply(int s) const {
    return images[s];
  }
};

SemigroupMap identity_map(const FiniteSemigroup& S);

/// First pair (a, b) with images[ab] != images[a]*images[b], if any.
std::optional<std::pair<int, int>> homomorphism_witness(const SemigroupMap& m);

bool is_homomorphism(const SemigroupMap& m);

bool is_surjective(const SemigroupMap& m);

bool is_injective(const SemigroupMap& m);

bool is_isomorphism(const SemigroupMap& m);

struct LocalIsoReport {
  bool li1 = false;  // every restriction eSf -> th(e) T th(f) is a bijection
  bool li2 = false;  // every idempotent of T is D-related to some image th(e)
  bool surjective = false;
  /// Diagonal shortcut: for surjective maps between regular semigroups,
  /// checking only the diagonal restrictions eSe must agree with the full
  /// LI1 * LI2 verdict. Always recorded; disagreement throws.
  bool diagonal_shortcut_checked = false;
  std::optional<std::pair<int, int>> li1_witness;  // offending (e, f)
  std::optional<int> li2_witness;                  // offending idempotent of T

  bool is_local_isomorphism() const {
    return li1 && li2;
  }
};

/// Checks LI1 on all idempotent pairs and LI2 via Green's D on the target.
/// Throws DomainError(not_homomorphism) when m is not multiplicative, and
/// DomainError(internal_inconsistency) if the diagonal shortcut disagrees
/// with the full check on a surjective map between regular semigroups.
LocalIsoReport check_local_isomorphism(const SemigroupMap& m);

/// Backtracking search for an isomorphism, pruned by element invariants
/// (idempotency, inverse counts, index of the idempotent power, principal
/// ideal sizes, D-class sizes). Deterministic: the bijection is extended
/// idempotents-first, smallest D-class first, candidates in increasing id,
/// and the first witness found is returned. Absence is a valid result.
std::optional<SemigroupMap> find_isomorphism(const FiniteSemigroup& S,
                                             const FiniteSemigroup& T);

}  // namespace morita

#endif  // MORITA_HOM_HPP_
