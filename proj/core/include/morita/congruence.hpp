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

#ifndef MORITA_CONGRUENCE_HPP_
#define MORITA_CONGRUENCE_HPP_

#include <array>
#include <optional>

#include "hom.hpp"
#include "semigroup.hpp"

namespace morita {

/// A partition known to be compatible with multiplication.
struct Congruence {
  Partition partition;

  int num_classes() const {
    return partition.num_classes;
  }
};

/// First quadruple (a, a', b, b') with a ~ a', b ~ b' but ab !~ a'b'.
std::optional<std::array<int, 4>> compatibility_witness(
    const FiniteSemigroup& S, const Partition& p);

/// Validates compatibility; throws DomainError(not_compatible) with a
/// witness quadruple.
Congruence make_congruence(const FiniteSemigroup& S, const Partition& p);

struct Quotient {
  FiniteSemigroup semigroup;
  SemigroupMap projection;
};

/// S/c with the projection map. Class labels are bracketed labels of the
/// least representative. Throws DomainError(not_compatible) when handed a
/// raw partition wrapped without validation.
Quotient quotient(const FiniteSemigroup& S, const Congruence& c);

/// Minimum inverse congruence of an orthodox semigroup: s ~ t iff
/// V(s) = V(t). Runtime checks: the three classical characterizations
/// agree (V(s) and V(t) intersect iff they are equal), the relation is a
/// congruence, and the quotient is inverse.
/// Throws DomainError(not_orthodox), DomainError(internal_not_congruence),
/// DomainError(internal_inconsistency).
Congruence min_inverse_congruence(const FiniteSemigroup& S);

}  // namespace morita

#endif  // MORITA_CONGRUENCE_HPP_
