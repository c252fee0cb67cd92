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

#ifndef MORITA_BISET_HPP_
#define MORITA_BISET_HPP_

#include <map>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "hom.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

namespace morita {

/// An (S,T)-biset X with pairings bra : X x X -> S and ket : X x X -> T.
/// Axioms, for x,y,z in X, s in S, t in T:
///   M1  <sx, y> = s<x, y>        M5  [x, y] = [y, x]^-1
///   M2  <y, x> = <x, y>^-1       M6  x[x, x] = x
///   M3  <x, x>x = x              M7  <x, y>z = x[y, z]
///   M4  [x, yt] = [x, y]t
/// plus action laws, unitariness and surjectivity of both pairings.
struct EquivalenceBiset {
  FiniteSemigroup left;   // S, inverse
  FiniteSemigroup right;  // T, inverse
  int carrier_size = 0;   // |X|

  std::vector<int> left_action;   // |S| x |X| -> X
  std::vector<int> right_action;  // |X| x |T| -> X
  std::vector<int> bra;           // |X| x |X| -> S
  std::vector<int> ket;           // |X| x |X| -> T

  int act_l(int s, int x) const {
    return left_action[static_cast<size_t>(s) * carrier_size + x];
  }

  int act_r(int x, int t) const {
    return right_action[static_cast<size_t>(x) * right.order() + t];
  }

  int bra_at(int x, int y) const {
    return bra[static_cast<size_t>(x) * carrier_size + y];
  }

  int ket_at(int x, int y) const {
    return ket[static_cast<size_t>(x) * carrier_size + y];
  }
};

/// The canonical fixture over an inverse semigroup: X = S, both actions by
/// multiplication, <x,y> = x y^-1 and [x,y] = x^-1 y.
EquivalenceBiset identity_biset(const FiniteSemigroup& S);

struct BisetCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // empty iff pass
};

struct BisetReport {
  /// Canonical order: action laws, unitariness, surjectivity, M1..M7,
  /// then the derived identities.
  std::vector<BisetCheck> checks;
  /// Axioms pass but a derived consequence fails; never expected.
  bool internal_inconsistency = false;

  bool axioms_pass() const;
  bool all_pass() const;
  const BisetCheck* first_failure() const;
};

/// Exhaustive check of action laws, unitariness, surjectivity, M1..M7 and
/// the derived bracket identities. Throws DomainError(not_inverse_base)
/// and DomainError(partial_mapping).
BisetReport validate_biset(const EquivalenceBiset& B);

/// Idempotent transport along x: eps maps E(S) -> E(T) via e |-> [ex, ex]
/// with ex = x eps(e); eta maps E(T) -> E(S) via f |-> <xf, xf> with
/// xf = eta(f) x. Both are verified multiplicative.
/// Throws DomainError(biset_invalid).
struct IdempotentTransport {
  std::map<int, int> epsilon;  // E(S) -> E(T)
  std::map<int, int> eta;      // E(T) -> E(S)
};

IdempotentTransport epsilon_eta(const EquivalenceBiset& B, int x);

/// The sandwich function p(x,y) = <x,y> over index set X. Certified to
/// pass all five McAlister conditions. Throws DomainError(biset_invalid).
SandwichFunction mcalister_from_biset(const EquivalenceBiset& B);

struct BisetTheta {
  ReesMatrixSemigroup rm;   // RM(S, X, p)
  SemigroupMap theta;       // rm -> T, (x,s,y) |-> [x, sy]
  Congruence kernel;        // == gamma_closed_form(rm)
};

/// theta(x,s,y) = [x, sy]: a surjective homomorphism whose kernel is
/// exactly gamma. Surjectivity is witnessed constructively by the elements
/// (x, <x,x><y,y>, y). Throws DomainError(biset_invalid) and
/// DomainError(kernel_mismatch).
BisetTheta theta_from_biset(const EquivalenceBiset& B);

struct PartnerResult {
  ReesMatrixSemigroup rm;
  FiniteSemigroup im;        // IM(S, X, p)
  SemigroupMap projection;   // rm -> im
  SemigroupMap iso;          // im -> T, induced by theta
};

/// Builds IM(S, X, p) and the induced isomorphism IM -> T obtained by
/// factoring theta through the quotient. Throws DomainError(biset_invalid)
/// and DomainError(kernel_mismatch).
PartnerResult synthesize_partner(const EquivalenceBiset& B);

}  // namespace morita

#endif  // MORITA_BISET_HPP_
