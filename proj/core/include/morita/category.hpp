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

#ifndef MORITA_CATEGORY_HPP_
#define MORITA_CATEGORY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hom.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

namespace morita {

/// A morphism (src, payload, dst). Payloads are elements of the category's
/// payload semigroup; composing morphisms multiplies payloads, so a stored
/// composition table over morphism pairs is never needed.
struct CatMorphism {
  int src;
  int payload;
  int dst;

  friend bool operator==(const CatMorphism&, const CatMorphism&) = default;
};

/// A finite category whose composition is mediated by a payload semigroup:
/// compose(f: x->y, g: y->z) is the morphism (x, pf * pg, z), which must be
/// present (closure). Composition is diagrammatic, left to right. Identity
/// at an object is the morphism (x, object_payload(x), x).
class FiniteCategory {
 public:
  static FiniteCategory build(FiniteSemigroup payload_semigroup,
                              std::vector<int> object_payloads,
                              std::vector<std::string> object_labels,
                              std::vector<CatMorphism> morphisms);

  int num_objects() const noexcept {
    return static_cast<int>(object_payloads_.size());
  }

  int num_morphisms() const noexcept {
    return static_cast<int>(morphisms_.size());
  }

  const CatMorphism& morphism(int id) const {
    return morphisms_[id];
  }

  int identity(int obj) const {
    return identity_[obj];
  }

  int object_payload(int obj) const {
    return object_payloads_[obj];
  }

  const std::string& object_label(int obj) const {
    return object_labels_[obj];
  }

  std::string morphism_label(int id) const;

  const FiniteSemigroup& payload_semigroup() const noexcept {
    return payload_;
  }

  /// Morphism ids with the given endpoints, ascending.
  const std::vector<int>& hom(int src, int dst) const {
    return hom_[static_cast<size_t>(src) * num_objects() + dst];
  }

  /// -1 when no morphism matches.
  int find_morphism(int src, int payload, int dst) const;

  /// Diagrammatic composite f;g for dst(f) == src(g); nullopt when the
  /// endpoints do not match. Throws internal_inconsistency if the composite
  /// triple is missing (a closure violation).
  std::optional<int> compose(int f, int g) const;

  /// Two-sided inverse search: x and y are isomorphic objects iff some
  /// u: x->y and v: y->x compose to both identities.
  bool objects_isomorphic(int x, int y) const;

  /// The pair (u, v) realizing an object isomorphism, if any.
  std::optional<std::pair<int, int>> object_iso_pair(int x, int y) const;

 private:
  explicit FiniteCategory(FiniteSemigroup payload)
      : payload_(std::move(payload)) {}

  FiniteSemigroup payload_;
  std::vector<int> object_payloads_;
  std::vector<std::string> object_labels_;
  std::vector<CatMorphism> morphisms_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> hom_;
  std::vector<int> triple_index_;  // (payload, src, dst) -> id, -1 absent
};

struct CategoryCheck {
  bool ok = true;
  std::string detail;
  bool associativity_exhaustive = false;
};

/// Identity laws and closure exhaustively; associativity over composable
/// triples up to `assoc_budget` triples (beyond that it is inherited from
/// payload associativity and reported as non-exhaustive).
CategoryCheck validate_category(const FiniteCategory& C,
                                uint64_t assoc_budget = 2'000'000);

/// Cauchy completion: objects are the idempotents of S, morphisms are the
/// triples (e, s, f) with s = esf, composed by (e,s,f)(f,t,g) = (e,st,g).
/// Throws DomainError(no_local_units).
FiniteCategory cauchy_completion(const FiniteSemigroup& S);

struct FunctorMap {
  FiniteCategory source;
  FiniteCategory target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

struct FunctorChecks {
  bool functorial = false;
  bool full = false;
  bool faithful = false;
  bool essentially_surjective = false;
  std::string witness;  // first failure, empty when all pass

  bool weak_equivalence() const {
    return functorial && full && faithful && essentially_surjective;
  }
};

FunctorChecks functor_checks(const FunctorMap& F);

/// The induced functor C(source) -> C(target) of a homomorphism,
/// (e,s,f) |-> (th(e), th(s), th(f)). Requires local units on both sides.
/// Throws DomainError(not_homomorphism).
FunctorMap functor_theta(const SemigroupMap& theta);

/// The explicit functor C(RM(S,I,p)) -> C(S):
/// [(i,a,j),(i,s,k),(l,b,k)] |-> (a p(j,i), s p(k,l), b p(k,l)).
/// Requires full MF1..MF5 and a REGULAR-mode Rees semigroup.
/// Throws DomainError(mcalister_violation).
FunctorMap functor_psi(const ReesMatrixSemigroup& rm);

struct SkeletonResult {
  FiniteCategory skeleton;
  std::vector<int> object_class;      // original object -> class id
  std::vector<int> representative;    // class id -> original object (least)
  std::vector<int> object_to_skeleton;  // representative -> skeleton object
  /// Chosen isomorphisms (to_rep, from_rep) per original object, as
  /// morphism ids of the original category; identities on representatives.
  std::vector<std::pair<int, int>> retraction;
};

/// One representative object per isomorphism class (least id), hom-sets
/// restricted.
SkeletonResult skeleton(const FiniteCategory& C);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<FunctorMap> witness;     // isomorphism between the skeletons
  std::optional<std::string> obstruction;
};

/// Equivalence of finite categories, decided as isomorphism of skeletons.
/// Deterministic least witness. Throws
/// DomainError(search_space_too_large) when a skeleton exceeds the guard.
EquivalenceVerdict decide_equivalence(const FiniteCategory& C,
                                      const FiniteCategory& D,
                                      int max_skeleton_morphisms = 4096);

/// Canonical text dump: `object`, `mor` and `comp` lines in sorted order;
/// bit-stable for identical categories.
std::string dump_category(const FiniteCategory& C);

}  // namespace morita

#endif  // MORITA_CATEGORY_HPP_
