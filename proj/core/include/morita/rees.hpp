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

#ifndef MORITA_REES_HPP_
#define MORITA_REES_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "hom.hpp"
#include "semigroup.hpp"

namespace morita {

/// An element (i, s, j) of a square Rees matrix semigroup: row index, base
/// element, column index.
struct ReesTriple {
  int row;
  int mid;
  int col;

  friend bool operator==(const ReesTriple&, const ReesTriple&) = default;
};

/// A square sandwich function p : I x I -> S over an inverse base.
///
/// The McAlister conditions on p:
///   MF1  p(i,i) is idempotent;
///   MF2  p(i,i) p(i,j) p(j,j) = p(i,j);
///   MF3  p(i,j) = p(j,i)^-1;
///   MF4  p(i,j) p(j,k) <= p(i,k) in the natural order of the base;
///   MF5  every idempotent e of the base satisfies e <= p(i,i) for some i.
class SandwichFunction {
 public:
  /// Range-checks entries. The base need not be inverse yet; that is
  /// reported by validate_mcalister as BASE_NOT_INVERSE. Inversion and
  /// natural-order data are precomputed when the base is inverse.
  static SandwichFunction create(FiniteSemigroup base, int index_size,
                                 std::vector<int> entries);

  const FiniteSemigroup& base() const noexcept {
    return base_;
  }

  int index_size() const noexcept {
    return index_size_;
  }

  int at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * index_size_ + j];
  }

  const std::vector<int>& entries() const noexcept {
    return entries_;
  }

  bool base_is_inverse() const noexcept {
    return !inverse_.empty();
  }

  /// Unique inverse in the base; requires an inverse base.
  int inv(int s) const;

  /// Natural order of the base; requires an inverse base.
  bool leq(int s, int t) const;

 private:
  explicit SandwichFunction(FiniteSemigroup base)
      : base_(std::move(base)), index_size_(0) {}

  FiniteSemigroup base_;
  int index_size_;
  std::vector<int> entries_;
  std::vector<int> inverse_;            // empty when base not inverse
  std::optional<Relation> leq_;
};

struct McAlisterCheck {
  bool pass = true;
  std::map<std::string, std::string> witness;  // empty iff pass
};

/// Per-condition verdicts with counterexample witnesses.
struct McAlisterReport {
  McAlisterCheck mf1, mf2, mf3, mf4, mf5;

  bool all() const {
    return mf1.pass && mf2.pass && mf3.pass && mf4.pass && mf5.pass;
  }

  bool mf1_to_mf4() const {
    return mf1.pass && mf2.pass && mf3.pass && mf4.pass;
  }

  /// Names of failing conditions joined by ",", e.g. "MF4,MF5".
  std::string failing() const;
};

/// Checks MF1..MF5 exhaustively. Throws DomainError(base_not_inverse) and
/// DomainError(empty_index_set).
McAlisterReport validate_mcalister(const SandwichFunction& p);

/// Closed form for regularity of a triple: s^-1 s <= p(j,j) and
/// s s^-1 <= p(i,i). Requires MF1..MF4.
bool is_regular_triple(const SandwichFunction& p, const ReesTriple& t);

/// Closed form for idempotence of a triple: s <= p(i,j).
bool is_idempotent_triple(const SandwichFunction& p, const ReesTriple& t);

/// (j, s^-1, i); certified by direct multiplication to be an inverse of
/// (i, s, j). Throws DomainError(not_regular) when the triple is not.
ReesTriple inverse_triple(const SandwichFunction& p, const ReesTriple& t);

enum class ReesMode { full, regular };

/// A materialized square Rees matrix semigroup with multiplication
/// (i,s,j)(k,t,l) = (i, s p(j,k) t, l). FULL mode enumerates all triples;
/// REGULAR mode keeps exactly the triples passing the regularity closed
/// form and asserts closure and mutual inverses instead of assuming them.
class ReesMatrixSemigroup {
 public:
  const FiniteSemigroup& semigroup() const noexcept {
    return semigroup_;
  }

  const FiniteSemigroup& base() const noexcept {
    return sandwich_.base();
  }

  const SandwichFunction& sandwich() const noexcept {
    return sandwich_;
  }

  ReesMode mode() const noexcept {
    return mode_;
  }

  int size() const noexcept {
    return static_cast<int>(triples_.size());
  }

  const ReesTriple& triple(int id) const {
    return triples_[id];
  }

  const std::vector<ReesTriple>& triples() const noexcept {
    return triples_;
  }

  /// Element id of a triple, or -1 when not present.
  int index_of(const ReesTriple& t) const;

 private:
  friend ReesMatrixSemigroup build_rees(const SandwichFunction&, ReesMode);

  SandwichFunction sandwich_;
  ReesMode mode_;
  std::vector<ReesTriple> triples_;
  std::vector<int> full_to_id_;  // dense (i,s,j) -> element id, -1 absent
  FiniteSemigroup semigroup_;

  ReesMatrixSemigroup(SandwichFunction sandwich, ReesMode mode,
                      std::vector<ReesTriple> triples,
                      std::vector<int> full_to_id, FiniteSemigroup table);
};

/// Throws DomainError(mcalister_violation) when MF1..MF4 fail (report
/// embedded in the details), plus whatever validate_mcalister throws.
ReesMatrixSemigroup build_rees(const SandwichFunction& p, ReesMode mode);

/// Congruence from the closed form: (i,s,j) ~ (k,t,l) iff
/// s = p(i,k) t p(l,j) and t = p(k,i) s p(j,l). Verified to be an
/// equivalence and a congruence; it must equal the minimum inverse
/// congruence of the regular Rees matrix semigroup.
Congruence gamma_closed_form(const ReesMatrixSemigroup& rm);

struct ImResult {
  ReesMatrixSemigroup rm;
  Congruence gamma;          // minimum inverse congruence of rm
  FiniteSemigroup im;        // rm / gamma
  SemigroupMap projection;   // rm -> im
};

/// IM(S, I, p) = RM(S, I, p) / gamma with the projection. Requires full
/// MF1..MF5. Asserts, as runtime cross-checks, that RM is a generalized
/// inverse semigroup, IM is inverse, and the projection
/// is a local isomorphism; failures raise internal_inconsistency.
ImResult build_im(const SandwichFunction& p);

/// Streams every sandwich function over S with the given index size that
/// passes validate_mcalister, in lexicographic order of the entry grid.
/// The consumer returns false to stop early. Returns the number of
/// functions yielded. Throws DomainError(search_space_too_large) when the
/// pruned candidate space exceeds `guard`, and
/// DomainError(empty_index_set) / DomainError(base_not_inverse).
uint64_t enumerate_mcalister(
    const FiniteSemigroup& S, int index_size,
    const std::function<bool(const SandwichFunction&)>& yield,
    uint64_t guard = 10'000'000);

/// Convenience wrapper collecting at most `limit` functions.
std::vector<SandwichFunction> enumerate_mcalister(const FiniteSemigroup& S,
                                                  int index_size,
                                                  size_t limit,
                                                  uint64_t guard = 10'000'000);

}  // namespace morita

#endif  // MORITA_REES_HPP_
