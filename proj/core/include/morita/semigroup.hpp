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

#ifndef MORITA_SEMIGROUP_HPP_
#define MORITA_SEMIGROUP_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace morita {

/// A finite semigroup on elements 0..n-1 given by its multiplication table.
/// Immutable after construction; labels are metadata only and do not take
/// part in equality.
class FiniteSemigroup {
 public:
  /// Validates entry ranges and certifies associativity exhaustively.
  /// Throws DomainError(out_of_range_entry) or DomainError(not_associative)
  /// with a witness triple, and ParseError on an empty or ragged grid.
  static FiniteSemigroup from_rows(const std::vector<std::vector<int>>& rows,
                                   std::vector<std::string> labels = {});

  /// Range-checks only. For derived tables that are associative by
  /// construction (Rees tables, quotients, local submonoids).
  static FiniteSemigroup from_flat(int order, std::vector<int> table,
                                   std::vector<std::string> labels = {});

  int order() const noexcept {
    return order_;
  }

  int product(int a, int b) const {
    return table_[static_cast<size_t>(a) * order_ + b];
  }

  int product3(int a, int b, int c) const {
    return product(product(a, b), c);
  }

  bool is_idempotent(int e) const {
    return product(e, e) == e;
  }

  /// Idempotents in increasing id order.
  const std::vector<int>& idempotents() const noexcept {
    return idempotents_;
  }

  /// Exhaustive associativity scan; nullopt when associative.
  std::optional<std::array<int, 3>> associativity_witness() const;

  /// Element label; defaults to "x<i>" when none was supplied.
  std::string label(int s) const;

  bool has_labels() const noexcept {
    return !labels_.empty();
  }

  const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }

  const std::vector<int>& table() const noexcept {
    return table_;
  }

  /// Order and table only; labels are ignored.
  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteSemigroup(int order, std::vector<int> table,
                  std::vector<std::string> labels);

  int order_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
  std::vector<int> idempotents_;
};

/// V(s) = { t : sts = s and tst = t }, by exhaustive scan. s is regular
/// iff the result is nonempty; this is the brute-force regularity oracle.
std::vector<int> inverses_of(const FiniteSemigroup& S, int s);

bool is_regular_element(const FiniteSemigroup& S, int s);

/// Every s factors as s = esf with e, f idempotent.
bool has_local_units(const FiniteSemigroup& S);

struct ClassificationReport {
  bool is_regular = false;
  bool is_inverse = false;
  bool is_orthodox = false;
  bool is_locally_inverse = false;
  bool is_generalized_inverse = false;
  bool has_local_units = false;

  /// Witnesses for the false flags.
  std::optional<int> regular_witness;                    // V(s) empty
  std::optional<int> inverse_witness;                    // |V(s)| != 1
  std::optional<std::pair<int, int>> orthodox_witness;   // ef not idempotent
  std::optional<int> locally_inverse_witness;            // eSe not inverse
  std::optional<int> local_units_witness;                // s != esf for all e,f
};

/// All flags by exhaustive checks; local inverseness classifies every local
/// submonoid eSe. Orthodoxy and local inverseness require regularity.
ClassificationReport classify(const FiniteSemigroup& S);

/// Dense binary relation on 0..n-1.
class Relation {
 public:
  explicit Relation(int n)
      : n_(n), bits_(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {}

  bool at(int a, int b) const {
    return bits_[static_cast<size_t>(a) * n_ + b] != 0;
  }

  void set(int a, int b, bool v = true) {
    bits_[static_cast<size_t>(a) * n_ + b] = v ? 1 : 0;
  }

  int size() const noexcept {
    return n_;
  }

 private:
  int n_;
  std::vector<char> bits_;
};

/// Unique inverse of each element. Throws DomainError(not_inverse) with a
/// witness element when S is not an inverse semigroup.
std::vector<int> unique_inverses(const FiniteSemigroup& S);

/// Natural partial order of an inverse semigroup: s <= t iff s = (s s^-1) t.
/// Throws DomainError(not_inverse).
Relation natural_order(const FiniteSemigroup& S);

struct SubSemigroup {
  FiniteSemigroup semigroup;
  std::vector<int> elements;  // new id -> parent element id
};

/// eSe with the induced multiplication; e is its identity.
/// Throws DomainError(not_idempotent).
SubSemigroup local_submonoid(const FiniteSemigroup& S, int e);

/// Partition of 0..n-1 into dense class ids, normalized so that class ids
/// appear in first-occurrence order.
struct Partition {
  std::vector<int> class_of;
  int num_classes = 0;

  static Partition from_class_of(const std::vector<int>& raw);
  static Partition identity(int n);
  static Partition universal(int n);

  std::vector<std::vector<int>> classes() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_of == b.class_of;
  }
};

/// Green's D relation, computed as the join of the L and R equivalences;
/// L and R come from principal ideals with an adjoined external identity.
Partition green_d(const FiniteSemigroup& S);

}  // namespace morita

#endif  // MORITA_SEMIGROUP_HPP_
