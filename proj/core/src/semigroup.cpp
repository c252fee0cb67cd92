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

#include "morita/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace morita {

namespace {

std::string int_str(int v) {
  return std::to_string(v);
}

}  // namespace

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::out_of_range_entry: return "OUT_OF_RANGE_ENTRY";
    case Errc::not_associative: return "NOT_ASSOCIATIVE";
    case Errc::not_inverse: return "NOT_INVERSE";
    case Errc::not_idempotent: return "NOT_IDEMPOTENT";
    case Errc::not_orthodox: return "NOT_ORTHODOX";
    case Errc::internal_not_congruence: return "INTERNAL_NOT_CONGRUENCE";
    case Errc::not_compatible: return "NOT_COMPATIBLE";
    case Errc::not_homomorphism: return "NOT_HOMOMORPHISM";
    case Errc::not_regular: return "NOT_REGULAR";
    case Errc::mcalister_violation: return "MCALISTER_VIOLATION";
    case Errc::base_not_inverse: return "BASE_NOT_INVERSE";
    case Errc::empty_index_set: return "EMPTY_INDEX_SET";
    case Errc::search_space_too_large: return "SEARCH_SPACE_TOO_LARGE";
    case Errc::no_local_units: return "NO_LOCAL_UNITS";
    case Errc::not_inverse_base: return "NOT_INVERSE_BASE";
    case Errc::partial_mapping: return "PARTIAL_MAPPING";
    case Errc::biset_invalid: return "BISET_INVALID";
    case Errc::kernel_mismatch: return "KERNEL_MISMATCH";
    case Errc::internal_inconsistency: return "INTERNAL_INCONSISTENCY";
  }
  return "UNKNOWN";
}

DomainError::DomainError(Errc code, const std::string& message,
                         std::map<std::string, std::string> details)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      details_(std::move(details)) {}

ParseError::ParseError(const std::string& message)
    : std::runtime_error("parse error: " + message) {}

FiniteSemigroup::FiniteSemigroup(int order, std::vector<int> table,
                                 std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  for (int e = 0; e < order_; ++e) {
    if (product(e, e) == e) {
      idempotents_.push_back(e);
    }
  }
}

FiniteSemigroup FiniteSemigroup::from_flat(int order, std::vector<int> table,
                                           std::vector<std::string> labels) {
  if (order <= 0) {
    throw ParseError("semigroup order must be positive");
  }
  if (table.size() != static_cast<size_t>(order) * order) {
    throw ParseError("table size does not match order");
  }
  for (size_t k = 0; k < table.size(); ++k) {
    if (table[k] < 0 || table[k] >= order) {
      throw DomainError(
          Errc::out_of_range_entry, "table entry outside [0, n)",
          {{"row", int_str(static_cast<int>(k) / order)},
           {"col", int_str(static_cast<int>(k) % order)},
           {"value", int_str(table[k])}});
    }
  }
  if (!labels.empty() && labels.size() != static_cast<size_t>(order)) {
    throw ParseError("label count does not match order");
  }
  return FiniteSemigroup(order, std::move(table), std::move(labels));
}

FiniteSemigroup FiniteSemigroup::from_rows(
    const std::vector<std::vector<int>>& rows,
    std::vector<std::string> labels) {
  if (rows.empty()) {
    throw ParseError("empty table");
  }
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != static_cast<size_t>(n)) {
      throw ParseError("table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  FiniteSemigroup S = from_flat(n, std::move(flat), std::move(labels));
  if (auto w = S.associativity_witness()) {
    throw DomainError(Errc::not_associative, "multiplication not associative",
                      {{"a", int_str((*w)[0])},
                       {"b", int_str((*w)[1])},
                       {"c", int_str((*w)[2])}});
  }
  return S;
}

std::optional<std::array<int, 3>> FiniteSemigroup::associativity_witness()
    const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int ab = product(a, b);
      for (int c = 0; c < order_; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          return std::array<int, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::string FiniteSemigroup::label(int s) const {
  if (labels_.empty()) {
    return "x" + std::to_string(s);
  }
  return labels_[s];
}

std::vector<int> inverses_of(const FiniteSemigroup& S, int s) {
  std::vector<int> result;
  for (int t = 0; t < S.order(); ++t) {
    if (S.product3(s, t, s) == s && S.product3(t, s, t) == t) {
      result.push_back(t);
    }
  }
  return result;
}

bool is_regular_element(const FiniteSemigroup& S, int s) {
  for (int t = 0; t < S.order(); ++t) {
    if (S.product3(s, t, s) == s && S.product3(t, s, t) == t) {
      return true;
    }
  }
  return false;
}

bool has_local_units(const FiniteSemigroup& S) {
  const auto& es = S.idempotents();
  for (int s = 0; s < S.order(); ++s) {
    bool found = false;
    for (int e : es) {
      for (int f : es) {
        if (S.product3(e, s, f) == s) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<int> unique_inverses(const FiniteSemigroup& S) {
  std::vector<int> inv(S.order());
  for (int s = 0; s < S.order(); ++s) {
    auto vs = inverses_of(S, s);
    if (vs.size() != 1) {
      throw DomainError(Errc::not_inverse,
                        "element does not have a unique inverse",
                        {{"element", std::to_string(s)},
                         {"inverse_count", std::to_string(vs.size())}});
    }
    inv[s] = vs.front();
  }
  return inv;
}

ClassificationReport classify(const FiniteSemigroup& S) {
  ClassificationReport r;
  const int n = S.order();

  r.is_regular = true;
  r.is_inverse = true;
  for (int s = 0; s < n; ++s) {
    auto vs = inverses_of(S, s);
    if (vs.empty() && !r.regular_witness) {
      r.is_regular = false;
      r.regular_witness = s;
    }
    if (vs.size() != 1 && !r.inverse_witness) {
      r.is_inverse = false;
      r.inverse_witness = s;
    }
  }
  if (!r.is_regular) {
    r.is_inverse = false;
  }

  // Orthodox: regular with idempotents closed under multiplication.
  r.is_orthodox = r.is_regular;
  const auto& es = S.idempotents();
  for (size_t i = 0; i < es.size() && !r.orthodox_witness; ++i) {
    for (size_t j = 0; j < es.size(); ++j) {
      const int p = S.product(es[i], es[j]);
      if (!S.is_idempotent(p)) {
        r.orthodox_witness = std::make_pair(es[i], es[j]);
        r.is_orthodox = false;
        break;
      }
    }
  }

  // Locally inverse: regular and every local submonoid eSe is inverse.
  r.is_locally_inverse = r.is_regular;
  if (r.is_regular) {
    for (int e : es) {
      SubSemigroup sub = local_submonoid(S, e);
      bool sub_inverse = true;
      for (int x = 0; x < sub.semigroup.order(); ++x) {
        if (inverses_of(sub.semigroup, x).size() != 1) {
          sub_inverse = false;
          break;
        }
      }
      if (!sub_inverse) {
        r.is_locally_inverse = false;
        r.locally_inverse_witness = e;
        break;
      }
    }
  }

  r.is_generalized_inverse = r.is_orthodox && r.is_locally_inverse;

  r.has_local_units = true;
  for (int s = 0; s < n && r.has_local_units; ++s) {
    bool found = false;
    for (int e : es) {
      for (int f : es) {
        if (S.product3(e, s, f) == s) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      r.has_local_units = false;
      r.local_units_witness = s;
    }
  }

  return r;
}

Relation natural_order(const FiniteSemigroup& S) {
  const auto inv = unique_inverses(S);
  const int n = S.order();
  Relation leq(n);
  for (int s = 0; s < n; ++s) {
    const int ss1 = S.product(s, inv[s]);
    for (int t = 0; t < n; ++t) {
      leq.set(s, t, S.product(ss1, t) == s);
    }
  }
  return leq;
}

SubSemigroup local_submonoid(const FiniteSemigroup& S, int e) {
  if (!S.is_idempotent(e)) {
    throw DomainError(Errc::not_idempotent, "element is not idempotent",
                      {{"element", std::to_string(e)}});
  }
  const int n = S.order();
  std::vector<int> members;
  std::vector<int> new_id(n, -1);
  for (int s = 0; s < n; ++s) {
    const int x = S.product3(e, s, e);
    if (new_id[x] < 0) {
      new_id[x] = static_cast<int>(members.size());
      members.push_back(x);
    }
  }
  // Membership order is by first occurrence of ese over s = 0..n-1, which
  // is deterministic; re-sort by parent id for a canonical embedding.
  std::sort(members.begin(), members.end());
  for (int k = 0; k < static_cast<int>(members.size()); ++k) {
    new_id[members[k]] = k;
  }
  const int m = static_cast<int>(members.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = S.label(members[a]);
    for (int b = 0; b < m; ++b) {
      table[static_cast<size_t>(a) * m + b] =
          new_id[S.product(members[a], members[b])];
    }
  }
  return SubSemigroup{FiniteSemigroup::from_flat(m, std::move(table),
                                                 std::move(labels)),
                      std::move(members)};
}

Partition Partition::from_class_of(const std::vector<int>& raw) {
  Partition p;
  p.class_of.assign(raw.size(), -1);
  std::map<int, int> remap;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = remap.emplace(raw[i], p.num_classes);
    if (inserted) {
      ++p.num_classes;
    }
    p.class_of[i] = it->second;
  }
  return p;
}

Partition Partition::identity(int n) {
  Partition p;
  p.class_of.resize(n);
  std::iota(p.class_of.begin(), p.class_of.end(), 0);
  p.num_classes = n;
  return p;
}

Partition Partition::universal(int n) {
  Partition p;
  p.class_of.assign(n, 0);
  p.num_classes = n > 0 ? 1 : 0;
  return p;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (size_t i = 0; i < class_of.size(); ++i) {
    out[class_of[i]].push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

// Principal ideal bitmaps with an adjoined external identity, so that
// sS^1 always contains s.
std::vector<std::vector<char>> right_ideals(const FiniteSemigroup& S) {
  const int n = S.order();
  std::vector<std::vector<char>> ideal(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    ideal[a][a] = 1;
    for (int s = 0; s < n; ++s) {
      ideal[a][S.product(a, s)] = 1;
    }
  }
  return ideal;
}

std::vector<std::vector<char>> left_ideals(const FiniteSemigroup& S) {
  const int n = S.order();
  std::vector<std::vector<char>> ideal(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    ideal[a][a] = 1;
    for (int s = 0; s < n; ++s) {
      ideal[a][S.product(s, a)] = 1;
    }
  }
  return ideal;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
};

}  // namespace

Partition green_d(const FiniteSemigroup& S) {
  const int n = S.order();
  const auto r_ideal = right_ideals(S);
  const auto l_ideal = left_ideals(S);
  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (r_ideal[a] == r_ideal[b] || l_ideal[a] == l_ideal[b]) {
        uf.unite(a, b);
      }
    }
  }
  std::vector<int> raw(n);
  for (int a = 0; a < n; ++a) {
    raw[a] = uf.find(a);
  }
  return Partition::from_class_of(raw);
}

}  // namespace morita
