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

#include "morita/rees.hpp"

#include <algorithm>

namespace morita {

namespace {

std::string triple_str(const ReesTriple& t) {
  return "(" + std::to_string(t.row) + "," + std::to_string(t.mid) + "," +
         std::to_string(t.col) + ")";
}

}  // namespace

SandwichFunction SandwichFunction::create(FiniteSemigroup base,
                                          int index_size,
                                          std::vector<int> entries) {
  if (index_size < 0 ||
      entries.size() !=
          static_cast<size_t>(index_size) * static_cast<size_t>(index_size)) {
    throw ParseError("sandwich grid is not index_size x index_size");
  }
  for (size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] < 0 || entries[k] >= base.order()) {
      throw DomainError(Errc::out_of_range_entry,
                        "sandwich entry is not a base element",
                        {{"i", std::to_string(k / index_size)},
                         {"j", std::to_string(k % index_size)},
                         {"value", std::to_string(entries[k])}});
    }
  }
  SandwichFunction p(std::move(base));
  p.index_size_ = index_size;
  p.entries_ = std::move(entries);
  try {
    p.inverse_ = unique_inverses(p.base_);
    p.leq_.emplace(natural_order(p.base_));
  } catch (const DomainError&) {
    // Base not inverse; validate_mcalister reports BASE_NOT_INVERSE.
  }
  return p;
}

int SandwichFunction::inv(int s) const {
  if (inverse_.empty()) {
    throw DomainError(Errc::base_not_inverse,
                      "base semigroup is not inverse");
  }
  return inverse_[s];
}

bool SandwichFunction::leq(int s, int t) const {
  if (!leq_) {
    throw DomainError(Errc::base_not_inverse,
                      "base semigroup is not inverse");
  }
  return leq_->at(s, t);
}

std::string McAlisterReport::failing() const {
  std::string out;
  auto add = [&](const char* name, const McAlisterCheck& c) {
    if (!c.pass) {
      if (!out.empty()) out += ",";
      out += name;
    }
  };
  add("MF1", mf1);
  add("MF2", mf2);
  add("MF3", mf3);
  add("MF4", mf4);
  add("MF5", mf5);
  return out;
}

namespace {

// Error payload carrying every failing condition with its witness.
DomainError mcalister_error(const McAlisterReport& rep) {
  std::map<std::string, std::string> details{{"failing", rep.failing()}};
  auto absorb = [&](const char* name, const McAlisterCheck& c) {
    for (const auto& [k, v] : c.witness) {
      details[std::string(name) + "_" + k] = v;
    }
  };
  absorb("MF1", rep.mf1);
  absorb("MF2", rep.mf2);
  absorb("MF3", rep.mf3);
  absorb("MF4", rep.mf4);
  absorb("MF5", rep.mf5);
  return DomainError(Errc::mcalister_violation,
                     "sandwich function violates " + rep.failing(), details);
}

}  // namespace

McAlisterReport validate_mcalister(const SandwichFunction& p) {
  if (!p.base_is_inverse()) {
    throw DomainError(Errc::base_not_inverse,
                      "sandwich base semigroup is not inverse");
  }
  const int m = p.index_size();
  if (m == 0) {
    throw DomainError(Errc::empty_index_set,
                      "an empty index set cannot dominate the idempotents "
                      "of a nonempty semigroup");
  }
  const FiniteSemigroup& S = p.base();
  McAlisterReport r;

  for (int i = 0; i < m && r.mf1.pass; ++i) {
    if (!S.is_idempotent(p.at(i, i))) {
      r.mf1 = {false,
               {{"i", std::to_string(i)},
                {"p_ii", std::to_string(p.at(i, i))}}};
    }
  }

  for (int i = 0; i < m && r.mf2.pass; ++i) {
    for (int j = 0; j < m; ++j) {
      if (S.product3(p.at(i, i), p.at(i, j), p.at(j, j)) != p.at(i, j)) {
        r.mf2 = {false,
                 {{"i", std::to_string(i)}, {"j", std::to_string(j)}}};
        break;
      }
    }
  }

  for (int i = 0; i < m && r.mf3.pass; ++i) {
    for (int j = 0; j < m; ++j) {
      if (p.at(i, j) != p.inv(p.at(j, i))) {
        r.mf3 = {false,
                 {{"i", std::to_string(i)}, {"j", std::to_string(j)}}};
        break;
      }
    }
  }

  for (int i = 0; i < m && r.mf4.pass; ++i) {
    for (int j = 0; j < m && r.mf4.pass; ++j) {
      for (int k = 0; k < m; ++k) {
        if (!p.leq(S.product(p.at(i, j), p.at(j, k)), p.at(i, k))) {
          r.mf4 = {false,
                   {{"i", std::to_string(i)},
                    {"j", std::to_string(j)},
                    {"k", std::to_string(k)}}};
          break;
        }
      }
    }
  }

  for (int e : S.idempotents()) {
    bool dominated = false;
    for (int i = 0; i < m; ++i) {
      if (p.leq(e, p.at(i, i))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      r.mf5 = {false, {{"idempotent", std::to_string(e)}}};
      break;
    }
  }

  return r;
}

bool is_regular_triple(const SandwichFunction& p, const ReesTriple& t) {
  const FiniteSemigroup& S = p.base();
  const int si = p.inv(t.mid);
  return p.leq(S.product(si, t.mid), p.at(t.col, t.col)) &&
         p.leq(S.product(t.mid, si), p.at(t.row, t.row));
}

bool is_idempotent_triple(const SandwichFunction& p, const ReesTriple& t) {
  return p.leq(t.mid, p.at(t.row, t.col));
}

ReesTriple inverse_triple(const SandwichFunction& p, const ReesTriple& t) {
  if (!is_regular_triple(p, t)) {
    throw DomainError(Errc::not_regular, "triple is not regular",
                      {{"triple", triple_str(t)}});
  }
  const ReesTriple u{t.col, p.inv(t.mid), t.row};
  // Certify u in V(t) by direct sandwich multiplication.
  const FiniteSemigroup& S = p.base();
  auto mul = [&](const ReesTriple& a, const ReesTriple& b) {
    return ReesTriple{a.row,
                      S.product3(a.mid, p.at(a.col, b.row), b.mid), b.col};
  };
  if (!(mul(mul(t, u), t) == t) || !(mul(mul(u, t), u) == u)) {
    throw DomainError(Errc::internal_inconsistency,
                      "(j, s^-1, i) failed to be an inverse of (i, s, j)",
                      {{"triple", triple_str(t)}});
  }
  return u;
}

ReesMatrixSemigroup::ReesMatrixSemigroup(SandwichFunction sandwich,
                                         ReesMode mode,
                                         std::vector<ReesTriple> triples,
                                         std::vector<int> full_to_id,
                                         FiniteSemigroup table)
    : sandwich_(std::move(sandwich)),
      mode_(mode),
      triples_(std::move(triples)),
      full_to_id_(std::move(full_to_id)),
      semigroup_(std::move(table)) {}

int ReesMatrixSemigroup::index_of(const ReesTriple& t) const {
  const int m = sandwich_.index_size();
  const int n = sandwich_.base().order();
  if (t.row < 0 || t.row >= m || t.col < 0 || t.col >= m || t.mid < 0 ||
      t.mid >= n) {
    return -1;
  }
  return full_to_id_[(static_cast<size_t>(t.row) * n + t.mid) * m + t.col];
}

ReesMatrixSemigroup build_rees(const SandwichFunction& p, ReesMode mode) {
  const McAlisterReport rep = validate_mcalister(p);
  if (!rep.mf1_to_mf4()) {
    throw mcalister_error(rep);
  }

  const FiniteSemigroup& S = p.base();
  const int m = p.index_size();
  const int n = S.order();

  std::vector<ReesTriple> triples;
  std::vector<int> full_to_id(static_cast<size_t>(m) * n * m, -1);
  for (int i = 0; i < m; ++i) {
    for (int s = 0; s < n; ++s) {
      for (int j = 0; j < m; ++j) {
        const ReesTriple t{i, s, j};
        if (mode == ReesMode::regular && !is_regular_triple(p, t)) {
          continue;
        }
        full_to_id[(static_cast<size_t>(i) * n + s) * m + j] =
            static_cast<int>(triples.size());
        triples.push_back(t);
      }
    }
  }

  const int count = static_cast<int>(triples.size());
  std::vector<int> table(static_cast<size_t>(count) * count);
  for (int a = 0; a < count; ++a) {
    const ReesTriple& x = triples[a];
    for (int b = 0; b < count; ++b) {
      const ReesTriple& y = triples[b];
      const int mid = S.product3(x.mid, p.at(x.col, y.row), y.mid);
      const int id =
          full_to_id[(static_cast<size_t>(x.row) * n + mid) * m + y.col];
      if (id < 0) {
        // Would falsify closure of the regular elements.
        throw DomainError(
            Errc::internal_inconsistency,
            "product of regular triples left the regular part",
            {{"x", triple_str(x)}, {"y", triple_str(y)}});
      }
      table[static_cast<size_t>(a) * count + b] = id;
    }
  }

  std::vector<std::string> labels(count);
  for (int a = 0; a < count; ++a) {
    const ReesTriple& t = triples[a];
    labels[a] = "(" + std::to_string(t.row) + "," + S.label(t.mid) + "," +
                std::to_string(t.col) + ")";
  }

  ReesMatrixSemigroup rm(p, mode, std::move(triples), std::move(full_to_id),
                         FiniteSemigroup::from_flat(count, std::move(table),
                                                    std::move(labels)));

  if (mode == ReesMode::regular) {
    // Each kept triple must have its (j, s^-1, i) partner present and
    // mutually inverse; inverse_triple certifies both.
    for (const ReesTriple& t : rm.triples()) {
      const ReesTriple u = inverse_triple(p, t);
      if (rm.index_of(u) < 0) {
        throw DomainError(Errc::internal_inconsistency,
                          "inverse of a regular triple is missing",
                          {{"triple", triple_str(t)}});
      }
    }
  }
  return rm;
}

Congruence gamma_closed_form(const ReesMatrixSemigroup& rm) {
  const SandwichFunction& p = rm.sandwich();
  const FiniteSemigroup& S = rm.base();
  const int count = rm.size();

  auto related = [&](const ReesTriple& x, const ReesTriple& y) {
    return x.mid == S.product3(p.at(x.row, y.row), y.mid,
                               p.at(y.col, x.col)) &&
           y.mid == S.product3(p.at(y.row, x.row), x.mid,
                               p.at(x.col, y.col));
  };

  std::vector<int> raw(count);
  for (int a = 0; a < count; ++a) {
    raw[a] = a;
  }
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (related(rm.triple(a), rm.triple(b))) {
        // Union by least representative.
        const int ra = raw[a];
        const int rb = raw[b];
        if (ra != rb) {
          for (int& c : raw) {
            if (c == std::max(ra, rb)) c = std::min(ra, rb);
          }
        }
      }
    }
  }

  Partition part = Partition::from_class_of(raw);

  // The closed form must itself be transitive: every same-class pair has
  // to satisfy the relation directly, otherwise it is not an equivalence.
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if ((part.class_of[a] == part.class_of[b]) !=
          related(rm.triple(a), rm.triple(b))) {
        throw DomainError(Errc::internal_inconsistency,
                          "closed-form gamma relation is not transitive",
                          {{"x", triple_str(rm.triple(a))},
                           {"y", triple_str(rm.triple(b))}});
      }
    }
  }

  return make_congruence(rm.semigroup(), part);
}

ImResult build_im(const SandwichFunction& p) {
  const McAlisterReport rep = validate_mcalister(p);
  if (!rep.all()) {
    throw mcalister_error(rep);
  }

  ReesMatrixSemigroup rm = build_rees(p, ReesMode::regular);

  const ClassificationReport rm_class = classify(rm.semigroup());
  if (!rm_class.is_generalized_inverse) {
    throw DomainError(Errc::internal_inconsistency,
                      "regular Rees matrix semigroup is not generalized "
                      "inverse");
  }

  Congruence gamma = min_inverse_congruence(rm.semigroup());
  Quotient q = quotient(rm.semigroup(), gamma);

  for (int x = 0; x < q.semigroup.order(); ++x) {
    if (inverses_of(q.semigroup, x).size() != 1) {
      throw DomainError(Errc::internal_inconsistency,
                        "inverse Rees matrix semigroup is not inverse");
    }
  }

  if (!check_local_isomorphism(q.projection).is_local_isomorphism()) {
    throw DomainError(Errc::internal_inconsistency,
                      "projection onto the quotient is not a local "
                      "isomorphism");
  }

  return ImResult{std::move(rm), std::move(gamma), q.semigroup,
                  q.projection};
}

namespace {

struct EnumerationPlan {
  std::vector<std::pair<int, int>> free_slots;  // (i, j) with j >= i
  std::vector<const std::vector<int>*> choices;  // candidate values per slot
};

}  // namespace

uint64_t enumerate_mcalister(
    const FiniteSemigroup& S, int index_size,
    const std::function<bool(const SandwichFunction&)>& yield,
    uint64_t guard) {
  if (index_size <= 0) {
    throw DomainError(Errc::empty_index_set,
                      "index size must be positive");
  }
  std::vector<int> inv;
  try {
    inv = unique_inverses(S);
  } catch (const DomainError&) {
    throw DomainError(Errc::base_not_inverse,
                      "enumeration base semigroup is not inverse");
  }

  const int m = index_size;
  const int n = S.order();
  std::vector<int> all(n);
  for (int s = 0; s < n; ++s) all[s] = s;
  const std::vector<int>& diag_choices = S.idempotents();

  // Free slots in row-major order; the lower triangle is determined by MF3
  // from earlier positions, so candidates come out in lexicographic order
  // of the full grid.
  EnumerationPlan plan;
  uint64_t space = 1;
  bool overflow = false;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      plan.free_slots.emplace_back(i, j);
      const auto& c = (i == j) ? diag_choices : all;
      plan.choices.push_back(&c);
      if (space > guard / std::max<uint64_t>(1, c.size())) {
        overflow = true;
      }
      space *= static_cast<uint64_t>(c.size());
    }
  }
  if (overflow || space > guard) {
    throw DomainError(Errc::search_space_too_large,
                      "sandwich enumeration space exceeds the guard",
                      {{"guard", std::to_string(guard)}});
  }

  const size_t slots = plan.free_slots.size();
  std::vector<size_t> pick(slots, 0);
  std::vector<int> entries(static_cast<size_t>(m) * m, 0);
  uint64_t yielded = 0;

  while (true) {
    for (size_t k = 0; k < slots; ++k) {
      const auto [i, j] = plan.free_slots[k];
      const int v = (*plan.choices[k])[pick[k]];
      entries[static_cast<size_t>(i) * m + j] = v;
      if (i != j) {
        entries[static_cast<size_t>(j) * m + i] = inv[v];
      }
    }
    SandwichFunction p = SandwichFunction::create(S, m, entries);
    if (validate_mcalister(p).all()) {
      ++yielded;
      if (!yield(p)) {
        return yielded;
      }
    }
    // Odometer step, least significant slot last.
    size_t k = slots;
    while (k > 0) {
      --k;
      if (++pick[k] < plan.choices[k]->size()) {
        break;
      }
      pick[k] = 0;
      if (k == 0) {
        return yielded;
      }
    }
  }
}

std::vector<SandwichFunction> enumerate_mcalister(const FiniteSemigroup& S,
                                                  int index_size,
                                                  size_t limit,
                                                  uint64_t guard) {
  std::vector<SandwichFunction> out;
  enumerate_mcalister(
      S, index_size,
      [&](const SandwichFunction& p) {
        out.push_back(p);
        return out.size() < limit;
      },
      guard);
  return out;
}

}  // namespace morita
