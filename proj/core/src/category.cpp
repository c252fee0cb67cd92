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

#include "morita/category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace morita {

FiniteCategory FiniteCategory::build(FiniteSemigroup payload_semigroup,
                                     std::vector<int> object_payloads,
                                     std::vector<std::string> object_labels,
                                     std::vector<CatMorphism> morphisms) {
  FiniteCategory C(std::move(payload_semigroup));
  C.object_payloads_ = std::move(object_payloads);
  C.object_labels_ = std::move(object_labels);
  const int k = C.num_objects();
  if (C.object_labels_.empty()) {
    for (int o = 0; o < k; ++o) {
      C.object_labels_.push_back("o" + std::to_string(o));
    }
  }

  std::sort(morphisms.begin(), morphisms.end(),
            [](const CatMorphism& a, const CatMorphism& b) {
              return std::tie(a.src, a.dst, a.payload) <
                     std::tie(b.src, b.dst, b.payload);
            });
  C.morphisms_ = std::move(morphisms);

  const int pn = C.payload_.order();
  C.triple_index_.assign(static_cast<size_t>(pn) * k * k, -1);
  C.hom_.assign(static_cast<size_t>(k) * k, {});
  for (int id = 0; id < C.num_morphisms(); ++id) {
    const CatMorphism& mor = C.morphisms_[id];
    if (mor.src < 0 || mor.src >= k || mor.dst < 0 || mor.dst >= k ||
        mor.payload < 0 || mor.payload >= pn) {
      throw std::logic_error("category morphism out of range");
    }
    size_t key =
        (static_cast<size_t>(mor.payload) * k + mor.src) * k + mor.dst;
    if (C.triple_index_[key] >= 0) {
      throw std::logic_error("duplicate category morphism triple");
    }
    C.triple_index_[key] = id;
    C.hom_[static_cast<size_t>(mor.src) * k + mor.dst].push_back(id);
  }

  C.identity_.assign(k, -1);
  for (int o = 0; o < k; ++o) {
    C.identity_[o] = C.find_morphism(o, C.object_payloads_[o], o);
    if (C.identity_[o] < 0) {
      throw std::logic_error("category object without identity morphism");
    }
  }
  return C;
}

std::string FiniteCategory::morphism_label(int id) const {
  const CatMorphism& m = morphisms_[id];
  return "(" + object_label(m.src) + "," + payload_.label(m.payload) + "," +
         object_label(m.dst) + ")";
}

int FiniteCategory::find_morphism(int src, int payload, int dst) const {
  const int k = num_objects();
  return triple_index_[(static_cast<size_t>(payload) * k + src) * k + dst];
}

std::optional<int> FiniteCategory::compose(int f, int g) const {
  const CatMorphism& mf = morphisms_[f];
  const CatMorphism& mg = morphisms_[g];
  if (mf.dst != mg.src) {
    return std::nullopt;
  }
  const int prod = payload_.product(mf.payload, mg.payload);
  const int id = find_morphism(mf.src, prod, mg.dst);
  if (id < 0) {
    throw DomainError(Errc::internal_inconsistency,
                      "category is not closed under composition",
                      {{"f", morphism_label(f)}, {"g", morphism_label(g)}});
  }
  return id;
}

std::optional<std::pair<int, int>> FiniteCategory::object_iso_pair(
    int x, int y) const {
  for (int u : hom(x, y)) {
    for (int v : hom(y, x)) {
      if (*compose(u, v) == identity(x) && *compose(v, u) == identity(y)) {
        return std::make_pair(u, v);
      }
    }
  }
  return std::nullopt;
}

bool FiniteCategory::objects_isomorphic(int x, int y) const {
  return x == y || object_iso_pair(x, y).has_value();
}

CategoryCheck validate_category(const FiniteCategory& C,
                                uint64_t assoc_budget) {
  const int k = C.num_objects();
  const int mcount = C.num_morphisms();

  // Identity laws and closure; compose throws on a missing composite.
  uint64_t composable = 0;
  try {
    for (int f = 0; f < mcount; ++f) {
      const CatMorphism& m = C.morphism(f);
      const auto left = C.compose(C.identity(m.src), f);
      const auto right = C.compose(f, C.identity(m.dst));
      if (!left || *left != f || !right || *right != f) {
        return {false, "identity law fails at " + C.morphism_label(f),
                false};
      }
    }
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        for (int f : C.hom(x, y)) {
          for (int z = 0; z < k; ++z) {
            for (int g : C.hom(y, z)) {
              (void)C.compose(f, g);
              ++composable;
            }
          }
        }
      }
    }
  } catch (const DomainError& e) {
    return {false, e.what(), false};
  }

  CategoryCheck out;
  // Associativity over composable triples; inherited from the payload
  // semigroup when the budget is exceeded.
  if (composable * std::max(1, mcount) <= assoc_budget) {
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        for (int f : C.hom(x, y)) {
          for (int z = 0; z < k; ++z) {
            for (int g : C.hom(y, z)) {
              const int fg = *C.compose(f, g);
              for (int w = 0; w < k; ++w) {
                for (int h : C.hom(z, w)) {
                  if (*C.compose(fg, h) != *C.compose(f, *C.compose(g, h))) {
                    return {false,
                            "associativity fails at " + C.morphism_label(f) +
                                ", " + C.morphism_label(g) + ", " +
                                C.morphism_label(h),
                            true};
                  }
                }
              }
            }
          }
        }
      }
    }
    out.associativity_exhaustive = true;
  } else if (C.payload_semigroup().associativity_witness()) {
    return {false, "payload semigroup is not associative", false};
  }
  return out;
}

FiniteCategory cauchy_completion(const FiniteSemigroup& S) {
  if (!has_local_units(S)) {
    throw DomainError(Errc::no_local_units,
                      "semigroup does not have local units");
  }
  const auto& es = S.idempotents();
  const int k = static_cast<int>(es.size());
  std::vector<int> obj_of(S.order(), -1);
  std::vector<std::string> labels(k);
  for (int o = 0; o < k; ++o) {
    obj_of[es[o]] = o;
    labels[o] = S.label(es[o]);
  }

  std::vector<CatMorphism> morphisms;
  for (int o = 0; o < k; ++o) {
    for (int q = 0; q < k; ++q) {
      for (int s = 0; s < S.order(); ++s) {
        if (S.product3(es[o], s, es[q]) == s) {
          morphisms.push_back(CatMorphism{o, s, q});
        }
      }
    }
  }
  return FiniteCategory::build(S, std::vector<int>(es.begin(), es.end()),
                               std::move(labels), std::move(morphisms));
}

FunctorChecks functor_checks(const FunctorMap& F) {
  const FiniteCategory& C = F.source;
  const FiniteCategory& D = F.target;
  FunctorChecks r;

  r.functorial = true;
  for (int f = 0; f < C.num_morphisms() && r.functorial; ++f) {
    const CatMorphism& m = C.morphism(f);
    const CatMorphism& fm = D.morphism(F.morphism_map[f]);
    if (fm.src != F.object_map[m.src] || fm.dst != F.object_map[m.dst]) {
      r.functorial = false;
      r.witness = "endpoints not preserved at " + C.morphism_label(f);
    }
  }
  for (int o = 0; o < C.num_objects() && r.functorial; ++o) {
    if (F.morphism_map[C.identity(o)] != D.identity(F.object_map[o])) {
      r.functorial = false;
      r.witness = "identity not preserved at object " + C.object_label(o);
    }
  }
  if (r.functorial) {
    for (int x = 0; x < C.num_objects() && r.functorial; ++x) {
      for (int y = 0; y < C.num_objects() && r.functorial; ++y) {
        for (int f : C.hom(x, y)) {
          for (int z = 0; z < C.num_objects(); ++z) {
            for (int g : C.hom(y, z)) {
              const int fg = *C.compose(f, g);
              const auto dfg =
                  D.compose(F.morphism_map[f], F.morphism_map[g]);
              if (!dfg || *dfg != F.morphism_map[fg]) {
                r.functorial = false;
                r.witness = "composition not preserved at " +
                            C.morphism_label(f) + ", " + C.morphism_label(g);
                break;
              }
            }
            if (!r.functorial) break;
          }
          if (!r.functorial) break;
        }
      }
    }
  }

  r.full = true;
  r.faithful = true;
  for (int x = 0; x < C.num_objects(); ++x) {
    for (int y = 0; y < C.num_objects(); ++y) {
      const auto& dom = C.hom(x, y);
      const auto& cod = D.hom(F.object_map[x], F.object_map[y]);
      std::vector<int> image;
      image.reserve(dom.size());
      for (int f : dom) {
        image.push_back(F.morphism_map[f]);
      }
      std::sort(image.begin(), image.end());
      const bool inj =
          std::adjacent_find(image.begin(), image.end()) == image.end();
      if (!inj && r.faithful) {
        r.faithful = false;
        if (r.witness.empty()) {
          r.witness = "not faithful on hom(" + C.object_label(x) + "," +
                      C.object_label(y) + ")";
        }
      }
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image != cod && r.full) {
        // cod is sorted by construction.
        r.full = false;
        if (r.witness.empty()) {
          r.witness = "not full on hom(" + C.object_label(x) + "," +
                      C.object_label(y) + ")";
        }
      }
    }
  }

  // Essential surjectivity via iso-classes of target objects.
  const int dk = D.num_objects();
  std::vector<int> cls(dk, -1);
  int num_classes = 0;
  for (int y = 0; y < dk; ++y) {
    if (cls[y] >= 0) continue;
    cls[y] = num_classes;
    for (int z = y + 1; z < dk; ++z) {
      if (cls[z] < 0 && D.objects_isomorphic(y, z)) {
        cls[z] = num_classes;
      }
    }
    ++num_classes;
  }
  std::vector<char> hit(num_classes, 0);
  for (int x = 0; x < C.num_objects(); ++x) {
    hit[cls[F.object_map[x]]] = 1;
  }
  r.essentially_surjective =
      std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  if (!r.essentially_surjective && r.witness.empty()) {
    for (int y = 0; y < dk; ++y) {
      if (!hit[cls[y]]) {
        r.witness = "object " + D.object_label(y) + " misses the image";
        break;
      }
    }
  }
  return r;
}

FunctorMap functor_theta(const SemigroupMap& theta) {
  if (auto w = homomorphism_witness(theta)) {
    throw DomainError(Errc::not_homomorphism, "map is not multiplicative",
                      {{"a", std::to_string(w->first)},
                       {"b", std::to_string(w->second)}});
  }
  FiniteCategory src = cauchy_completion(theta.source);
  FiniteCategory dst = cauchy_completion(theta.target);

  std::vector<int> obj_of_target_idem(theta.target.order(), -1);
  for (int o = 0; o < dst.num_objects(); ++o) {
    obj_of_target_idem[dst.object_payload(o)] = o;
  }

  std::vector<int> object_map(src.num_objects());
  for (int o = 0; o < src.num_objects(); ++o) {
    object_map[o] = obj_of_target_idem[theta.apply(src.object_payload(o))];
  }
  std::vector<int> morphism_map(src.num_morphisms());
  for (int f = 0; f < src.num_morphisms(); ++f) {
    const CatMorphism& m = src.morphism(f);
    const int id = dst.find_morphism(object_map[m.src],
                                     theta.apply(m.payload), object_map[m.dst]);
    if (id < 0) {
      throw DomainError(Errc::internal_inconsistency,
                        "image triple missing from the target completion",
                        {{"morphism", src.morphism_label(f)}});
    }
    morphism_map[f] = id;
  }
  return FunctorMap{std::move(src), std::move(dst), std::move(object_map),
                    std::move(morphism_map)};
}

FunctorMap functor_psi(const ReesMatrixSemigroup& rm) {
  if (rm.mode() != ReesMode::regular) {
    throw std::logic_error("functor_psi requires a REGULAR-mode semigroup");
  }
  const SandwichFunction& p = rm.sandwich();
  {
    const McAlisterReport rep = validate_mcalister(p);
    if (!rep.all()) {
      throw DomainError(Errc::mcalister_violation,
                        "sandwich function violates " + rep.failing(),
                        {{"failing", rep.failing()}});
    }
  }
  const FiniteSemigroup& S = rm.base();
  FiniteCategory src = cauchy_completion(rm.semigroup());
  FiniteCategory dst = cauchy_completion(S);

  std::vector<int> obj_of_base_idem(S.order(), -1);
  for (int o = 0; o < dst.num_objects(); ++o) {
    obj_of_base_idem[dst.object_payload(o)] = o;
  }

  // Object (i,a,j) |-> a p(j,i).
  std::vector<int> object_map(src.num_objects());
  for (int o = 0; o < src.num_objects(); ++o) {
    const ReesTriple t = rm.triple(src.object_payload(o));
    const int e = S.product(t.mid, p.at(t.col, t.row));
    if (!S.is_idempotent(e) || obj_of_base_idem[e] < 0) {
      throw DomainError(Errc::internal_inconsistency,
                        "object image is not an idempotent of the base");
    }
    object_map[o] = obj_of_base_idem[e];
  }

  // [(i,a,j),(i,s,k),(l,b,k)] |-> (a p(j,i), s p(k,l), b p(k,l)).
  std::vector<int> morphism_map(src.num_morphisms());
  for (int f = 0; f < src.num_morphisms(); ++f) {
    const CatMorphism& m = src.morphism(f);
    const ReesTriple e1 = rm.triple(src.object_payload(m.src));
    const ReesTriple b = rm.triple(m.payload);
    const ReesTriple e2 = rm.triple(src.object_payload(m.dst));
    if (e1.row != b.row || e2.col != b.col) {
      throw DomainError(Errc::internal_inconsistency,
                        "morphism indices do not match its endpoints",
                        {{"morphism", src.morphism_label(f)}});
    }
    const int mid = S.product(b.mid, p.at(b.col, e2.row));
    const int id = dst.find_morphism(object_map[m.src], mid,
                                     object_map[m.dst]);
    if (id < 0) {
      throw DomainError(Errc::internal_inconsistency,
                        "image triple missing from the base completion",
                        {{"morphism", src.morphism_label(f)}});
    }
    morphism_map[f] = id;
  }
  return FunctorMap{std::move(src), std::move(dst), std::move(object_map),
                    std::move(morphism_map)};
}

SkeletonResult skeleton(const FiniteCategory& C) {
  const int k = C.num_objects();
  std::vector<int> object_class(k, -1);
  std::vector<int> representative;
  std::vector<std::pair<int, int>> retraction(k, {-1, -1});

  for (int x = 0; x < k; ++x) {
    if (object_class[x] >= 0) continue;
    const int cls = static_cast<int>(representative.size());
    object_class[x] = cls;
    representative.push_back(x);
    retraction[x] = {C.identity(x), C.identity(x)};
    for (int y = x + 1; y < k; ++y) {
      if (object_class[y] >= 0) continue;
      if (auto uv = C.object_iso_pair(x, y)) {
        object_class[y] = cls;
        retraction[y] = {uv->first, uv->second};  // u: rep->y, v: y->rep
      }
    }
  }

  const int classes = static_cast<int>(representative.size());
  std::vector<int> new_obj(k, -1);
  std::vector<int> payloads(classes);
  std::vector<std::string> labels(classes);
  for (int c = 0; c < classes; ++c) {
    new_obj[representative[c]] = c;
    payloads[c] = C.object_payload(representative[c]);
    labels[c] = C.object_label(representative[c]);
  }

  std::vector<CatMorphism> morphisms;
  for (int f = 0; f < C.num_morphisms(); ++f) {
    const CatMorphism& m = C.morphism(f);
    if (new_obj[m.src] >= 0 && new_obj[m.dst] >= 0) {
      morphisms.push_back(
          CatMorphism{new_obj[m.src], m.payload, new_obj[m.dst]});
    }
  }
  return SkeletonResult{
      FiniteCategory::build(C.payload_semigroup(), std::move(payloads),
                            std::move(labels), std::move(morphisms)),
      std::move(object_class), std::move(representative), std::move(new_obj),
      std::move(retraction)};
}

namespace {

// Multiset signature of an object: endo hom size plus the sorted multiset
// of (out, in) hom sizes against every object.
std::vector<std::pair<int, int>> object_signature(const FiniteCategory& C,
                                                  int x) {
  std::vector<std::pair<int, int>> sig;
  sig.emplace_back(static_cast<int>(C.hom(x, x).size()), -1);
  std::vector<std::pair<int, int>> rest;
  for (int y = 0; y < C.num_objects(); ++y) {
    if (y == x) continue;
    rest.emplace_back(static_cast<int>(C.hom(x, y).size()),
                      static_cast<int>(C.hom(y, x).size()));
  }
  std::sort(rest.begin(), rest.end());
  sig.insert(sig.end(), rest.begin(), rest.end());
  return sig;
}

struct CatIsoSearch {
  const FiniteCategory& C;
  const FiniteCategory& D;
  std::vector<int> obj_map;   // -1 unassigned
  std::vector<char> obj_used;
  std::vector<int> mor_map;
  std::vector<char> mor_used;
  std::vector<int> mor_order;

  bool hom_sizes_match(int x, int dx) const {
    for (int y = 0; y < C.num_objects(); ++y) {
      if (obj_map[y] < 0) continue;
      if (C.hom(x, y).size() != D.hom(dx, obj_map[y]).size() ||
          C.hom(y, x).size() != D.hom(obj_map[y], dx).size()) {
        return false;
      }
    }
    return true;
  }

  bool assign_objects(int x) {
    if (x == C.num_objects()) {
      return assign_morphisms(0);
    }
    const auto sig = object_signature(C, x);
    for (int dx = 0; dx < D.num_objects(); ++dx) {
      if (obj_used[dx] || sig != object_signature(D, dx)) continue;
      obj_map[x] = dx;
      obj_used[dx] = 1;
      if (hom_sizes_match(x, dx) && assign_objects(x + 1)) {
        return true;
      }
      obj_used[dx] = 0;
      obj_map[x] = -1;
    }
    return false;
  }

  bool composition_consistent(int f) const {
    // Check every composition involving f whose participants are mapped.
    const int mcount = C.num_morphisms();
    for (int g = 0; g < mcount; ++g) {
      if (mor_map[g] < 0) continue;
      for (auto [a, b] : {std::pair{f, g}, std::pair{g, f}}) {
        if (C.morphism(a).dst != C.morphism(b).src) continue;
        const int ab = *C.compose(a, b);
        if (mor_map[ab] < 0) continue;
        const auto dab = D.compose(mor_map[a], mor_map[b]);
        if (!dab || *dab != mor_map[ab]) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign_morphisms(size_t pos) {
    if (pos == mor_order.size()) {
      return verify();
    }
    const int f = mor_order[pos];
    const CatMorphism& m = C.morphism(f);
    // Identities are forced.
    if (f == C.identity(m.src)) {
      const int df = D.identity(obj_map[m.src]);
      if (mor_used[df]) return false;
      mor_map[f] = df;
      mor_used[df] = 1;
      const bool ok = composition_consistent(f) && assign_morphisms(pos + 1);
      if (ok) return true;
      mor_used[df] = 0;
      mor_map[f] = -1;
      return false;
    }
    for (int df : D.hom(obj_map[m.src], obj_map[m.dst])) {
      if (mor_used[df]) continue;
      mor_map[f] = df;
      mor_used[df] = 1;
      if (composition_consistent(f) && assign_morphisms(pos + 1)) {
        return true;
      }
      mor_used[df] = 0;
      mor_map[f] = -1;
    }
    return false;
  }

  bool verify() const {
    for (int x = 0; x < C.num_objects(); ++x) {
      if (mor_map[C.identity(x)] != D.identity(obj_map[x])) return false;
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
      for (int g = 0; g < C.num_morphisms(); ++g) {
        if (C.morphism(f).dst != C.morphism(g).src) continue;
        const auto d = D.compose(mor_map[f], mor_map[g]);
        if (!d || *d != mor_map[*C.compose(f, g)]) return false;
      }
    }
    return true;
  }
};

}  // namespace

EquivalenceVerdict decide_equivalence(const FiniteCategory& C,
                                      const FiniteCategory& D,
                                      int max_skeleton_morphisms) {
  const SkeletonResult sc = skeleton(C);
  const SkeletonResult sd = skeleton(D);
  const FiniteCategory& A = sc.skeleton;
  const FiniteCategory& B = sd.skeleton;

  EquivalenceVerdict v;
  if (A.num_objects() != B.num_objects()) {
    v.obstruction = "skeleton object counts differ: " +
                    std::to_string(A.num_objects()) + " vs " +
                    std::to_string(B.num_objects());
    return v;
  }
  if (A.num_morphisms() != B.num_morphisms()) {
    v.obstruction = "skeleton morphism counts differ: " +
                    std::to_string(A.num_morphisms()) + " vs " +
                    std::to_string(B.num_morphisms());
    return v;
  }
  {
    std::vector<std::vector<std::pair<int, int>>> sa, sb;
    for (int x = 0; x < A.num_objects(); ++x) {
      sa.push_back(object_signature(A, x));
      sb.push_back(object_signature(B, x));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      v.obstruction = "skeleton hom-size signatures differ";
      return v;
    }
  }
  if (A.num_morphisms() > max_skeleton_morphisms ||
      B.num_morphisms() > max_skeleton_morphisms) {
    throw DomainError(Errc::search_space_too_large,
                      "skeleton exceeds the search guard",
                      {{"guard", std::to_string(max_skeleton_morphisms)}});
  }

  CatIsoSearch search{A, B, {}, {}, {}, {}, {}};
  search.obj_map.assign(A.num_objects(), -1);
  search.obj_used.assign(B.num_objects(), 0);
  search.mor_map.assign(A.num_morphisms(), -1);
  search.mor_used.assign(B.num_morphisms(), 0);
  search.mor_order.resize(A.num_morphisms());
  std::iota(search.mor_order.begin(), search.mor_order.end(), 0);

  if (search.assign_objects(0)) {
    v.equivalent = true;
    v.witness = FunctorMap{A, B, search.obj_map, search.mor_map};
  } else {
    v.obstruction = "no skeleton isomorphism exists";
  }
  return v;
}

std::string dump_category(const FiniteCategory& C) {
  std::ostringstream out;
  for (int o = 0; o < C.num_objects(); ++o) {
    out << "object " << o << " " << C.object_label(o) << "\n";
  }
  for (int f = 0; f < C.num_morphisms(); ++f) {
    const CatMorphism& m = C.morphism(f);
    out << "mor " << f << " " << m.src << " " << m.dst << " "
        << C.morphism_label(f) << "\n";
  }
  for (int f = 0; f < C.num_morphisms(); ++f) {
    for (int g = 0; g < C.num_morphisms(); ++g) {
      if (C.morphism(f).dst != C.morphism(g).src) continue;
      out << "comp " << f << " " << g << " " << *C.compose(f, g) << "\n";
    }
  }
  return out.str();
}

}  // namespace morita
