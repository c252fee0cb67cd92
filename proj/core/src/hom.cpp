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

#include "morita/hom.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace morita {

SemigroupMap identity_map(const FiniteSemigroup& S) {
  std::vector<int> images(S.order());
  std::iota(images.begin(), images.end(), 0);
  return SemigroupMap{S, S, std::move(images)};
}

std::optional<std::pair<int, int>> homomorphism_witness(
    const SemigroupMap& m) {
  const int n = m.source.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (m.images[m.source.product(a, b)] !=
          m.target.product(m.images[a], m.images[b])) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

bool is_homomorphism(const SemigroupMap& m) {
  return !homomorphism_witness(m).has_value();
}

bool is_surjective(const SemigroupMap& m) {
  std::vector<char> hit(m.target.order(), 0);
  for (int v : m.images) {
    hit[v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_injective(const SemigroupMap& m) {
  std::vector<char> hit(m.target.order(), 0);
  for (int v : m.images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_isomorphism(const SemigroupMap& m) {
  return m.source.order() == m.target.order() && is_injective(m) &&
         is_homomorphism(m);
}

namespace {

// The slice eSf as a sorted set of elements.
std::vector<int> slice(const FiniteSemigroup& S, int e, int f) {
  std::set<int> out;
  for (int s = 0; s < S.order(); ++s) {
    out.insert(S.product3(e, s, f));
  }
  return std::vector<int>(out.begin(), out.end());
}

// Restriction of m to eSf -> th(e) T th(f) is a bijection.
bool slice_bijective(const SemigroupMap& m, int e, int f) {
  const auto dom = slice(m.source, e, f);
  const auto cod = slice(m.target, m.images[e], m.images[f]);
  std::set<int> image;
  for (int x : dom) {
    image.insert(m.images[x]);
  }
  // Injective on the slice and onto the target slice.
  return image.size() == dom.size() &&
         std::vector<int>(image.begin(), image.end()) == cod;
}

bool all_regular(const FiniteSemigroup& S) {
  for (int s = 0; s < S.order(); ++s) {
    if (!is_regular_element(S, s)) return false;
  }
  return true;
}

}  // namespace

LocalIsoReport check_local_isomorphism(const SemigroupMap& m) {
  if (auto w = homomorphism_witness(m)) {
    throw DomainError(Errc::not_homomorphism,
                      "map is not multiplicative",
                      {{"a", std::to_string(w->first)},
                       {"b", std::to_string(w->second)}});
  }
  LocalIsoReport r;
  r.surjective = is_surjective(m);

  const auto& es = m.source.idempotents();
  r.li1 = true;
  for (int e : es) {
    for (int f : es) {
      if (!slice_bijective(m, e, f)) {
        r.li1 = false;
        r.li1_witness = std::make_pair(e, f);
        break;
      }
    }
    if (!r.li1) break;
  }

  // LI2: each idempotent of T is D-related to the image of an idempotent.
  r.li2 = true;
  const Partition d = green_d(m.target);
  std::vector<char> image_class(d.num_classes, 0);
  for (int e : es) {
    image_class[d.class_of[m.images[e]]] = 1;
  }
  for (int i : m.target.idempotents()) {
    if (!image_class[d.class_of[i]]) {
      r.li2 = false;
      r.li2_witness = i;
      break;
    }
  }

  // Surjective maps between regular semigroups: diagonal restrictions
  // alone must decide the verdict; disagreement means a bug upstream.
  if (r.surjective && all_regular(m.source) && all_regular(m.target)) {
    bool diag = true;
    for (int e : es) {
      if (!slice_bijective(m, e, e)) {
        diag = false;
        break;
      }
    }
    r.diagonal_shortcut_checked = true;
    if (diag != (r.li1 && r.li2)) {
      throw DomainError(Errc::internal_inconsistency,
                        "diagonal local-isomorphism shortcut disagrees with "
                        "the full LI1/LI2 check");
    }
  }
  return r;
}

namespace {

struct ElementSignature {
  bool idempotent;
  size_t inverse_count;
  int idem_power_index;  // least k >= 1 with s^k idempotent
  size_t right_ideal_size;
  size_t left_ideal_size;
  size_t d_class_size;

  friend bool operator==(const ElementSignature&,
                         const ElementSignature&) = default;
  friend auto operator<=>(const ElementSignature&,
                          const ElementSignature&) = default;
};

int idem_power_index(const FiniteSemigroup& S, int s) {
  int x = s;
  for (int k = 1; k <= S.order() + 1; ++k) {
    if (S.is_idempotent(x)) return k;
    x = S.product(x, s);
  }
  return S.order() + 2;  // unreachable in a finite semigroup
}

std::vector<ElementSignature> signatures(const FiniteSemigroup& S) {
  const int n = S.order();
  const Partition d = green_d(S);
  std::vector<size_t> dsize(d.num_classes, 0);
  for (int s = 0; s < n; ++s) {
    ++dsize[d.class_of[s]];
  }
  std::vector<ElementSignature> sig(n);
  for (int s = 0; s < n; ++s) {
    std::set<int> right{s}, left{s};
    for (int t = 0; t < n; ++t) {
      right.insert(S.product(s, t));
      left.insert(S.product(t, s));
    }
    sig[s] = ElementSignature{S.is_idempotent(s),
                              inverses_of(S, s).size(),
                              idem_power_index(S, s),
                              right.size(),
                              left.size(),
                              dsize[d.class_of[s]]};
  }
  return sig;
}

struct IsoSearch {
  const FiniteSemigroup& S;
  const FiniteSemigroup& T;
  std::vector<ElementSignature> sig_s;
  std::vector<ElementSignature> sig_t;
  std::vector<int> order;    // assignment order over source elements
  std::vector<int> image;    // partial map, -1 = unassigned
  std::vector<char> used;    // target elements already taken
  std::vector<int> assigned;

  bool consistent(int a, int x) const {
    // Check every product involving a whose operands and result are all
    // assigned, treating a as provisionally mapped to x.
    auto img = [&](int s) -> int { return s == a ? x : image[s]; };
    for (int b : assigned) {
      const int ab = S.product(a, b);
      if (img(ab) >= 0 && T.product(x, image[b]) != img(ab)) return false;
      const int ba = S.product(b, a);
      if (img(ba) >= 0 && T.product(image[b], x) != img(ba)) return false;
    }
    const int aa = S.product(a, a);
    if (img(aa) >= 0 && T.product(x, x) != img(aa)) return false;
    return true;
  }

  bool extend(size_t pos) {
    if (pos == order.size()) {
      SemigroupMap m{S, T, image};
      return is_isomorphism(m);
    }
    const int a = order[pos];
    for (int x = 0; x < T.order(); ++x) {
      if (used[x] || !(sig_s[a] == sig_t[x])) continue;
      if (!consistent(a, x)) continue;
      image[a] = x;
      used[x] = 1;
      assigned.push_back(a);
      if (extend(pos + 1)) return true;
      assigned.pop_back();
      used[x] = 0;
      image[a] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<SemigroupMap> find_isomorphism(const FiniteSemigroup& S,
                                             const FiniteSemigroup& T) {
  if (S.order() != T.order()) return std::nullopt;
  const int n = S.order();

  IsoSearch search{S, T, signatures(S), signatures(T), {}, {}, {}, {}};

  // Invariant prune: the signature multisets must match.
  {
    auto ms = search.sig_s;
    auto mt = search.sig_t;
    std::sort(ms.begin(), ms.end());
    std::sort(mt.begin(), mt.end());
    if (ms != mt) return std::nullopt;
  }

  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) {
                     const bool ia = S.is_idempotent(a);
                     const bool ib = S.is_idempotent(b);
                     if (ia != ib) return ia;
                     const auto da = search.sig_s[a].d_class_size;
                     const auto db = search.sig_s[b].d_class_size;
                     if (da != db) return da < db;
                     return a < b;
                   });
  search.image.assign(n, -1);
  search.used.assign(n, 0);

  if (search.extend(0)) {
    return SemigroupMap{S, T, search.image};
  }
  return std::nullopt;
}

}  // namespace morita
