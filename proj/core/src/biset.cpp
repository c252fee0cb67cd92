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

#include "morita/biset.hpp"

#include <algorithm>

namespace morita {

EquivalenceBiset identity_biset(const FiniteSemigroup& S) {
  const auto inv = unique_inverses(S);
  const int n = S.order();
  EquivalenceBiset B{S, S, n, {}, {}, {}, {}};
  B.left_action.resize(static_cast<size_t>(n) * n);
  B.right_action.resize(static_cast<size_t>(n) * n);
  B.bra.resize(static_cast<size_t>(n) * n);
  B.ket.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      B.left_action[static_cast<size_t>(a) * n + b] = S.product(a, b);
      B.right_action[static_cast<size_t>(a) * n + b] = S.product(a, b);
      B.bra[static_cast<size_t>(a) * n + b] = S.product(a, inv[b]);
      B.ket[static_cast<size_t>(a) * n + b] = S.product(inv[a], b);
    }
  }
  return B;
}

bool BisetReport::axioms_pass() const {
  for (const auto& c : checks) {
    if (c.name.rfind("derived", 0) == 0) continue;
    if (!c.pass) return false;
  }
  return true;
}

bool BisetReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BisetCheck& c) { return c.pass; });
}

const BisetCheck* BisetReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

namespace {

std::string xyz(int x, int y, int z) {
  return "x=" + std::to_string(x) + " y=" + std::to_string(y) +
         " z=" + std::to_string(z);
}

void require_total(const EquivalenceBiset& B) {
  const int m = B.carrier_size;
  const int ns = B.left.order();
  const int nt = B.right.order();
  if (m <= 0) {
    throw DomainError(Errc::partial_mapping, "carrier is empty");
  }
  auto bad = [&](const std::vector<int>& grid, size_t rows, size_t cols,
                 int bound, const char* name) {
    if (grid.size() != rows * cols) {
      throw DomainError(Errc::partial_mapping,
                        std::string(name) + " grid has the wrong shape");
    }
    for (size_t k = 0; k < grid.size(); ++k) {
      if (grid[k] < 0 || grid[k] >= bound) {
        throw DomainError(Errc::partial_mapping,
                          std::string(name) + " entry out of range",
                          {{"index", std::to_string(k)},
                           {"value", std::to_string(grid[k])}});
      }
    }
  };
  bad(B.left_action, static_cast<size_t>(ns), m, m, "left_action");
  bad(B.right_action, static_cast<size_t>(m), nt, m, "right_action");
  bad(B.bra, static_cast<size_t>(m), m, ns, "bra");
  bad(B.ket, static_cast<size_t>(m), m, nt, "ket");
}

}  // namespace

BisetReport validate_biset(const EquivalenceBiset& B) {
  std::vector<int> inv_s, inv_t;
  try {
    inv_s = unique_inverses(B.left);
    inv_t = unique_inverses(B.right);
  } catch (const DomainError& e) {
    throw DomainError(Errc::not_inverse_base,
                      "biset base semigroups must be inverse", e.details());
  }
  require_total(B);

  const int m = B.carrier_size;
  const FiniteSemigroup& S = B.left;
  const FiniteSemigroup& T = B.right;
  BisetReport r;
  auto check = [&](const std::string& name, auto&& body) {
    BisetCheck c{name, true, ""};
    body(c);
    r.checks.push_back(std::move(c));
  };

  check("left_action_associative", [&](BisetCheck& c) {
    for (int s = 0; s < S.order() && c.pass; ++s)
      for (int s2 = 0; s2 < S.order() && c.pass; ++s2)
        for (int x = 0; x < m; ++x)
          if (B.act_l(S.product(s, s2), x) != B.act_l(s, B.act_l(s2, x))) {
            c = {c.name, false, "s=" + std::to_string(s) +
                                    " s'=" + std::to_string(s2) +
                                    " x=" + std::to_string(x)};
            break;
          }
  });
  check("right_action_associative", [&](BisetCheck& c) {
    for (int x = 0; x < m && c.pass; ++x)
      for (int t = 0; t < T.order() && c.pass; ++t)
        for (int t2 = 0; t2 < T.order(); ++t2)
          if (B.act_r(x, T.product(t, t2)) != B.act_r(B.act_r(x, t), t2)) {
            c = {c.name, false, "x=" + std::to_string(x) +
                                    " t=" + std::to_string(t) +
                                    " t'=" + std::to_string(t2)};
            break;
          }
  });
  check("actions_compatible", [&](BisetCheck& c) {
    for (int s = 0; s < S.order() && c.pass; ++s)
      for (int x = 0; x < m && c.pass; ++x)
        for (int t = 0; t < T.order(); ++t)
          if (B.act_r(B.act_l(s, x), t) != B.act_l(s, B.act_r(x, t))) {
            c = {c.name, false, "s=" + std::to_string(s) +
                                    " x=" + std::to_string(x) +
                                    " t=" + std::to_string(t)};
            break;
          }
  });
  check("left_unitary", [&](BisetCheck& c) {
    for (int x = 0; x < m; ++x) {
      bool hit = false;
      for (int s = 0; s < S.order() && !hit; ++s)
        for (int y = 0; y < m; ++y)
          if (B.act_l(s, y) == x) {
            hit = true;
            break;
          }
      if (!hit) {
        c = {c.name, false, "x=" + std::to_string(x)};
        break;
      }
    }
  });
  check("right_unitary", [&](BisetCheck& c) {
    for (int x = 0; x < m; ++x) {
      bool hit = false;
      for (int y = 0; y < m && !hit; ++y)
        for (int t = 0; t < T.order(); ++t)
          if (B.act_r(y, t) == x) {
            hit = true;
            break;
          }
      if (!hit) {
        c = {c.name, false, "x=" + std::to_string(x)};
        break;
      }
    }
  });
  check("bra_surjective", [&](BisetCheck& c) {
    std::vector<char> hit(S.order(), 0);
    for (int v : B.bra) hit[v] = 1;
    for (int s = 0; s < S.order(); ++s)
      if (!hit[s]) {
        c = {c.name, false, "s=" + std::to_string(s)};
        break;
      }
  });
  check("ket_surjective", [&](BisetCheck& c) {
    std::vector<char> hit(T.order(), 0);
    for (int v : B.ket) hit[v] = 1;
    for (int t = 0; t < T.order(); ++t)
      if (!hit[t]) {
        c = {c.name, false, "t=" + std::to_string(t)};
        break;
      }
  });

  check("M1", [&](BisetCheck& c) {
    for (int s = 0; s < S.order() && c.pass; ++s)
      for (int x = 0; x < m && c.pass; ++x)
        for (int y = 0; y < m; ++y)
          if (B.bra_at(B.act_l(s, x), y) != S.product(s, B.bra_at(x, y))) {
            c = {c.name, false, "s=" + std::to_string(s) +
                                    " x=" + std::to_string(x) +
                                    " y=" + std::to_string(y)};
            break;
          }
  });
  check("M2", [&](BisetCheck& c) {
    for (int x = 0; x < m && c.pass; ++x)
      for (int y = 0; y < m; ++y)
        if (B.bra_at(y, x) != inv_s[B.bra_at(x, y)]) {
          c = {c.name, false,
               "x=" + std::to_string(x) + " y=" + std::to_string(y)};
          break;
        }
  });
  check("M3", [&](BisetCheck& c) {
    for (int x = 0; x < m; ++x)
      if (B.act_l(B.bra_at(x, x), x) != x) {
        c = {c.name, false, "x=" + std::to_string(x)};
        break;
      }
  });
  check("M4", [&](BisetCheck& c) {
    for (int x = 0; x < m && c.pass; ++x)
      for (int y = 0; y < m && c.pass; ++y)
        for (int t = 0; t < T.order(); ++t)
          if (B.ket_at(x, B.act_r(y, t)) !=
              T.product(B.ket_at(x, y), t)) {
            c = {c.name, false, "x=" + std::to_string(x) +
                                    " y=" + std::to_string(y) +
                                    " t=" + std::to_string(t)};
            break;
          }
  });
  check("M5", [&](BisetCheck& c) {
    for (int x = 0; x < m && c.pass; ++x)
      for (int y = 0; y < m; ++y)
        if (B.ket_at(x, y) != inv_t[B.ket_at(y, x)]) {
          c = {c.name, false,
               "x=" + std::to_string(x) + " y=" + std::to_string(y)};
          break;
        }
  });
  check("M6", [&](BisetCheck& c) {
    for (int x = 0; x < m; ++x)
      if (B.act_r(x, B.ket_at(x, x)) != x) {
        c = {c.name, false, "x=" + std::to_string(x)};
        break;
      }
  });
  check("M7", [&](BisetCheck& c) {
    for (int x = 0; x < m && c.pass; ++x)
      for (int y = 0; y < m && c.pass; ++y)
        for (int z = 0; z < m; ++z)
          if (B.act_l(B.bra_at(x, y), z) != B.act_r(x, B.ket_at(y, z))) {
            c = {c.name, false, xyz(x, y, z)};
            break;
          }
  });

  // Derived identities. They follow from the axioms, so a failure while
  // the axioms pass indicates an internal bug.
  check("derived_brackets_idempotent", [&](BisetCheck& c) {
    for (int x = 0; x < m; ++x)
      if (!S.is_idempotent(B.bra_at(x, x)) ||
          !T.is_idempotent(B.ket_at(x, x))) {
        c = {c.name, false, "x=" + std::to_string(x)};
        break;
      }
  });
  check("derived_bra_product", [&](BisetCheck& c) {
    // <x,y><z,w> = <x[y,z], w>
    for (int x = 0; x < m && c.pass; ++x)
      for (int y = 0; y < m && c.pass; ++y)
        for (int z = 0; z < m && c.pass; ++z)
          for (int w = 0; w < m; ++w)
            if (S.product(B.bra_at(x, y), B.bra_at(z, w)) !=
                B.bra_at(B.act_r(x, B.ket_at(y, z)), w)) {
              c = {c.name, false,
                   xyz(x, y, z) + " w=" + std::to_string(w)};
              break;
            }
  });
  check("derived_ket_product", [&](BisetCheck& c) {
    // [x,y][z,w] = [x, <y,z>w]
    for (int x = 0; x < m && c.pass; ++x)
      for (int y = 0; y < m && c.pass; ++y)
        for (int z = 0; z < m && c.pass; ++z)
          for (int w = 0; w < m; ++w)
            if (T.product(B.ket_at(x, y), B.ket_at(z, w)) !=
                B.ket_at(x, B.act_l(B.bra_at(y, z), w))) {
              c = {c.name, false,
                   xyz(x, y, z) + " w=" + std::to_string(w)};
              break;
            }
  });
  check("derived_bra_right_shift", [&](BisetCheck& c) {
    // <xt, y> = <x, y t^-1>
    for (int x = 0; x < m && c.pass; ++x)
      for (int y = 0; y < m && c.pass; ++y)
        for (int t = 0; t < T.order(); ++t)
          if (B.bra_at(B.act_r(x, t), y) !=
              B.bra_at(x, B.act_r(y, inv_t[t]))) {
            c = {c.name, false, "x=" + std::to_string(x) +
                                    " y=" + std::to_string(y) +
                                    " t=" + std::to_string(t)};
            break;
          }
  });
  check("derived_ket_left_shift", [&](BisetCheck& c) {
    // [sx, y] = [x, s^-1 y]
    for (int s = 0; s < S.order() && c.pass; ++s)
      for (int x = 0; x < m && c.pass; ++x)
        for (int y = 0; y < m; ++y)
          if (B.ket_at(B.act_l(s, x), y) !=
              B.ket_at(x, B.act_l(inv_s[s], y))) {
            c = {c.name, false, "s=" + std::to_string(s) +
                                    " x=" + std::to_string(x) +
                                    " y=" + std::to_string(y)};
            break;
          }
  });
  check("derived_absorption", [&](BisetCheck& c) {
    // <x,x>x = x[x,x] = x, the consequence of M6 and M7.
    for (int x = 0; x < m; ++x)
      if (B.act_l(B.bra_at(x, x), x) != B.act_r(x, B.ket_at(x, x))) {
        c = {c.name, false, "x=" + std::to_string(x)};
        break;
      }
  });

  if (r.axioms_pass() && !r.all_pass()) {
    r.internal_inconsistency = true;
  }
  return r;
}

namespace {

void require_valid(const EquivalenceBiset& B) {
  const BisetReport r = validate_biset(B);
  if (!r.all_pass()) {
    const BisetCheck* f = r.first_failure();
    throw DomainError(Errc::biset_invalid,
                      "biset fails " + f->name,
                      {{"check", f->name}, {"witness", f->witness}});
  }
}

SandwichFunction sandwich_unchecked(const EquivalenceBiset& B) {
  return SandwichFunction::create(B.left, B.carrier_size, B.bra);
}

}  // namespace

IdempotentTransport epsilon_eta(const EquivalenceBiset& B, int x) {
  require_valid(B);
  const FiniteSemigroup& S = B.left;
  const FiniteSemigroup& T = B.right;
  IdempotentTransport out;
  for (int e : S.idempotents()) {
    const int ex = B.act_l(e, x);
    const int eps = B.ket_at(ex, ex);
    if (!T.is_idempotent(eps) || B.act_r(x, eps) != ex) {
      throw DomainError(Errc::internal_inconsistency,
                        "epsilon transport fails ex = x eps(e)",
                        {{"e", std::to_string(e)},
                         {"x", std::to_string(x)}});
    }
    out.epsilon[e] = eps;
  }
  for (int f : T.idempotents()) {
    const int xf = B.act_r(x, f);
    const int eta = B.bra_at(xf, xf);
    if (!S.is_idempotent(eta) || B.act_l(eta, x) != xf) {
      throw DomainError(Errc::internal_inconsistency,
                        "eta transport fails xf = eta(f) x",
                        {{"f", std::to_string(f)},
                         {"x", std::to_string(x)}});
    }
    out.eta[f] = eta;
  }
  // Both transports are homomorphisms on the idempotents.
  for (const auto& [e, ee] : out.epsilon) {
    for (const auto& [f, ff] : out.epsilon) {
      if (out.epsilon.at(S.product(e, f)) != T.product(ee, ff)) {
        throw DomainError(Errc::internal_inconsistency,
                          "epsilon transport is not multiplicative");
      }
    }
  }
  for (const auto& [e, ee] : out.eta) {
    for (const auto& [f, ff] : out.eta) {
      if (out.eta.at(T.product(e, f)) != S.product(ee, ff)) {
        throw DomainError(Errc::internal_inconsistency,
                          "eta transport is not multiplicative");
      }
    }
  }
  return out;
}

SandwichFunction mcalister_from_biset(const EquivalenceBiset& B) {
  require_valid(B);
  SandwichFunction p = sandwich_unchecked(B);
  const McAlisterReport rep = validate_mcalister(p);
  if (!rep.all()) {
    throw DomainError(Errc::internal_inconsistency,
                      "bracket sandwich violates " + rep.failing() +
                          " on a valid biset");
  }
  return p;
}

namespace {

BisetTheta theta_unchecked(const EquivalenceBiset& B) {
  SandwichFunction p = sandwich_unchecked(B);
  {
    const McAlisterReport rep = validate_mcalister(p);
    if (!rep.all()) {
      throw DomainError(Errc::internal_inconsistency,
                        "bracket sandwich violates " + rep.failing() +
                            " on a valid biset");
    }
  }
  ReesMatrixSemigroup rm = build_rees(p, ReesMode::regular);
  const FiniteSemigroup& T = B.right;

  std::vector<int> images(rm.size());
  for (int a = 0; a < rm.size(); ++a) {
    const ReesTriple& t = rm.triple(a);
    images[a] = B.ket_at(t.row, B.act_l(t.mid, t.col));
  }
  SemigroupMap theta{rm.semigroup(), T, images};

  if (auto w = homomorphism_witness(theta)) {
    throw DomainError(Errc::internal_inconsistency,
                      "theta is not a homomorphism",
                      {{"a", std::to_string(w->first)},
                       {"b", std::to_string(w->second)}});
  }

  // Constructive surjectivity: (x, <x,x><y,y>, y) |-> [x,y].
  const FiniteSemigroup& S = B.left;
  for (int x = 0; x < B.carrier_size; ++x) {
    for (int y = 0; y < B.carrier_size; ++y) {
      const ReesTriple w{x, S.product(B.bra_at(x, x), B.bra_at(y, y)), y};
      const int id = rm.index_of(w);
      if (id < 0 || images[id] != B.ket_at(x, y)) {
        throw DomainError(Errc::internal_inconsistency,
                          "constructive surjectivity witness failed",
                          {{"x", std::to_string(x)},
                           {"y", std::to_string(y)}});
      }
    }
  }

  Congruence gamma = gamma_closed_form(rm);
  std::vector<int> raw(rm.size());
  for (int a = 0; a < rm.size(); ++a) {
    raw[a] = images[a];
  }
  if (!(Partition::from_class_of(raw) == gamma.partition)) {
    throw DomainError(Errc::kernel_mismatch,
                      "kernel of theta differs from the closed-form gamma");
  }
  return BisetTheta{std::move(rm), std::move(theta), std::move(gamma)};
}

}  // namespace

BisetTheta theta_from_biset(const EquivalenceBiset& B) {
  require_valid(B);
  return theta_unchecked(B);
}

PartnerResult synthesize_partner(const EquivalenceBiset& B) {
  require_valid(B);
  BisetTheta bt = theta_unchecked(B);

  // gamma equals the minimum inverse congruence; both the closed form and
  // the kernel agree with it or something upstream is wrong.
  Congruence gamma = min_inverse_congruence(bt.rm.semigroup());
  if (!(gamma.partition == bt.kernel.partition)) {
    throw DomainError(Errc::kernel_mismatch,
                      "closed-form gamma differs from the minimum inverse "
                      "congruence");
  }

  Quotient q = quotient(bt.rm.semigroup(), gamma);

  // Induced map IM -> T: the image is constant on classes by the kernel
  // equality; verify directly anyway.
  std::vector<int> images(q.semigroup.order(), -1);
  for (int a = 0; a < bt.rm.size(); ++a) {
    const int cls = gamma.partition.class_of[a];
    if (images[cls] < 0) {
      images[cls] = bt.theta.images[a];
    } else if (images[cls] != bt.theta.images[a]) {
      throw DomainError(Errc::kernel_mismatch,
                        "theta is not constant on a gamma class");
    }
  }
  SemigroupMap iso{q.semigroup, B.right, images};
  if (!is_isomorphism(iso) || !is_surjective(iso)) {
    throw DomainError(Errc::internal_inconsistency,
                      "induced map IM -> T is not an isomorphism");
  }
  return PartnerResult{std::move(bt.rm), std::move(q.semigroup),
                       std::move(q.projection), std::move(iso)};
}

}  // namespace morita
