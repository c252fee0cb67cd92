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

#include <doctest.h>

#include "fixtures.hpp"
#include "morita/biset.hpp"
#include "morita/category.hpp"

using namespace morita;

namespace {

const BisetCheck* find_check(const BisetReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("identity bisets validate all-green on the corpus") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto rep = validate_biset(identity_biset(S));
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.internal_inconsistency);
  }
}

TEST_CASE("bisets over non-inverse bases are rejected") {
  auto S = fixtures::right_zero_2();
  EquivalenceBiset B{S, S, 2,
                     {0, 1, 0, 1}, {0, 1, 0, 1},
                     {0, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_THROWS_AS(validate_biset(B), DomainError);
}

TEST_CASE("out-of-range grids are flagged as partial mappings") {
  auto B = identity_biset(fixtures::z2());
  B.bra[0] = 9;
  try {
    validate_biset(B);
    FAIL("expected PARTIAL_MAPPING");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::partial_mapping);
  }
}

TEST_CASE("corrupting ket to the bra formula is invisible on Z2") {
  // In an abelian group, x^-1 y = x y^-1, so the corruption coincides with
  // the real pairing.
  auto B = identity_biset(fixtures::z2());
  B.ket = B.bra;
  CHECK(validate_biset(B).all_pass());
}

TEST_CASE("corrupting ket to the bra formula fails on B2") {
  auto B = identity_biset(fixtures::b2());
  B.ket = B.bra;
  auto rep = validate_biset(B);
  CHECK_FALSE(rep.all_pass());

  // M4 is the first axiom the canonical order catches...
  const BisetCheck* first = rep.first_failure();
  REQUIRE(first != nullptr);
  CHECK(first->name == "M4");
  // ...and the bra/ket coupling axiom M7 fails too, with its own witness.
  const BisetCheck* m7 = find_check(rep, "M7");
  REQUIRE(m7 != nullptr);
  CHECK_FALSE(m7->pass);
  CHECK_FALSE(m7->witness.empty());
}

TEST_CASE("bracket absorption holds pointwise on identity bisets") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto B = identity_biset(S);
    for (int x = 0; x < B.carrier_size; ++x) {
      const int bx = B.act_l(B.bra_at(x, x), x);
      const int kx = B.act_r(x, B.ket_at(x, x));
      CHECK(bx == x);
      CHECK(kx == x);
    }
  }
}

TEST_CASE("epsilon and eta transport idempotents correctly") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto B = identity_biset(S);
    const auto inv = unique_inverses(S);
    for (int x = 0; x < S.order(); ++x) {
      auto tr = epsilon_eta(B, x);
      for (int e : S.idempotents()) {
        // On the identity biset, eps_x(e) = x^-1 e x.
        CHECK(tr.epsilon.at(e) == S.product3(inv[x], e, x));
      }
    }
  }
}

TEST_CASE("epsilon at an idempotent point multiplies idempotents") {
  auto S = fixtures::e2();
  auto B = identity_biset(S);
  for (int e : S.idempotents()) {
    auto tr = epsilon_eta(B, e);
    for (int f : S.idempotents()) {
      CHECK(tr.epsilon.at(f) == S.product(e, f));
    }
  }
}

TEST_CASE("epsilon on a group sends the identity to the identity") {
  auto S = fixtures::z3();
  auto B = identity_biset(S);
  for (int x = 0; x < S.order(); ++x) {
    auto tr = epsilon_eta(B, x);
    CHECK(tr.epsilon.at(0) == 0);
  }
}

TEST_CASE("epsilon transport is monotone for the natural order") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto B = identity_biset(S);
    auto leq = natural_order(S);
    for (int x = 0; x < S.order(); ++x) {
      auto tr = epsilon_eta(B, x);
      for (int e : S.idempotents()) {
        for (int f : S.idempotents()) {
          if (leq.at(e, f)) {
            CHECK(leq.at(tr.epsilon.at(e), tr.epsilon.at(f)));
          }
        }
      }
    }
  }
}

TEST_CASE("the bracket sandwich of an identity biset is McAlister") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto p = mcalister_from_biset(identity_biset(S));
    CHECK(p.index_size() == S.order());
    CHECK(validate_mcalister(p).all());
  }
  // On E2 the pairing degenerates to multiplication.
  auto p = mcalister_from_biset(identity_biset(fixtures::e2()));
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(p.at(x, y) == fixtures::e2().product(x, y));
    }
  }
}

TEST_CASE("theta realizes (x,s,y) |-> x^-1 s y with kernel gamma") {
  for (auto S : {fixtures::e2(), fixtures::z2(), fixtures::b2()}) {
    auto B = identity_biset(S);
    auto bt = theta_from_biset(B);
    const auto inv = unique_inverses(S);
    for (int a = 0; a < bt.rm.size(); ++a) {
      const ReesTriple& t = bt.rm.triple(a);
      CHECK(bt.theta.images[a] ==
            S.product3(inv[t.row], t.mid, t.col));
    }
    CHECK(is_homomorphism(bt.theta));
    CHECK(is_surjective(bt.theta));
    CHECK(bt.kernel.partition ==
          gamma_closed_form(bt.rm).partition);
  }
}

TEST_CASE("synthesize_partner reproduces the base up to isomorphism") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto partner = synthesize_partner(identity_biset(S));
    CHECK(is_isomorphism(partner.iso));
    CHECK(partner.im.order() == S.order());
    CHECK(find_isomorphism(partner.im, S).has_value());
    auto verdict =
        decide_equivalence(cauchy_completion(S), cauchy_completion(partner.im));
    CHECK(verdict.equivalent);
  }
}

TEST_CASE("synthesize_partner on the trivial semigroup") {
  auto partner = synthesize_partner(identity_biset(fixtures::trivial()));
  CHECK(partner.im.order() == 1);
}
