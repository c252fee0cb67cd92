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
#include "morita/category.hpp"

using namespace morita;

namespace {

FiniteCategory c_of(const FiniteSemigroup& S) {
  return cauchy_completion(S);
}

SandwichFunction e2_diag() {
  return SandwichFunction::create(fixtures::e2(), 2, {1, 0, 0, 1});
}

}  // namespace

TEST_CASE("Cauchy completion of a group has one object") {
  auto C = c_of(fixtures::z2());
  CHECK(C.num_objects() == 1);
  CHECK(C.num_morphisms() == 2);
}

TEST_CASE("Cauchy completion of the trivial semigroup is terminal") {
  auto C = c_of(fixtures::trivial());
  CHECK(C.num_objects() == 1);
  CHECK(C.num_morphisms() == 1);
}

TEST_CASE("Cauchy completion of E2 has the expected hom sizes") {
  auto C = c_of(fixtures::e2());
  CHECK(C.num_objects() == 2);
  CHECK(C.num_morphisms() == 5);
  CHECK(C.hom(0, 0).size() == 1);
  CHECK(C.hom(0, 1).size() == 1);
  CHECK(C.hom(1, 0).size() == 1);
  CHECK(C.hom(1, 1).size() == 2);
}

TEST_CASE("Cauchy completion needs local units") {
  CHECK_THROWS_AS(cauchy_completion(fixtures::null_2()), DomainError);
}

TEST_CASE("completions validate as categories") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto check = validate_category(c_of(S));
    CHECK(check.ok);
    CHECK(check.associativity_exhaustive);
  }
}

TEST_CASE("identity functor passes every check") {
  auto F = functor_theta(identity_map(fixtures::b2()));
  auto checks = functor_checks(F);
  CHECK(checks.functorial);
  CHECK(checks.weak_equivalence());
}

TEST_CASE("collapse onto the trivial semigroup is full but not faithful") {
  SemigroupMap collapse{fixtures::e2(), fixtures::trivial(), {0, 0}};
  auto F = functor_theta(collapse);
  auto checks = functor_checks(F);
  CHECK(checks.functorial);
  CHECK(checks.full);
  CHECK_FALSE(checks.faithful);
  CHECK(checks.essentially_surjective);
}

TEST_CASE("a non-surjective semilattice embedding is not essentially "
          "surjective") {
  SemigroupMap embed{fixtures::e2(), fixtures::e3(), {0, 1}};
  REQUIRE(is_homomorphism(embed));
  auto checks = functor_checks(functor_theta(embed));
  CHECK(checks.functorial);
  CHECK(checks.full);
  CHECK(checks.faithful);
  CHECK_FALSE(checks.essentially_surjective);
}

TEST_CASE("theta of the RM -> IM projection is a weak equivalence") {
  auto im = build_im(e2_diag());
  auto F = functor_theta(im.projection);
  auto checks = functor_checks(F);
  CHECK(checks.functorial);
  CHECK(checks.full);
  CHECK(checks.faithful);
  CHECK(checks.essentially_surjective);
}

TEST_CASE("psi is a weak equivalence on the E2 and Z2 instances") {
  {
    auto rm = build_rees(e2_diag(), ReesMode::regular);
    auto checks = functor_checks(functor_psi(rm));
    CHECK(checks.functorial);
    CHECK(checks.weak_equivalence());
  }
  {
    auto p = SandwichFunction::create(fixtures::z2(), 2, {0, 0, 0, 0});
    auto rm = build_rees(p, ReesMode::regular);
    auto checks = functor_checks(functor_psi(rm));
    CHECK(checks.weak_equivalence());
  }
}

TEST_CASE("psi sends identity triples over dominated idempotents to "
          "(e,e,e)") {
  auto rm = build_rees(e2_diag(), ReesMode::regular);
  auto F = functor_psi(rm);
  const auto& p = rm.sandwich();
  const auto& S = rm.base();
  for (int o = 0; o < F.source.num_objects(); ++o) {
    const ReesTriple t = rm.triple(F.source.object_payload(o));
    if (t.row != t.col || !S.is_idempotent(t.mid)) continue;
    if (!p.leq(t.mid, p.at(t.row, t.row))) continue;
    const int image_obj = F.object_map[o];
    CHECK(F.target.object_payload(image_obj) == t.mid);
    CHECK(F.morphism_map[F.source.identity(o)] ==
          F.target.identity(image_obj));
  }
}

TEST_CASE("psi rejects sandwiches violating MF5") {
  auto p = SandwichFunction::create(fixtures::e2(), 1, {0});
  auto rm = build_rees(p, ReesMode::regular);  // MF1..MF4 hold
  CHECK_THROWS_AS(functor_psi(rm), DomainError);
}

TEST_CASE("skeleton of a skeletal category is itself") {
  auto C = c_of(fixtures::e2());
  auto sk = skeleton(C);
  CHECK(sk.skeleton.num_objects() == 2);
  CHECK(sk.skeleton.num_morphisms() == 5);
}

TEST_CASE("skeleton of C(B2) identifies the two nonzero idempotents") {
  auto C = c_of(fixtures::b2());
  CHECK(C.num_objects() == 3);
  CHECK(C.num_morphisms() == 13);
  auto sk = skeleton(C);
  CHECK(sk.skeleton.num_objects() == 2);
  CHECK(sk.skeleton.num_morphisms() == 5);
  // Retraction data really is an isomorphism pair.
  for (int o = 0; o < C.num_objects(); ++o) {
    const auto [to_obj, from_obj] = sk.retraction[o];
    const int rep = sk.representative[sk.object_class[o]];
    CHECK(C.morphism(to_obj).src == rep);
    CHECK(C.morphism(to_obj).dst == o);
    CHECK(*C.compose(to_obj, from_obj) == C.identity(rep));
    CHECK(*C.compose(from_obj, to_obj) == C.identity(o));
  }
}

TEST_CASE("skeleton collapses a chaotic pair of isomorphic objects") {
  // Two objects, every hom-set a singleton; equivalent to the point.
  auto Z2 = fixtures::z2();
  std::vector<CatMorphism> morphisms{
      {0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
  auto C = FiniteCategory::build(Z2, {0, 0}, {"A", "B"}, morphisms);
  REQUIRE(validate_category(C).ok);
  auto sk = skeleton(C);
  CHECK(sk.skeleton.num_objects() == 1);
  CHECK(sk.skeleton.num_morphisms() == 1);
  auto verdict = decide_equivalence(C, c_of(fixtures::trivial()));
  CHECK(verdict.equivalent);
}

TEST_CASE("decide_equivalence is reflexive on the corpus") {
  for (const auto& [name, S] : fixtures::corpus()) {
    CAPTURE(name);
    auto verdict = decide_equivalence(c_of(S), c_of(S));
    CHECK(verdict.equivalent);
    REQUIRE(verdict.witness.has_value());
    auto checks = functor_checks(*verdict.witness);
    CHECK(checks.functorial);
    CHECK(checks.weak_equivalence());
  }
}

TEST_CASE("decide_equivalence separates obvious non-equivalences") {
  auto no1 = decide_equivalence(c_of(fixtures::z2()),
                                c_of(fixtures::trivial()));
  CHECK_FALSE(no1.equivalent);
  CHECK(no1.obstruction.has_value());

  CHECK_FALSE(
      decide_equivalence(c_of(fixtures::e2()), c_of(fixtures::z2()))
          .equivalent);
  CHECK_FALSE(
      decide_equivalence(c_of(fixtures::z2()), c_of(fixtures::z3()))
          .equivalent);
}

TEST_CASE("equivalence decisions respect composition, not just hom sizes") {
  // One object, two endomorphisms in both categories; multiplication is
  // Z2 in one and the two-chain semilattice in the other.
  auto group_like = c_of(fixtures::z2());
  auto band_like = FiniteCategory::build(
      fixtures::e2(), {1}, {"e1"},
      {CatMorphism{0, 0, 0}, CatMorphism{0, 1, 0}});
  REQUIRE(validate_category(band_like).ok);
  REQUIRE(band_like.num_morphisms() == group_like.num_morphisms());
  auto verdict = decide_equivalence(group_like, band_like);
  CHECK_FALSE(verdict.equivalent);
  CHECK(verdict.obstruction == "no skeleton isomorphism exists");
}

TEST_CASE("pairwise equivalence verdicts form an equivalence relation") {
  std::vector<FiniteCategory> cats;
  for (const auto& [name, S] : fixtures::corpus()) {
    cats.push_back(c_of(S));
  }
  // A couple of derived semigroups to make the relation nontrivial.
  cats.push_back(c_of(build_im(e2_diag()).im));  // equivalent to C(E2)
  cats.push_back(
      c_of(build_rees(e2_diag(), ReesMode::regular).semigroup()));
  const int n = static_cast<int>(cats.size());
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      eq[i][j] = decide_equivalence(cats[i], cats[j]).equivalent;
    }
  }
  int related_pairs = 0;
  for (int i = 0; i < n; ++i) {
    CHECK(eq[i][i]);
    for (int j = 0; j < n; ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      if (i != j && eq[i][j]) ++related_pairs;
      for (int k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
      }
    }
  }
  CHECK(related_pairs >= 2);  // E2 ~ B2 ~ IM at least
}

TEST_CASE("E2 is Morita equivalent to B2 but not isomorphic to it") {
  CHECK_FALSE(find_isomorphism(fixtures::e2(), fixtures::b2()).has_value());
  auto verdict = decide_equivalence(c_of(fixtures::e2()),
                                    c_of(fixtures::b2()));
  CHECK(verdict.equivalent);
}

TEST_CASE("the E2 diagonal instance closes the loop through IM") {
  auto im = build_im(e2_diag());
  auto verdict = decide_equivalence(c_of(im.im), c_of(fixtures::e2()));
  CHECK(verdict.equivalent);
}

TEST_CASE("category dump of C(E2) is bit-stable") {
  const std::string expected =
      "object 0 e0\n"
      "object 1 e1\n"
      "mor 0 0 0 (e0,e0,e0)\n"
      "mor 1 0 1 (e0,e0,e1)\n"
      "mor 2 1 0 (e1,e0,e0)\n"
      "mor 3 1 1 (e1,e0,e1)\n"
      "mor 4 1 1 (e1,e1,e1)\n"
      "comp 0 0 0\n"
      "comp 0 1 1\n"
      "comp 1 2 0\n"
      "comp 1 3 1\n"
      "comp 1 4 1\n"
      "comp 2 0 2\n"
      "comp 2 1 3\n"
      "comp 3 2 2\n"
      "comp 3 3 3\n"
      "comp 3 4 3\n"
      "comp 4 2 2\n"
      "comp 4 3 3\n"
      "comp 4 4 4\n";
  CHECK(dump_category(c_of(fixtures::e2())) == expected);
}
