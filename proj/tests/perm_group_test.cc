// Copyright 2026 The Andrasfai Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "andrasfai/perm_group.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "andrasfai/errors.h"
#include "andrasfai/permutation.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace andrasfai {
namespace {

Permutation perm(std::vector<Vertex> images) { return Permutation(std::move(images)); }

PermGroup symmetric_group(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Vertex> swap(n), cycle(n);
    for (int i = 0; i < n; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    gens.emplace_back(swap);
    gens.emplace_back(cycle);
  }
  return generate(n, gens);
}

// Checks closure on every pair and inverses directly.
void expect_group_axioms(const PermGroup& g) {
  std::set<Permutation> elems(g.elements().begin(), g.elements().end());
  ASSERT_EQ(elems.size(), g.order());
  ASSERT_TRUE(elems.count(identity(g.degree())));
  for (const auto& a : g.elements()) {
    ASSERT_TRUE(elems.count(inverse(a)));
    for (const auto& b : g.elements()) ASSERT_TRUE(elems.count(compose(a, b)));
  }
  for (const auto& s : g.generators()) ASSERT_TRUE(elems.count(s));
  ASSERT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
}

void expect_orbit_stabilizer(const PermGroup& g) {
  for (Vertex v = 0; v < g.degree(); ++v) {
    ASSERT_EQ(g.order(), orbit(g, v).size() * stabilizer(g, v).order()) << v;
  }
}

TEST(PermutationTest, Basics) {
  EXPECT_THROW(perm({0, 0, 1}), DomainError);
  EXPECT_THROW(perm({0, 3, 1}), DomainError);
  Permutation p = perm({1, 2, 0, 4, 3});
  EXPECT_EQ(compose(p, inverse(p)), identity(5));
  EXPECT_EQ(compose(perm({1, 0, 2}), perm({0, 2, 1})), perm({1, 2, 0}));
  EXPECT_THROW(compose(p, identity(4)), DomainError);
  EXPECT_EQ(order_of(p), 6u);
  EXPECT_EQ(order_of(translation(5, 1)), 5u);
  EXPECT_EQ(order_of(negation(11)), 2u);
  EXPECT_EQ(order_of(identity(3)), 1u);
  EXPECT_EQ(p.to_image_string(), "1 2 0 4 3");
  EXPECT_EQ(p.to_cycle_string(), "(0 1 2)(3 4)");
  EXPECT_EQ(identity(4).to_cycle_string(), "()");
  EXPECT_EQ(negation(5).to_cycle_string(), "(1 4)(2 3)");
}

TEST(AffineMapTest, CompositionLaw) {
  for (int n = 3; n <= 20; ++n) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        for (int c1 = 0; c1 < n; ++c1) {
          for (int c2 = 0; c2 < n; ++c2) {
            AffineMap a{n, s1, c1}, b{n, s2, c2};
            AffineMap ab = compose(a, b);
            ASSERT_EQ(ab.sign, s1 * s2);
            ASSERT_EQ(ab.shift, ((s1 * c2 + c1) % n + n) % n);
            ASSERT_EQ(ab.to_permutation(), compose(a.to_permutation(), b.to_permutation()));
            ASSERT_EQ(as_affine(ab.to_permutation()), ab);
          }
        }
      }
    }
  }
  EXPECT_EQ((AffineMap{7, 1, 0}).to_permutation(), identity(7));
  EXPECT_FALSE(as_affine(perm({1, 0, 2, 3})).has_value());
}

TEST(GenerateTest, Examples) {
  std::vector<Permutation> rot = {translation(5, 1)};
  EXPECT_EQ(generate(5, rot).order(), 5u);
  std::vector<Permutation> dih = {translation(11, 1), negation(11)};
  EXPECT_EQ(generate(11, dih).order(), 22u);
  PermGroup trivial = generate(6, {});
  EXPECT_EQ(trivial.order(), 1u);
  EXPECT_TRUE(trivial.elements()[0].is_identity());
  EXPECT_EQ(symmetric_group(5).order(), 120u);
}

TEST(GenerateTest, CapIsLoud) {
  std::vector<Permutation> gens = symmetric_group(6).generators();
  EXPECT_THROW(generate(6, gens, 100), GroupTooLargeError);
  EXPECT_EQ(generate(6, gens, 720).order(), 720u);
  try {
    generate(6, gens, 10);
  } catch (const GroupTooLargeError& e) {
    EXPECT_EQ(e.cap(), 10u);
  }
}

TEST(GenerateTest, Idempotent) {
  for (const PermGroup& g : {affine_group(9), symmetric_group(4), translations(7)}) {
    EXPECT_EQ(generate(g.degree(), g.elements()), g);
    EXPECT_EQ(PermGroup::from_elements(g.degree(), g.elements()), g);
  }
}

TEST(FromElementsTest, RejectsNonGroups) {
  std::vector<Permutation> no_id = {translation(5, 1)};
  EXPECT_THROW(PermGroup::from_elements(5, no_id), DomainError);
  std::vector<Permutation> open = {identity(5), translation(5, 1)};
  EXPECT_THROW(PermGroup::from_elements(5, open), DomainError);
}

TEST(AffineGroupTest, Examples) {
  EXPECT_EQ(affine_group(5).order(), 10u);
  EXPECT_EQ(affine_group(11).order(), 22u);
  EXPECT_THROW(affine_group(2), DomainError);
  EXPECT_THROW(affine_group(1), DomainError);
  for (int n = 3; n <= 40; ++n) {
    PermGroup a = affine_group(n);
    ASSERT_EQ(a.order(), static_cast<std::size_t>(2 * n));
    for (const auto& p : a.elements()) ASSERT_TRUE(as_affine(p).has_value());
  }
}

TEST(AffineGroupTest, TranslationsAndStabilizer) {
  EXPECT_EQ(translations(11).order(), 11u);
  EXPECT_EQ(translations(1).order(), 1u);
  EXPECT_EQ(negation(5), perm({0, 4, 3, 2, 1}));
  PermGroup a = affine_group(11);
  EXPECT_EQ(orbit(a, 0).size(), 11u);
  PermGroup a0 = stabilizer(a, 0);
  EXPECT_EQ(a0.order(), 2u);
  EXPECT_TRUE(a0.contains(negation(11)));
  for (const auto& t : translations(11).elements()) {
    if (a0.contains(t)) EXPECT_TRUE(t.is_identity());
  }
}

TEST(StructureTest, NormalAndSemidirect) {
  for (int n = 3; n <= 15; ++n) {
    PermGroup a = affine_group(n);
    PermGroup s = translations(n);
    std::vector<Permutation> neg = {negation(n)};
    PermGroup q = generate(n, neg);
    EXPECT_TRUE(is_normal(s, a));
    EXPECT_TRUE(is_semidirect(a, s, q));
    EXPECT_EQ(internal_product(s, q), a);
    EXPECT_TRUE(is_normal(s, s));
  }
  PermGroup a = affine_group(7);
  EXPECT_TRUE(is_semidirect(a, a, generate(7, {})));
  // The reflection subgroup is not normal once n >= 3.
  std::vector<Permutation> neg = {negation(7)};
  PermGroup q = generate(7, neg);
  EXPECT_FALSE(is_normal(q, a));
  EXPECT_FALSE(is_semidirect(a, q, translations(7)));
  EXPECT_THROW(is_normal(affine_group(7), translations(7)), DomainError);
  EXPECT_THROW(is_semidirect(translations(7), a, q), DomainError);
}

TEST(DihedralTest, Examples) {
  auto w = is_dihedral(affine_group(11));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rotation, translation(11, 1));
  EXPECT_EQ(w->reflection, negation(11));

  std::vector<Permutation> c6 = {translation(6, 1)};
  EXPECT_FALSE(is_dihedral(generate(6, c6)).has_value());

  PermGroup s3 = symmetric_group(3);
  auto ws = is_dihedral(s3);
  ASSERT_TRUE(ws.has_value());

  EXPECT_THROW(is_dihedral(translations(5)), DomainError);
  std::vector<Permutation> klein = {perm({1, 0, 3, 2}), perm({2, 3, 0, 1})};
  EXPECT_THROW(is_dihedral(generate(4, klein)), DomainError);
}

TEST(DihedralTest, WitnessConditionsHold) {
  std::vector<PermGroup> groups = {symmetric_group(3)};
  for (int n = 3; n <= 30; ++n) groups.push_back(affine_group(n));
  for (const auto& g : groups) {
    auto w = is_dihedral(g);
    ASSERT_TRUE(w.has_value());
    const std::uint64_t m = g.order() / 2;
    EXPECT_EQ(order_of(w->rotation), m);
    EXPECT_EQ(order_of(w->reflection), 2u);
    EXPECT_EQ(compose(w->reflection, compose(w->rotation, w->reflection)), inverse(w->rotation));
    std::vector<Permutation> gens = {w->rotation, w->reflection};
    EXPECT_EQ(generate(g.degree(), gens), g);
  }
  // Sym(4) has order 24 but is not dihedral.
  EXPECT_FALSE(is_dihedral(symmetric_group(4)).has_value());
}

TEST(InvariantsTest, AxiomsAndOrbitStabilizer) {
  std::mt19937 rng(3);
  std::vector<PermGroup> corpus = {symmetric_group(4), symmetric_group(5), translations(9),
                                   generate(6, {})};
  for (int n = 3; n <= 16; ++n) corpus.push_back(affine_group(n));
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<Permutation> gens = {testing_util::random_permutation(n, rng)};
    if (trial % 2 == 0) gens.push_back(testing_util::random_permutation(n, rng));
    corpus.push_back(generate(n, gens));
  }
  for (const auto& g : corpus) {
    expect_group_axioms(g);
    expect_orbit_stabilizer(g);
    for (Vertex v = 0; v < g.degree(); ++v) {
      PermGroup st = stabilizer(g, v);
      ASSERT_TRUE(is_subgroup(st, g));
      for (const auto& p : st.elements()) ASSERT_EQ(p(v), v);
    }
  }
}

TEST(JsonTest, Shape) {
  auto j = to_json(affine_group(5));
  EXPECT_EQ(j["degree"], 5);
  EXPECT_EQ(j["order"], 10);
  EXPECT_TRUE(j.contains("generators"));
  ASSERT_TRUE(j.contains("dihedral_witness"));
  EXPECT_EQ(j.dump(), to_json(affine_group(5)).dump());
  EXPECT_FALSE(to_json(symmetric_group(4)).contains("dihedral_witness"));
  EXPECT_FALSE(to_json(translations(3)).contains("dihedral_witness"));
}

}  // namespace
}  // namespace andrasfai
