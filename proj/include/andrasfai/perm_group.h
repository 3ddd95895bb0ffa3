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

#ifndef ANDRASFAI_PERM_GROUP_H_
#define ANDRASFAI_PERM_GROUP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "andrasfai/permutation.h"
#include "json.hpp"

namespace andrasfai {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

// Finite permutation group held as its full element list, sorted
// lexicographically by image sequence, together with the generators it was
// produced from. Every constructor checks the group axioms.
class PermGroup {
 public:
  // Closure of `generators` under composition. Throws GroupTooLargeError if
  // more than `cap` elements appear.
  static PermGroup generate(int degree, std::span<const Permutation> generators,
                            std::size_t cap = kDefaultElementCap);

  // Wraps an explicit element set. Throws DomainError if the set is not a
  // group (identity missing, not closed). Generators are picked greedily in
  // lexicographic order.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements,
                                 std::size_t cap = kDefaultElementCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;

  // Element-set equality; generators are ignored.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup(int degree, std::vector<Permutation> elements,
            std::vector<Permutation> generators)
      : degree_(degree),
        elements_(std::move(elements)),
        generators_(std::move(generators)) {}

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

inline PermGroup generate(int degree, std::span<const Permutation> generators,
                          std::size_t cap = kDefaultElementCap) {
  return PermGroup::generate(degree, generators, cap);
}

// {x -> +-x + c}, 2n elements. Throws DomainError for n <= 2, where the two
// signs give the same map.
PermGroup affine_group(int n);

// {x -> x + c}, cyclic of order n.
PermGroup translations(int n);

// Sorted orbit of v.
std::vector<Vertex> orbit(const PermGroup& g, Vertex v);
PermGroup stabilizer(const PermGroup& g, Vertex v);

bool is_subgroup(const PermGroup& h, const PermGroup& g);

// Throws DomainError if h is not a subgroup of g.
bool is_normal(const PermGroup& h, const PermGroup& g);

// The set HQ when it is a subgroup (HQ = QH); DomainError otherwise.
PermGroup internal_product(const PermGroup& h, const PermGroup& q);

// g = h x| q: h normal in g, hq = g, h n q = 1. Throws DomainError if h or q
// is not a subgroup of g.
bool is_semidirect(const PermGroup& g, const PermGroup& h, const PermGroup& q);

struct DihedralWitness {
  Permutation rotation;
  Permutation reflection;
};

// For |g| = 2m, m >= 3: the lexicographically first pair (r, s) with
// ord(r) = m, ord(s) = 2, srs = r^-1 and <r, s> = g. Throws DomainError if
// |g| is odd or m < 3.
std::optional<DihedralWitness> is_dihedral(const PermGroup& g);

// {degree, order, generators, dihedral_witness?}; permutations in cycle
// notation.
nlohmann::ordered_json to_json(const PermGroup& g);

}  // namespace andrasfai

#endif  // ANDRASFAI_PERM_GROUP_H_
