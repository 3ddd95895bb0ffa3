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
#include <deque>
#include <string>
#include <unordered_set>

#include "andrasfai/errors.h"

namespace andrasfai {

namespace {

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

void check_degree(int degree, const Permutation& p) {
  if (p.degree() != degree) {
    throw DomainError("permutation of degree " + std::to_string(p.degree()) +
                      " in a group of degree " + std::to_string(degree));
  }
}

// Breadth-first closure; `seed` must already contain the identity.
ElementSet close(int degree, std::span<const Permutation> generators,
                 std::size_t cap) {
  ElementSet seen;
  std::deque<const Permutation*> queue;
  auto [it, inserted] = seen.insert(Permutation::identity(degree));
  queue.push_back(&*it);
  while (!queue.empty()) {
    const Permutation& x = *queue.front();
    queue.pop_front();
    for (const Permutation& s : generators) {
      Permutation y = compose(s, x);
      if (seen.contains(y)) continue;
      if (seen.size() >= cap) throw GroupTooLargeError(cap);
      auto [pos, added] = seen.insert(std::move(y));
      queue.push_back(&*pos);
    }
  }
  return seen;
}

// Exponent of p in n! (Legendre).
std::size_t factorial_valuation(std::size_t n, std::size_t p) {
  std::size_t v = 0;
  for (std::size_t q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p) break;
  }
  return v;
}

bool divides_factorial(std::size_t order, std::size_t n) {
  std::size_t rest = order;
  for (std::size_t p = 2; p * p <= rest; ++p) {
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0 && factorial_valuation(n, p) < e) return false;
  }
  return rest == 1 || factorial_valuation(n, rest) >= 1;
}

std::vector<Permutation> sorted_unique(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PermGroup PermGroup::generate(int degree, std::span<const Permutation> generators,
                              std::size_t cap) {
  if (degree < 1) throw DomainError("group degree must be >= 1");
  for (const Permutation& s : generators) check_degree(degree, s);
  std::vector<Permutation> gens =
      sorted_unique(std::vector<Permutation>(generators.begin(), generators.end()));
  ElementSet closure = close(degree, gens, cap);
  std::vector<Permutation> elements(closure.begin(), closure.end());
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree, std::move(elements), std::move(gens));
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements,
                                   std::size_t cap) {
  if (degree < 1) throw DomainError("group degree must be >= 1");
  for (const Permutation& p : elements) check_degree(degree, p);
  elements = sorted_unique(std::move(elements));
  if (elements.size() > cap) throw GroupTooLargeError(cap);
  if (elements.empty() || !elements.front().is_identity()) {
    throw DomainError("element set does not contain the identity");
  }
  if (!divides_factorial(elements.size(), static_cast<std::size_t>(degree))) {
    throw DomainError("element count " + std::to_string(elements.size()) +
                      " does not divide " + std::to_string(degree) + "!");
  }
  // Greedy generating set: add each element not yet generated. The final
  // closure contains every element, so it equals the set iff the set is
  // closed under composition.
  std::vector<Permutation> gens;
  ElementSet span_so_far{Permutation::identity(degree)};
  for (const Permutation& e : elements) {
    if (span_so_far.contains(e)) continue;
    gens.push_back(e);
    span_so_far = close(degree, gens, std::max(cap, elements.size()) + 1);
    if (span_so_far.size() > elements.size()) {
      throw DomainError("element set is not closed under composition");
    }
  }
  if (span_so_far.size() != elements.size()) {
    throw DomainError("element set is not closed under composition");
  }
  for (const Permutation& e : elements) {
    if (!span_so_far.contains(e)) {
      throw DomainError("element set is not closed under composition");
    }
  }
  return PermGroup(degree, std::move(elements), std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ &&
         std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup affine_group(int n) {
  if (n <= 2) {
    throw DomainError("affine group of Z_" + std::to_string(n) +
                      ": x -> -x coincides with x -> x, so there are not 2n "
                      "distinct maps");
  }
  std::vector<Permutation> elements;
  elements.reserve(2 * static_cast<std::size_t>(n));
  for (int sign : {1, -1}) {
    for (int c = 0; c < n; ++c) elements.push_back(AffineMap{n, sign, c}.to_permutation());
  }
  const Permutation gens[] = {translation(n, 1), negation(n)};
  PermGroup closed = PermGroup::generate(n, gens);
  PermGroup listed = PermGroup::from_elements(n, std::move(elements));
  if (!(closed == listed)) {
    throw DomainError("affine maps do not close up");  // unreachable for n >= 3
  }
  return closed;
}

PermGroup translations(int n) {
  if (n < 1) throw DomainError("translations need n >= 1");
  const Permutation gens[] = {translation(n, 1)};
  return PermGroup::generate(n, gens);
}

std::vector<Vertex> orbit(const PermGroup& g, Vertex v) {
  if (v < 0 || v >= g.degree()) throw DomainError("orbit: vertex out of range");
  std::vector<bool> hit(static_cast<std::size_t>(g.degree()), false);
  for (const Permutation& p : g.elements()) hit[p(v)] = true;
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.degree(); ++u) {
    if (hit[u]) out.push_back(u);
  }
  return out;
}

PermGroup stabilizer(const PermGroup& g, Vertex v) {
  if (v < 0 || v >= g.degree()) throw DomainError("stabilizer: vertex out of range");
  std::vector<Permutation> fixing;
  for (const Permutation& p : g.elements()) {
    if (p(v) == v) fixing.push_back(p);
  }
  return PermGroup::from_elements(g.degree(), std::move(fixing),
                                  std::max(kDefaultElementCap, g.order()));
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  return std::includes(g.elements().begin(), g.elements().end(),
                       h.elements().begin(), h.elements().end());
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup(h, g)) throw DomainError("is_normal: h is not a subgroup of g");
  // Conjugation by a generating set of g maps h into h iff h is normal.
  for (const Permutation& x : g.generators()) {
    const Permutation x_inv = inverse(x);
    for (const Permutation& y : h.elements()) {
      if (!h.contains(compose(x, compose(y, x_inv)))) return false;
    }
  }
  return true;
}

namespace {

std::vector<Permutation> product_set(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> out;
  out.reserve(a.order() * b.order());
  for (const Permutation& x : a.elements()) {
    for (const Permutation& y : b.elements()) out.push_back(compose(x, y));
  }
  return sorted_unique(std::move(out));
}

}  // namespace

PermGroup internal_product(const PermGroup& h, const PermGroup& q) {
  if (h.degree() != q.degree()) throw DomainError("internal_product: degree mismatch");
  std::vector<Permutation> hq = product_set(h, q);
  if (hq != product_set(q, h)) {
    throw DomainError("internal_product: HQ != QH, so HQ is not a subgroup");
  }
  return PermGroup::from_elements(h.degree(), std::move(hq),
                                  std::max(kDefaultElementCap, h.order() * q.order()));
}

bool is_semidirect(const PermGroup& g, const PermGroup& h, const PermGroup& q) {
  if (!is_subgroup(h, g) || !is_subgroup(q, g)) {
    throw DomainError("is_semidirect: h and q must be subgroups of g");
  }
  if (!is_normal(h, g)) return false;
  if (product_set(h, q) != g.elements()) return false;
  std::vector<Permutation> meet;
  std::set_intersection(h.elements().begin(), h.elements().end(),
                        q.elements().begin(), q.elements().end(),
                        std::back_inserter(meet));
  return meet.size() == 1 && meet.front().is_identity();
}

std::optional<DihedralWitness> is_dihedral(const PermGroup& g) {
  if (g.order() % 2 != 0 || g.order() < 6) {
    throw DomainError("is_dihedral needs |g| = 2m with m >= 3, got |g| = " +
                      std::to_string(g.order()));
  }
  const std::uint64_t m = g.order() / 2;
  std::vector<const Permutation*> rotations, involutions;
  for (const Permutation& p : g.elements()) {
    const std::uint64_t ord = order_of(p);
    if (ord == m) rotations.push_back(&p);
    if (ord == 2) involutions.push_back(&p);
  }
  for (const Permutation* r : rotations) {
    const Permutation r_inv = inverse(*r);
    for (const Permutation* s : involutions) {
      if (compose(*s, compose(*r, *s)) != r_inv) continue;
      const Permutation gens[] = {*r, *s};
      if (PermGroup::generate(g.degree(), gens, g.order() + 1) == g) {
        return DihedralWitness{*r, *s};
      }
    }
  }
  return std::nullopt;
}

nlohmann::ordered_json to_json(const PermGroup& g) {
  nlohmann::ordered_json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  auto gens = nlohmann::ordered_json::array();
  for (const Permutation& p : g.generators()) gens.push_back(p.to_cycle_string());
  j["generators"] = std::move(gens);
  if (g.order() % 2 == 0 && g.order() >= 6) {
    if (auto w = is_dihedral(g)) {
      j["dihedral_witness"] = {{"rotation", w->rotation.to_cycle_string()},
                               {"reflection", w->reflection.to_cycle_string()}};
    }
  }
  return j;
}

}  // namespace andrasfai
