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

#ifndef ANDRASFAI_PERMUTATION_H_
#define ANDRASFAI_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "andrasfai/graph.h"

namespace andrasfai {

// Bijection on 0..n-1, stored as its image sequence.
class Permutation {
 public:
  // Throws DomainError unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> images() const { return images_; }

  bool is_identity() const;

  // "0 2 1 4 3"
  std::string to_image_string() const;
  // "(1 2)(3 4)"; fixed points omitted, identity is "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Vertex> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Vertex> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

Permutation identity(int n);

// compose(p, q)(i) = p(q(i)). Throws DomainError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Least m >= 1 with p^m = identity (lcm of cycle lengths).
std::uint64_t order_of(const Permutation& p);

// x -> sign*x + shift (mod n), sign in {+1,-1}.
struct AffineMap {
  int modulus;
  int sign;
  int shift;

  Vertex apply(Vertex x) const;
  Permutation to_permutation() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// (e1,c1) o (e2,c2) = (e1*e2, e1*c2 + c1).
AffineMap compose(const AffineMap& a, const AffineMap& b);

// Recovers the affine form of p if it has one. For n <= 2 the two signs
// coincide and +1 is reported.
std::optional<AffineMap> as_affine(const Permutation& p);

// x -> x + shift
Permutation translation(int n, int shift);
// x -> -x
Permutation negation(int n);

}  // namespace andrasfai

#endif  // ANDRASFAI_PERMUTATION_H_
