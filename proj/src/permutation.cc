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

#include "andrasfai/permutation.h"

#include <numeric>

#include "andrasfai/errors.h"

namespace andrasfai {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0) throw DomainError("permutation of degree 0");
  std::vector<bool> seen(n, false);
  for (Vertex v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
      throw DomainError("image sequence is not a bijection on 0.." +
                        std::to_string(n - 1));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation of degree < 1");
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Vertex>(i)) return false;
  }
  return true;
}

std::string Permutation::to_image_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == static_cast<Vertex>(start)) continue;
    out += '(';
    std::size_t v = start;
    bool first = true;
    while (!done[v]) {
      done[v] = true;
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
      v = static_cast<std::size_t>(images_[v]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::uint64_t h = 1469598103934665603ull;
  for (Vertex v : p.images()) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation identity(int n) { return Permutation::identity(n); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("compose: degree mismatch " + std::to_string(p.degree()) +
                      " vs " + std::to_string(q.degree()));
  }
  std::vector<Vertex> images(q.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Vertex> images(p.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[static_cast<std::size_t>(p.images_[i])] = static_cast<Vertex>(i);
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

std::uint64_t order_of(const Permutation& p) {
  const auto images = p.images();
  std::vector<bool> done(images.size(), false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t v = start; !done[v]; v = static_cast<std::size_t>(images[v])) {
      done[v] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

namespace {

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_affine(const AffineMap& a) {
  if (a.modulus < 1 || (a.sign != 1 && a.sign != -1)) {
    throw DomainError("affine map needs modulus >= 1 and sign +-1");
  }
}

}  // namespace

Vertex AffineMap::apply(Vertex x) const {
  return mod(static_cast<long long>(sign) * x + shift, modulus);
}

Permutation AffineMap::to_permutation() const {
  check_affine(*this);
  std::vector<Vertex> images(static_cast<std::size_t>(modulus));
  for (Vertex x = 0; x < modulus; ++x) images[x] = apply(x);
  return Permutation(std::move(images));
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
  if (a.modulus != b.modulus) throw DomainError("compose: modulus mismatch");
  return AffineMap{a.modulus, a.sign * b.sign,
                   mod(static_cast<long long>(a.sign) * b.shift + a.shift, a.modulus)};
}

std::optional<AffineMap> as_affine(const Permutation& p) {
  const int n = p.degree();
  const int shift = p(0);
  for (int sign : {1, -1}) {
    const AffineMap candidate{n, sign, shift};
    bool ok = true;
    for (Vertex x = 0; x < n && ok; ++x) ok = candidate.apply(x) == p(x);
    if (ok) return candidate;
  }
  return std::nullopt;
}

Permutation translation(int n, int shift) {
  return AffineMap{n, 1, mod(shift, n)}.to_permutation();
}

Permutation negation(int n) { return AffineMap{n, -1, 0}.to_permutation(); }

}  // namespace andrasfai
