// Copyright 2026 The Authors.
//
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

#ifndef FDMAT_TESTS_HELPERS_HPP_
#define FDMAT_TESTS_HELPERS_HPP_

#include <cstdint>
#include <vector>

#include "fdmat/closure.hpp"
#include "fdmat/core.hpp"

namespace fdmat::testing {

// Test-local fixpoint oracle, independent of every library kernel: keeps
// applying whole pairs until nothing changes.
inline AttrSet oracle_close(const FdFunction& f, const AttrSet& x) {
  AttrSet current = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const FdPair& p : f.pairs()) {
      if (p.left.subset_of(current) && !p.right.subset_of(current)) {
        current.union_in_place(p.right);
        changed = true;
      }
    }
  }
  return current;
}

inline AttrSet set_of(std::size_t width, std::initializer_list<std::size_t> indices) {
  return AttrSet::of(width, indices);
}

// The recurring four-attribute fixture: a <-> b, and {a,c} determining
// everything. Canonical form {a}->{a,b}, {b}->{a,b}, {a,c}->{a,b,c,d}.
inline FdFunction demo_fd() {
  return canonicalize(4, {
                             {AttrSet::of(4, {0}), AttrSet::of(4, {1})},
                             {AttrSet::of(4, {1}), AttrSet::of(4, {0})},
                             {AttrSet::of(4, {0, 2}), AttrSet::of(4, {3})},
                         });
}

inline FdPair demo_pair_a() { return {AttrSet::of(4, {0}), AttrSet::of(4, {0, 1})}; }
inline FdPair demo_pair_b() { return {AttrSet::of(4, {1}), AttrSet::of(4, {0, 1})}; }
inline FdPair demo_pair_ac() {
  return {AttrSet::of(4, {0, 2}), AttrSet::of(4, {0, 1, 2, 3})};
}

// Deterministic pseudo-random stream for property-style tests.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

// Seeded random canonical function over `width` attributes.
inline FdFunction random_fd(Rng& rng, std::size_t width, std::size_t max_pairs) {
  const std::uint64_t nsets = 1ULL << width;
  std::vector<FdPair> raw;
  std::size_t npairs = 1 + rng.below(max_pairs);
  for (std::size_t i = 0; i < npairs; ++i) {
    raw.push_back(FdPair{AttrSet::from_mask(width, rng.below(nsets)),
                         AttrSet::from_mask(width, rng.below(nsets))});
  }
  return canonicalize(width, raw);
}

}  // namespace fdmat::testing

#endif  // FDMAT_TESTS_HELPERS_HPP_
