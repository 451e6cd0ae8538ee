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

#include <algorithm>
#include <doctest.h>

#include "fdmat/core.hpp"
#include "helpers.hpp"

using namespace fdmat;
using fdmat::testing::Rng;

TEST_CASE("universe keeps declaration order") {
  Universe u = Universe::make({"a", "b", "c", "d"});
  CHECK(u.size() == 4);
  CHECK(u.index_of("a") == 0);
  CHECK(u.index_of("d") == 3);
  CHECK(!u.index_of("x").has_value());

  Universe weather = Universe::make({"City", "Year", "RainfallTotal"});
  CHECK(weather.size() == 3);
  CHECK(weather.require("Year") == 1);
}

TEST_CASE("universe rejects duplicates and empty names") {
  CHECK_THROWS_WITH_AS(Universe::make({"a", "a"}), doctest::Contains("DuplicateAttribute"),
                       Error);
  CHECK_THROWS_WITH_AS(Universe::make({"a", ""}), doctest::Contains("EmptyName"), Error);
}

TEST_CASE("set operations") {
  AttrSet ac = AttrSet::of(3, {0, 2});
  AttrSet abc = AttrSet::full(3);
  AttrSet a = AttrSet::of(3, {0});

  CHECK(ac.subset_of(abc));
  CHECK(!abc.subset_of(ac));
  CHECK(!a.proper_subset_of(a));
  CHECK(a.proper_subset_of(ac));
  CHECK(AttrSet::of(3, {0, 1}).union_with(AttrSet::of(3, {2})) == abc);
  CHECK(ac.intersect_with(a) == a);
  CHECK(ac.difference(a) == AttrSet::of(3, {2}));
  CHECK(ac.complement() == AttrSet::of(3, {1}));
  CHECK(ac.count() == 2);
  CHECK(AttrSet(3).empty_set());

  AttrSet other_universe(4);
  CHECK_THROWS_AS((void)ac.subset_of(other_universe), Error);
}

TEST_CASE("boolean lattice laws on random sets") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t width = 1 + rng.below(10);
    AttrSet x = AttrSet::from_mask(width, rng.next());
    AttrSet y = AttrSet::from_mask(width, rng.next());
    AttrSet z = AttrSet::from_mask(width, rng.next());

    CHECK(x.union_with(y.union_with(z)) == x.union_with(y).union_with(z));
    CHECK(x.intersect_with(y.intersect_with(z)) == x.intersect_with(y).intersect_with(z));
    CHECK(x.union_with(x.intersect_with(y)) == x);
    CHECK(x.intersect_with(x.union_with(y)) == x);
    CHECK(x.union_with(y).complement() == x.complement().intersect_with(y.complement()));
    CHECK(x.intersect_with(y).complement() == x.complement().union_with(y.complement()));
  }
}

TEST_CASE("insert merges duplicate left sides by right union") {
  FdFunction f(2);
  f = f.insert({AttrSet::of(2, {0}), AttrSet::of(2, {1})}, true);
  CHECK(f.size() == 1);
  f = f.insert({AttrSet::of(2, {0}), AttrSet::of(2, {0})}, true);
  CHECK(f.size() == 1);
  CHECK(f.pair_at(0).right == AttrSet::full(2));

  CHECK_THROWS_WITH_AS(f.insert({AttrSet::of(2, {0}), AttrSet::of(2, {1})}, false),
                       doctest::Contains("DuplicateLeft"), Error);
}

TEST_CASE("pairs iterate in canonical order") {
  AttrSet a = AttrSet::of(4, {0});
  AttrSet b = AttrSet::of(4, {1});
  AttrSet ac = AttrSet::of(4, {0, 2});
  AttrSet d = AttrSet::of(4, {3});

  FdFunction f = FdFunction::from_pairs(
      4, {{ac, d}, {a, b}}, false);
  CHECK(f.pair_at(0).left == a);
  CHECK(f.pair_at(1).left == ac);

  FdFunction g = FdFunction::from_pairs(4, {{b, d}, {a, d}}, false);
  CHECK(g.pair_at(0).left == a);
  CHECK(g.pair_at(1).left == b);

  CHECK(FdFunction(4).pairs().empty());
}

TEST_CASE("canonical order is insertion-order invariant") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t width = 2 + rng.below(5);
    std::vector<FdPair> pairs;
    for (int i = 0; i < 6; ++i) {
      pairs.push_back(FdPair{AttrSet::from_mask(width, rng.below(1ULL << width)),
                             AttrSet::from_mask(width, rng.below(1ULL << width))});
    }
    FdFunction forward = FdFunction::from_pairs(width, pairs, true);
    std::reverse(pairs.begin(), pairs.end());
    FdFunction backward = FdFunction::from_pairs(width, pairs, true);
    // Right sides may merge differently only if the pair lists differ as
    // multisets, which reversal does not change.
    CHECK(forward == backward);
  }
}

TEST_CASE("canonical order on sets is a strict total order") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t width = 1 + rng.below(8);
    AttrSet x = AttrSet::from_mask(width, rng.next());
    AttrSet y = AttrSet::from_mask(width, rng.next());
    AttrSet z = AttrSet::from_mask(width, rng.next());

    int relations = (canonical_less(x, y) ? 1 : 0) + (canonical_less(y, x) ? 1 : 0) +
                    (x == y ? 1 : 0);
    CHECK(relations == 1);
    if (canonical_less(x, y) && canonical_less(y, z)) CHECK(canonical_less(x, z));
  }

  // Size dominates, then the lowest differing attribute.
  CHECK(canonical_less(AttrSet::of(3, {2}), AttrSet::of(3, {0, 1})));
  CHECK(canonical_less(AttrSet::of(3, {0, 2}), AttrSet::of(3, {1, 2})));
  CHECK(canonical_less(AttrSet::of(3, {0, 1}), AttrSet::of(3, {0, 2})));
}

TEST_CASE("functions reject pairs from another universe") {
  CHECK_THROWS_WITH_AS(
      FdFunction::from_pairs(3, {{AttrSet::of(4, {0}), AttrSet::of(4, {1})}}, false),
      doctest::Contains("UniverseMismatch"), Error);
}

TEST_CASE("no two pairs share a left side after construction") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t width = 1 + rng.below(6);
    std::vector<FdPair> pairs;
    for (int i = 0; i < 8; ++i) {
      pairs.push_back(FdPair{AttrSet::from_mask(width, rng.below(1ULL << width)),
                             AttrSet::from_mask(width, rng.below(1ULL << width))});
    }
    FdFunction f = FdFunction::from_pairs(width, pairs, true);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      CHECK(f.pair_at(i).left != f.pair_at(i + 1).left);
      CHECK(canonical_less(f.pair_at(i).left, f.pair_at(i + 1).left));
    }
  }
}
