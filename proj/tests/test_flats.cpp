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

#include <doctest.h>

#include "fdmat/core.hpp"
#include "fdmat/flats.hpp"
#include "helpers.hpp"

using namespace fdmat;
using fdmat::testing::Rng;

namespace {

// Facets {a,b} and {c}: the fixture whose two flat-closure constructions
// disagree.
HereditaryCollection split_complex() {
  return HereditaryCollection::from_facets(3, {AttrSet::of(3, {0, 1}), AttrSet::of(3, {2})});
}

// Facets {a} and {b} over two attributes: the rank-one uniform matroid.
HereditaryCollection two_points() {
  return HereditaryCollection::from_facets(2, {AttrSet::of(2, {0}), AttrSet::of(2, {1})});
}

HereditaryCollection random_hereditary(Rng& rng, std::size_t width, std::size_t facets) {
  std::vector<AttrSet> fs;
  for (std::size_t i = 0; i < facets; ++i) {
    fs.push_back(AttrSet::from_mask(width, rng.below(1ULL << width)));
  }
  return HereditaryCollection::from_facets(width, fs);
}

}  // namespace

TEST_CASE("facet construction") {
  HereditaryCollection h = split_complex();
  CHECK(h.size() == 5);
  CHECK(h.contains(AttrSet(3)));
  CHECK(h.contains(AttrSet::of(3, {0, 1})));
  CHECK(h.contains(AttrSet::of(3, {2})));
  CHECK(!h.contains(AttrSet::of(3, {0, 2})));

  CHECK(HereditaryCollection::from_facets(2, {}).size() == 1);
  CHECK(HereditaryCollection::from_facets(3, {AttrSet::full(3)}).size() == 8);

  CHECK_THROWS_WITH_AS(HereditaryCollection::from_facets(17, {}),
                       doctest::Contains("CapExceeded"), Error);
  CHECK_THROWS_WITH_AS(HereditaryCollection::from_facets(3, {AttrSet::of(2, {0})}),
                       doctest::Contains("UniverseMismatch"), Error);
}

TEST_CASE("dependence function") {
  HereditaryCollection h = split_complex();
  CHECK(delta(h, AttrSet(3)) == AttrSet(3));
  CHECK(delta(h, AttrSet::of(3, {0})) == AttrSet::of(3, {0, 2}));
  CHECK(delta(h, AttrSet::of(3, {1})) == AttrSet::of(3, {1, 2}));
  CHECK(delta(h, AttrSet::of(3, {2})) == AttrSet::full(3));
  CHECK(delta(h, AttrSet::of(3, {0, 1})) == AttrSet::full(3));

  // Every addition keeps the free collection free.
  HereditaryCollection free = HereditaryCollection::from_facets(3, {AttrSet::full(3)});
  CHECK(delta(free, AttrSet::of(3, {0})) == AttrSet::of(3, {0}));

  CHECK(delta(two_points(), AttrSet::of(2, {0})) == AttrSet::full(2));

  CHECK_THROWS_WITH_AS(delta(h, AttrSet::of(3, {0, 2})),
                       doctest::Contains("NotIndependent"), Error);
}

TEST_CASE("ancestors") {
  HereditaryCollection pts = two_points();
  std::vector<AttrSet> anc = ancestors(pts, AttrSet::of(2, {0}));
  REQUIRE(anc.size() == 1);
  CHECK(anc[0] == AttrSet::full(2));

  // The empty set sees every dependence image.
  std::vector<AttrSet> all = ancestors(pts, AttrSet(2));
  REQUIRE(all.size() == 2);
  CHECK(all[0] == AttrSet(2));
  CHECK(all[1] == AttrSet::full(2));

  HereditaryCollection h = split_complex();
  std::vector<AttrSet> c_anc = ancestors(h, AttrSet::of(3, {2}));
  REQUIRE(c_anc.size() == 3);
  CHECK(c_anc[0] == AttrSet::of(3, {0, 2}));
  CHECK(c_anc[1] == AttrSet::of(3, {1, 2}));
  CHECK(c_anc[2] == AttrSet::full(3));
}

TEST_CASE("top-down flat closure") {
  HereditaryCollection h = split_complex();
  CHECK(kappa_topdown(h, AttrSet::of(3, {2})) == AttrSet::of(3, {2}));
  CHECK(kappa_topdown(h, AttrSet(3)) == AttrSet(3));
  CHECK(kappa_topdown(h, AttrSet::of(3, {0})) == AttrSet::of(3, {0, 2}));

  CHECK(kappa_topdown(two_points(), AttrSet::of(2, {0})) == AttrSet::full(2));
}

TEST_CASE("bottom-up flat closure and the divergence fixture") {
  CHECK(kappa_bottomup(two_points(), AttrSet::of(2, {0})) == AttrSet::full(2));

  HereditaryCollection free = HereditaryCollection::from_facets(3, {AttrSet::full(3)});
  for (std::uint64_t m = 0; m < 8; ++m) {
    AttrSet x = AttrSet::from_mask(3, m);
    CHECK(kappa_bottomup(free, x) == x);
  }

  // The two constructions disagree at {c}: the report is a verdict, never
  // an error.
  HereditaryCollection h = split_complex();
  AttrSet c = AttrSet::of(3, {2});
  CHECK(kappa_topdown(h, c) == c);
  CHECK(kappa_bottomup(h, c) == AttrSet::full(3));
}

TEST_CASE("ancestors never empty, closure laws hold top-down") {
  Rng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t width = 2 + rng.below(5);
    HereditaryCollection h = random_hereditary(rng, width, 1 + rng.below(4));
    const std::uint64_t total = 1ULL << width;
    std::vector<AttrSet> kappa;
    kappa.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) {
      AttrSet x = AttrSet::from_mask(width, m);
      CHECK(!ancestors(h, x).empty());
      kappa.push_back(kappa_topdown(h, x));
    }
    for (std::uint64_t m = 0; m < total; ++m) {
      AttrSet x = AttrSet::from_mask(width, m);
      CHECK(x.subset_of(kappa[m]));                       // inclusion
      CHECK(kappa[kappa[m].low_mask()] == kappa[m]);      // idempotence
      for (std::size_t q = 0; q < width; ++q) {           // monotonicity
        if (x.test(q)) continue;
        CHECK(kappa[m].subset_of(kappa[m | (1ULL << q)]));
      }
    }
    // Members are keys of their own flat closure.
    for (const AttrSet& member : h.members()) {
      for (std::size_t p : member.indices()) {
        AttrSet smaller = member;
        smaller.reset(p);
        CHECK(kappa[smaller.low_mask()] != kappa[member.low_mask()]);
      }
    }
    // The closure stays inside the image of any maximal independent subset.
    for (std::uint64_t m = 0; m < total; ++m) {
      AttrSet x = AttrSet::from_mask(width, m);
      for (const AttrSet& member : h.members()) {
        if (!member.subset_of(x)) continue;
        bool maximal = true;
        for (std::size_t p : x.difference(member).indices()) {
          AttrSet bigger = member;
          bigger.set(p);
          if (h.contains(bigger)) {
            maximal = false;
            break;
          }
        }
        if (maximal) CHECK(kappa[m].subset_of(delta(h, member)));
      }
    }
  }
}

TEST_CASE("uniform collections: both constructions agree everywhere") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t rank = 1; rank <= n; ++rank) {
      HereditaryCollection h = HereditaryCollection::uniform(n, rank);
      const std::uint64_t total = 1ULL << n;
      for (std::uint64_t m = 0; m < total; ++m) {
        AttrSet x = AttrSet::from_mask(n, m);
        AttrSet td = kappa_topdown(h, x);
        CHECK(td == kappa_bottomup(h, x));
        AttrSet expected = x.count() >= rank ? AttrSet::full(n) : x;
        CHECK(td == expected);
        // Every maximal independent subset has the closure as its image.
        for (const AttrSet& member : h.members()) {
          if (!member.subset_of(x)) continue;
          bool maximal = true;
          for (std::size_t p : x.difference(member).indices()) {
            AttrSet bigger = member;
            bigger.set(p);
            if (h.contains(bigger)) {
              maximal = false;
              break;
            }
          }
          if (maximal) CHECK(delta(h, member) == td);
        }
      }
    }
  }
}

TEST_CASE("dependence function as a dependency function") {
  HereditaryCollection h = split_complex();
  FdFunction dep = dependence_function(h);
  CHECK(dep.size() == 5);
  CHECK(dep.right_of(AttrSet::of(3, {2})).value() == AttrSet::full(3));
}
