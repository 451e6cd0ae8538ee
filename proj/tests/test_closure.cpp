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

#include "fdmat/closure.hpp"
#include "fdmat/core.hpp"
#include "helpers.hpp"

using namespace fdmat;
using fdmat::testing::demo_fd;
using fdmat::testing::oracle_close;
using fdmat::testing::random_fd;
using fdmat::testing::Rng;

namespace {

FdFunction raw_demo() {
  // a -> b, b -> a, ac -> d, before canonicalization.
  return FdFunction::from_pairs(4,
                                {{AttrSet::of(4, {0}), AttrSet::of(4, {1})},
                                 {AttrSet::of(4, {1}), AttrSet::of(4, {0})},
                                 {AttrSet::of(4, {0, 2}), AttrSet::of(4, {3})}},
                                false);
}

}  // namespace

TEST_CASE("staged closure reaches the fixpoint") {
  FdFunction f = raw_demo();
  auto [closure, trace] = extend_by_closure(f, AttrSet::of(4, {0, 2}));
  CHECK(closure == AttrSet::full(4));
  CHECK(trace.stages.front() == AttrSet::of(4, {0, 2}));
  CHECK(trace.stages.back() == closure);

  // From {b,c} the growth is two staged steps: first a, then d.
  auto [closure2, trace2] = extend_by_closure(f, AttrSet::of(4, {1, 2}));
  CHECK(closure2 == AttrSet::full(4));
  REQUIRE(trace2.stages.size() == 3);
  CHECK(trace2.stages[1] == AttrSet::of(4, {0, 1, 2}));
  CHECK(trace2.stages[2] == AttrSet::full(4));
}

TEST_CASE("staged closure on degenerate functions") {
  FdFunction empty(3);
  auto [closure, trace] = extend_by_closure(empty, AttrSet::of(3, {1}));
  CHECK(closure == AttrSet::of(3, {1}));
  CHECK(trace.stages.size() == 1);

  // A pair with an empty left side fires for every start.
  FdFunction bottom = FdFunction::from_pairs(
      2, {{AttrSet(2), AttrSet::of(2, {0})}}, false);
  CHECK(extend_by_closure(bottom, AttrSet(2)).closure == AttrSet::of(2, {0}));
  CHECK(fast_closure(bottom, AttrSet::of(2, {1})) == AttrSet::full(2));
}

TEST_CASE("trace stages strictly increase and are bounded") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t width = 2 + rng.below(5);
    FdFunction f = random_fd(rng, width, 8);
    AttrSet x = AttrSet::from_mask(width, rng.below(1ULL << width));
    Trace trace = extend_by_closure(f, x).trace;
    REQUIRE(trace.fired.size() == trace.stages.size());
    for (std::size_t t = 0; t + 1 < trace.stages.size(); ++t) {
      CHECK(trace.stages[t].proper_subset_of(trace.stages[t + 1]));
    }
    CHECK(trace.growth_steps() <= width - x.count() + 0u);
  }
}

TEST_CASE("both kernels agree with the fixpoint oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t width = 1 + rng.below(6);
    FdFunction f = random_fd(rng, width, 8);
    for (std::uint64_t mask = 0; mask < (1ULL << width); ++mask) {
      AttrSet x = AttrSet::from_mask(width, mask);
      AttrSet expected = oracle_close(f, x);
      CHECK(fast_closure(f, x) == expected);
      CHECK(extend_by_closure(f, x).closure == expected);
    }
  }
}

TEST_CASE("closure laws hold") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t width = 2 + rng.below(4);
    FdFunction f = random_fd(rng, width, 8);
    const std::uint64_t total = 1ULL << width;
    std::vector<AttrSet> clo;
    clo.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) {
      clo.push_back(fast_closure(f, AttrSet::from_mask(width, m)));
    }
    for (std::uint64_t m = 0; m < total; ++m) {
      CHECK(AttrSet::from_mask(width, m).subset_of(clo[m]));           // inclusion
      CHECK(clo[clo[m].low_mask()] == clo[m]);                         // idempotence
      for (std::uint64_t sub = m; ; sub = (sub - 1) & m) {             // monotonicity
        CHECK(clo[sub].subset_of(clo[m]));
        if (sub == 0) break;
      }
    }
  }
}

TEST_CASE("is_closed matches the definition") {
  FdFunction f = demo_fd();
  CHECK(is_closed(f, AttrSet::of(4, {0, 1})));
  CHECK(!is_closed(f, AttrSet::of(4, {0})));
  CHECK(is_closed(f, AttrSet::full(4)));

  // Both directions of the growth characterization.
  for (std::uint64_t m = 0; m < 16; ++m) {
    AttrSet c = AttrSet::from_mask(4, m);
    bool grows = true;
    for (std::size_t p = 0; p < 4; ++p) {
      if (c.test(p)) continue;
      AttrSet grown = c;
      grown.set(p);
      if (!fast_closure(f, c).proper_subset_of(fast_closure(f, grown))) grows = false;
    }
    CHECK(is_closed(f, c) == grows);
  }
}

TEST_CASE("closed sets of the demo function") {
  std::vector<AttrSet> sets = closed_sets(demo_fd());
  REQUIRE(sets.size() == 7);
  CHECK(sets[0] == AttrSet(4));
  CHECK(sets[1] == AttrSet::of(4, {2}));
  CHECK(sets[2] == AttrSet::of(4, {3}));
  CHECK(sets[3] == AttrSet::of(4, {0, 1}));
  CHECK(sets[4] == AttrSet::of(4, {2, 3}));
  CHECK(sets[5] == AttrSet::of(4, {0, 1, 3}));
  CHECK(sets[6] == AttrSet::full(4));
}

TEST_CASE("closed sets of degenerate functions") {
  CHECK(closed_sets(FdFunction(3)).size() == 8);

  FdFunction bottom = FdFunction::from_pairs(2, {{AttrSet(2), AttrSet::full(2)}}, false);
  std::vector<AttrSet> sets = closed_sets(bottom);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == AttrSet::full(2));

  FdFunction wide(13);
  CHECK_THROWS_WITH_AS(closed_sets(wide), doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("keys of a closed set") {
  FdFunction f = demo_fd();
  std::vector<AttrSet> keys = keys_of(f, AttrSet::full(4));
  REQUIRE(keys.size() == 2);
  CHECK(keys[0] == AttrSet::of(4, {0, 2}));
  CHECK(keys[1] == AttrSet::of(4, {1, 2}));

  std::vector<AttrSet> ab_keys = keys_of(f, AttrSet::of(4, {0, 1}));
  REQUIRE(ab_keys.size() == 2);
  CHECK(ab_keys[0] == AttrSet::of(4, {0}));
  CHECK(ab_keys[1] == AttrSet::of(4, {1}));

  FdFunction empty(3);
  std::vector<AttrSet> self = keys_of(empty, AttrSet::of(3, {0, 2}));
  REQUIRE(self.size() == 1);
  CHECK(self[0] == AttrSet::of(3, {0, 2}));

  CHECK_THROWS_WITH_AS(keys_of(f, AttrSet::of(4, {0})), doctest::Contains("NotClosed"),
                       Error);
  CHECK_THROWS_WITH_AS(keys_of(f, AttrSet::full(4), 3), doctest::Contains("CapExceeded"),
                       Error);
}

TEST_CASE("all keys form a hereditary collection") {
  HereditaryCollection keys = all_keys(demo_fd());
  CHECK(keys.size() == 10);
  CHECK(keys.contains(AttrSet(4)));
  CHECK(keys.contains(AttrSet::of(4, {0, 2})));
  CHECK(keys.contains(AttrSet::of(4, {2, 3})));
  CHECK(!keys.contains(AttrSet::of(4, {0, 1})));

  CHECK(all_keys(FdFunction(3)).size() == 8);

  FdFunction bottom = FdFunction::from_pairs(2, {{AttrSet(2), AttrSet::of(2, {0})}}, false);
  HereditaryCollection bkeys = all_keys(bottom);
  CHECK(bkeys.size() == 2);
  CHECK(bkeys.contains(AttrSet(2)));
  CHECK(bkeys.contains(AttrSet::of(2, {1})));
  // Non-key singletons are exactly the closure of the empty set.
  CHECK(fast_closure(bottom, AttrSet(2)) == AttrSet::of(2, {0}));
}

TEST_CASE("downward closure of keys on random instances") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t width = 2 + rng.below(4);
    FdFunction f = random_fd(rng, width, 8);
    HereditaryCollection keys = all_keys(f);
    for (const AttrSet& k : keys.members()) {
      for (std::size_t a : k.indices()) {
        AttrSet smaller = k;
        smaller.reset(a);
        CHECK(keys.contains(smaller));
      }
    }
    // Non-key singletons = closure of the empty set.
    AttrSet nonkeys(width);
    for (std::size_t p = 0; p < width; ++p) {
      AttrSet single = AttrSet::of(width, {p});
      if (!keys.contains(single)) nonkeys.set(p);
    }
    CHECK(fast_closure(f, AttrSet(width)) == nonkeys);
  }
}

TEST_CASE("key restriction regenerates the closure") {
  FdFunction f = demo_fd();
  FdFunction restricted = key_restriction(f);
  CHECK(restricted.size() == 10);
  CHECK(restricted.contains({AttrSet::of(4, {2}), AttrSet::of(4, {2})}));
  CHECK(restricted.contains({AttrSet::of(4, {0, 2}), AttrSet::full(4)}));

  for (std::uint64_t m = 0; m < 16; ++m) {
    AttrSet x = AttrSet::from_mask(4, m);
    CHECK(fast_closure(restricted, x) == fast_closure(f, x));
  }

  FdFunction bottom = FdFunction::from_pairs(2, {{AttrSet(2), AttrSet::of(2, {0})}}, false);
  FdFunction br = key_restriction(bottom);
  REQUIRE(br.size() == 2);
  CHECK(br.contains({AttrSet(2), AttrSet::of(2, {0})}));
  CHECK(br.contains({AttrSet::of(2, {1}), AttrSet::full(2)}));

  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t width = 2 + rng.below(4);
    FdFunction g = random_fd(rng, width, 8);
    FdFunction gr = key_restriction(g);
    for (std::uint64_t m = 0; m < (1ULL << width); ++m) {
      AttrSet x = AttrSet::from_mask(width, m);
      CHECK(fast_closure(gr, x) == fast_closure(g, x));
    }
  }
}

TEST_CASE("canonicalization merges and closes right sides") {
  // a -> b, b -> c, a -> c.
  FdFunction f = canonicalize(3, {
                                     {AttrSet::of(3, {0}), AttrSet::of(3, {1})},
                                     {AttrSet::of(3, {1}), AttrSet::of(3, {2})},
                                     {AttrSet::of(3, {0}), AttrSet::of(3, {2})},
                                 });
  REQUIRE(f.size() == 2);
  CHECK(f.contains({AttrSet::of(3, {0}), AttrSet::full(3)}));
  CHECK(f.contains({AttrSet::of(3, {1}), AttrSet::of(3, {1, 2})}));

  // Canonical input is a fixed point.
  FdFunction again = canonicalize(3, f.pairs());
  CHECK(again == f);

  // Closures are preserved through canonicalization.
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t width = 1 + rng.below(5);
    std::vector<FdPair> raw;
    for (int i = 0; i < 5; ++i) {
      raw.push_back(FdPair{AttrSet::from_mask(width, rng.below(1ULL << width)),
                           AttrSet::from_mask(width, rng.below(1ULL << width))});
    }
    FdFunction raw_fn = FdFunction::from_pairs(width, raw, true);
    FdFunction canon = canonicalize(width, raw);
    for (std::uint64_t m = 0; m < (1ULL << width); ++m) {
      AttrSet x = AttrSet::from_mask(width, m);
      CHECK(fast_closure(canon, x) == oracle_close(raw_fn, x));
      CHECK(x.subset_of(canon.right_of(x).value_or(AttrSet::full(width))));
    }
  }
}

TEST_CASE("materialized closure function") {
  FdFunction f = FdFunction::from_pairs(
      2, {{AttrSet::of(2, {0}), AttrSet::of(2, {1})}}, false);
  FdFunction mu = materialize_mu(f);
  REQUIRE(mu.size() == 4);
  CHECK(mu.contains({AttrSet(2), AttrSet(2)}));
  CHECK(mu.contains({AttrSet::of(2, {0}), AttrSet::full(2)}));
  CHECK(mu.contains({AttrSet::of(2, {1}), AttrSet::of(2, {1})}));
  CHECK(mu.contains({AttrSet::full(2), AttrSet::full(2)}));

  FdFunction identity(3);
  FdFunction id_mu = materialize_mu(identity);
  CHECK(id_mu.size() == 8);
  for (const FdPair& p : id_mu.pairs()) CHECK(p.left == p.right);

  CHECK_THROWS_WITH_AS(materialize_mu(FdFunction(13)), doctest::Contains("CapExceeded"),
                       Error);
}
