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

#include "fdmat/io.hpp"
#include "helpers.hpp"

using namespace fdmat;
using fdmat::testing::demo_fd;
using fdmat::testing::random_fd;
using fdmat::testing::Rng;

TEST_CASE("dependency files parse to the canonical function") {
  io::ParsedFd parsed = io::parse_fd_file("attrs: a b c d\na -> b\nb -> a\na c -> d\n");
  CHECK(parsed.universe.size() == 4);
  CHECK(parsed.raw_pairs.size() == 3);
  CHECK(parsed.canonical == demo_fd());

  io::ParsedFd weather = io::parse_fd_file(
      "attrs: City Year RainfallTotal\nCity Year -> RainfallTotal\n");
  CHECK(weather.canonical.size() == 1);
  CHECK(weather.canonical.pair_at(0).right == AttrSet::full(3));

  // Tolerated: comments, repeated spaces, missing trailing newline,
  // carriage returns, empty left sides.
  io::ParsedFd relaxed = io::parse_fd_file(
      "attrs:  a  b # names\r\n# comment line\n\n->  a\nb ->");
  CHECK(relaxed.universe.size() == 2);
  CHECK(relaxed.raw_pairs.size() == 2);
  CHECK(relaxed.raw_pairs[0].left.empty_set());

  CHECK_THROWS_WITH_AS(io::parse_fd_file("attrs: a\nb -> a\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(io::parse_fd_file("a -> b\n"), doctest::Contains("MissingHeader"),
                       Error);
  CHECK_THROWS_WITH_AS(io::parse_fd_file("attrs: a b\na b\n"),
                       doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(io::parse_fd_file("attrs: a b\na -> b -> a\n"),
                       doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(io::parse_fd_file("attrs: a a\n"),
                       doctest::Contains("DuplicateAttribute"), Error);
}

TEST_CASE("facet files") {
  io::ParsedFacets parsed = io::parse_facets_file("attrs: a b c\na b\nc\n");
  CHECK(parsed.facets.size() == 2);
  CHECK(parsed.collection.size() == 5);

  CHECK(io::parse_facets_file("attrs: a b\n").collection.size() == 1);
  CHECK(io::parse_facets_file("attrs: a b\na b\n").collection.size() == 4);

  CHECK_THROWS_WITH_AS(io::parse_facets_file("attrs: a\nb\n"),
                       doctest::Contains("UnknownAttribute"), Error);
}

TEST_CASE("set and pair formatting") {
  Universe u = Universe::make({"a", "b", "c", "d"});
  CHECK(io::format_set(u, AttrSet::of(4, {0, 2})) == "a c");
  CHECK(io::format_set(u, AttrSet(4)).empty());
  CHECK(io::format_sets(u, {AttrSet(4), AttrSet::of(4, {0})}) == "{} / a");
  CHECK(io::format_pair(u, {AttrSet::of(4, {0, 2}), AttrSet::full(4)}) ==
        "a c -> a b c d");
  CHECK(io::format_pair(u, {AttrSet(4), AttrSet::of(4, {0})}) == "-> a");

  CHECK(io::parse_set(u, "  c   a ") == AttrSet::of(4, {0, 2}));
  CHECK(io::parse_set(u, "{}") == AttrSet(4));
  auto sets = io::parse_set_list(u, "a c / b / {}");
  REQUIRE(sets.size() == 3);
  CHECK(sets[0] == AttrSet::of(4, {0, 2}));
  CHECK(sets[1] == AttrSet::of(4, {1}));
  CHECK(sets[2] == AttrSet(4));
}

TEST_CASE("printing and reparsing a function is the identity") {
  Rng rng(161);
  std::vector<std::string> names = {"alpha", "b2", "Gamma", "d", "e5", "f"};
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t width = 1 + rng.below(6);
    Universe u = Universe::make(
        std::vector<std::string>(names.begin(), names.begin() + width));
    FdFunction f = random_fd(rng, width, 8);
    std::string text = io::format_fd_file(u, f);
    io::ParsedFd back = io::parse_fd_file(text);
    CHECK(back.canonical == f);
    CHECK(back.universe.names() == u.names());
    // Parsing is deterministic.
    CHECK(io::parse_fd_file(text).canonical == back.canonical);
  }
}

TEST_CASE("facet round-trip through maximal members") {
  Rng rng(171);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t width = 2 + rng.below(5);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < width; ++i) names.push_back(std::string(1, char('a' + i)));
    Universe u = Universe::make(names);
    std::vector<AttrSet> facets;
    for (int i = 0; i < 3; ++i) {
      facets.push_back(AttrSet::from_mask(width, rng.below(1ULL << width)));
    }
    HereditaryCollection h = HereditaryCollection::from_facets(width, facets);
    io::ParsedFacets back = io::parse_facets_file(io::format_facets_file(u, h));
    CHECK(back.collection.members() == h.members());
  }
}
