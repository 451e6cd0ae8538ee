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

#ifndef FDMAT_FLATS_HPP_
#define FDMAT_FLATS_HPP_

#include <cstddef>
#include <vector>

#include "fdmat/core.hpp"

namespace fdmat {

/// Downward-closed family of attribute sets over one universe width.
/// Members are stored in canonical order; the empty set belongs to every
/// non-empty collection.
class HereditaryCollection {
 public:
  HereditaryCollection() = default;

  /// Builds the family of all subsets of the given facets (maximal members).
  /// Heredity holds by construction. Throws kUniverseMismatch when a facet
  /// width differs, kCapExceeded when width > cap (default 16).
  static HereditaryCollection from_facets(std::size_t width,
                                          const std::vector<AttrSet>& facets,
                                          std::size_t cap = 16);

  /// Subsets of size <= rank over a width-n universe.
  static HereditaryCollection uniform(std::size_t n, std::size_t rank);

  /// Builds directly from an explicit member list; asserts heredity.
  static HereditaryCollection from_members(std::size_t width,
                                           std::vector<AttrSet> members);

  std::size_t width() const { return width_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<AttrSet>& members() const { return members_; }
  bool contains(const AttrSet& set) const;

  /// Inclusion-maximal members, canonical order.
  std::vector<AttrSet> maximal_members() const;

 private:
  std::size_t width_ = 0;
  std::vector<AttrSet> members_;  // canonical order, unique
};

/// Dependence image of an independent set: the set itself plus every outside
/// point whose addition leaves the collection. Throws kNotIndependent when
/// `independent` is not a member.
AttrSet delta(const HereditaryCollection& h, const AttrSet& independent);

/// All distinct dependence images containing `x`, canonical order. Never
/// empty for a non-empty collection (a maximal member's image is the full
/// universe).
std::vector<AttrSet> ancestors(const HereditaryCollection& h, const AttrSet& x);

/// Flat closure computed top-down: intersection of all ancestors of `x`.
/// By convention an empty ancestor list (unreachable for non-empty h) yields
/// the full universe.
AttrSet kappa_topdown(const HereditaryCollection& h, const AttrSet& x);

/// Flat closure computed bottom-up: extend `x` by the dependence function
/// taken as a dependency function. Equal to the top-down value on matroids;
/// the two may differ on general hereditary collections, which callers
/// report rather than treat as an error.
AttrSet kappa_bottomup(const HereditaryCollection& h, const AttrSet& x);

/// The dependence function {(I, delta(I)) : I member} as an FdFunction.
FdFunction dependence_function(const HereditaryCollection& h);

}  // namespace fdmat

#endif  // FDMAT_FLATS_HPP_
