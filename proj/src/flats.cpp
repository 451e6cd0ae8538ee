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

#include "fdmat/flats.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_set>

#include "fdmat/closure.hpp"

namespace fdmat {

HereditaryCollection HereditaryCollection::from_facets(std::size_t width,
                                                       const std::vector<AttrSet>& facets,
                                                       std::size_t cap) {
  if (width > cap) {
    raise(ErrorCode::kCapExceeded, "from_facets: universe size " + std::to_string(width) +
                                       " exceeds cap " + std::to_string(cap));
  }
  std::unordered_set<AttrSet> seen;
  for (const AttrSet& facet : facets) {
    if (facet.width() != width) {
      raise(ErrorCode::kUniverseMismatch, "facet width differs from collection width");
    }
    std::vector<std::size_t> members = facet.indices();
    const std::uint64_t total = 1ULL << members.size();
    for (std::uint64_t sub = 0; sub < total; ++sub) {
      AttrSet s(width);
      for (std::size_t b = 0; b < members.size(); ++b) {
        if (sub & (1ULL << b)) s.set(members[b]);
      }
      seen.insert(std::move(s));
    }
  }
  seen.insert(AttrSet(width));
  std::vector<AttrSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const AttrSet& a, const AttrSet& b) { return canonical_less(a, b); });

  HereditaryCollection h;
  h.width_ = width;
  h.members_ = std::move(out);
  return h;
}

HereditaryCollection HereditaryCollection::uniform(std::size_t n, std::size_t rank) {
  std::vector<AttrSet> members;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    AttrSet s = AttrSet::from_mask(n, mask);
    if (s.count() <= rank) members.push_back(std::move(s));
  }
  return from_members(n, std::move(members));
}

HereditaryCollection HereditaryCollection::from_members(std::size_t width,
                                                        std::vector<AttrSet> members) {
  std::sort(members.begin(), members.end(),
            [](const AttrSet& a, const AttrSet& b) { return canonical_less(a, b); });
  members.erase(std::unique(members.begin(), members.end()), members.end());

  HereditaryCollection h;
  h.width_ = width;
  h.members_ = std::move(members);
  for (const AttrSet& m : h.members_) {
    assert(m.width() == width);
    for (std::size_t a : m.indices()) {
      AttrSet smaller = m;
      smaller.reset(a);
      assert(h.contains(smaller));
      (void)smaller;
    }
  }
  return h;
}

bool HereditaryCollection::contains(const AttrSet& set) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), set,
      [](const AttrSet& a, const AttrSet& b) { return canonical_less(a, b); });
  return it != members_.end() && *it == set;
}

std::vector<AttrSet> HereditaryCollection::maximal_members() const {
  std::vector<AttrSet> out;
  for (const AttrSet& m : members_) {
    bool maximal = true;
    for (const AttrSet& other : members_) {
      if (m.proper_subset_of(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

AttrSet delta(const HereditaryCollection& h, const AttrSet& independent) {
  if (independent.width() != h.width()) {
    raise(ErrorCode::kUniverseMismatch, "delta argument width differs from collection");
  }
  if (!h.contains(independent)) {
    raise(ErrorCode::kNotIndependent, "delta argument is not a member");
  }
  AttrSet out = independent;
  for (std::size_t p = 0; p < h.width(); ++p) {
    if (out.test(p)) continue;
    AttrSet extended = independent;
    extended.set(p);
    if (!h.contains(extended)) out.set(p);
  }
  return out;
}

std::vector<AttrSet> ancestors(const HereditaryCollection& h, const AttrSet& x) {
  std::vector<AttrSet> out;
  for (const AttrSet& member : h.members()) {
    AttrSet image = delta(h, member);
    if (x.subset_of(image)) out.push_back(std::move(image));
  }
  std::sort(out.begin(), out.end(),
            [](const AttrSet& a, const AttrSet& b) { return canonical_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AttrSet kappa_topdown(const HereditaryCollection& h, const AttrSet& x) {
  std::vector<AttrSet> anc = ancestors(h, x);
  if (anc.empty()) {
    // Unreachable for non-empty collections; documented convention.
    return AttrSet::full(h.width());
  }
  AttrSet out = anc.front();
  for (std::size_t i = 1; i < anc.size(); ++i) {
    out = out.intersect_with(anc[i]);
  }
  return out;
}

AttrSet kappa_bottomup(const HereditaryCollection& h, const AttrSet& x) {
  return extend_by_closure(dependence_function(h), x).closure;
}

FdFunction dependence_function(const HereditaryCollection& h) {
  std::vector<FdPair> pairs;
  pairs.reserve(h.size());
  for (const AttrSet& member : h.members()) {
    pairs.push_back(FdPair{member, delta(h, member)});
  }
  return FdFunction::from_pairs(h.width(), pairs, /*merge=*/false);
}

}  // namespace fdmat
