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

#include "fdmat/closure.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>

#include "closure_index.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdmat {

namespace {

void check_query(const FdFunction& f, const AttrSet& x) {
  if (f.width() != x.width()) {
    raise(ErrorCode::kUniverseMismatch, "query set width differs from function width");
  }
}

void check_cap(std::size_t width, std::size_t cap, const char* what) {
  if (width > cap) {
    raise(ErrorCode::kCapExceeded, std::string(what) + ": universe size " +
                                       std::to_string(width) + " exceeds cap " +
                                       std::to_string(cap));
  }
}

}  // namespace

ClosureResult extend_by_closure(const FdFunction& f, const AttrSet& x) {
  check_query(f, x);
  ClosureResult result;
  result.trace.stages.push_back(x);
  result.trace.fired.emplace_back();

  AttrSet current = x;
  std::vector<bool> applicable(f.size(), false);
  for (;;) {
    AttrSet next = current;
    std::vector<FdPair> newly_fired;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const FdPair& p = f.pair_at(i);
      if (p.left.subset_of(current)) {
        next.union_in_place(p.right);
        if (!applicable[i]) {
          applicable[i] = true;
          newly_fired.push_back(p);
        }
      }
    }
    if (next == current) break;
    result.trace.stages.push_back(next);
    result.trace.fired.push_back(std::move(newly_fired));
    current = std::move(next);
  }
  result.closure = current;
  return result;
}

AttrSet fast_closure(const FdFunction& f, const AttrSet& x) {
  check_query(f, x);
  return detail::ClosureIndex(f).close(f, x, nullptr, f.size());
}

AttrSet fast_closure_skipping(const FdFunction& f, const AttrSet& x,
                              std::size_t skip_index) {
  check_query(f, x);
  return detail::ClosureIndex(f).close(f, x, nullptr, skip_index);
}

bool is_closed(const FdFunction& f, const AttrSet& c) {
  return fast_closure(f, c) == c;
}

std::vector<AttrSet> closed_sets(const FdFunction& f, std::size_t cap) {
  check_cap(f.width(), cap, "closed_sets");
  const std::size_t width = f.width();
  const std::uint64_t total = 1ULL << width;

  detail::ClosureIndex index(f);
  std::vector<char> closed(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
    AttrSet s = AttrSet::from_mask(width, static_cast<std::uint64_t>(mask));
    closed[static_cast<std::size_t>(mask)] =
        index.close(f, s, nullptr, f.size()) == s ? 1 : 0;
  }

  std::vector<AttrSet> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (closed[mask]) out.push_back(AttrSet::from_mask(width, mask));
  }
  std::sort(out.begin(), out.end(),
            [](const AttrSet& a, const AttrSet& b) { return canonical_less(a, b); });
  return out;
}

std::vector<AttrSet> keys_of(const FdFunction& f, const AttrSet& c, std::size_t cap) {
  check_query(f, c);
  if (!is_closed(f, c)) {
    raise(ErrorCode::kNotClosed, "keys_of target is not closed");
  }
  if (c.count() > cap) {
    raise(ErrorCode::kCapExceeded, "keys_of: closed set larger than cap");
  }

  const std::size_t width = f.width();
  std::vector<std::size_t> members = c.indices();
  const std::uint64_t total = 1ULL << members.size();

  detail::ClosureIndex index(f);
  auto close = [&](const AttrSet& s) { return index.close(f, s, nullptr, f.size()); };
  std::vector<AttrSet> keys;
  for (std::uint64_t sub = 0; sub < total; ++sub) {
    AttrSet k(width);
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (sub & (1ULL << b)) k.set(members[b]);
    }
    if (close(k) != c) continue;
    // Minimal iff no single removal preserves the closure; monotonicity
    // extends this to all proper subsets.
    bool minimal = true;
    for (std::size_t a : k.indices()) {
      AttrSet smaller = k;
      smaller.reset(a);
      if (close(smaller) == c) {
        minimal = false;
        break;
      }
    }
    if (minimal) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end(),
            [](const AttrSet& a, const AttrSet& b) { return canonical_less(a, b); });
  return keys;
}

HereditaryCollection all_keys(const FdFunction& f, std::size_t cap) {
  check_cap(f.width(), cap, "all_keys");
  const std::size_t width = f.width();
  const std::uint64_t total = 1ULL << width;

  detail::ClosureIndex index(f);
  std::vector<char> is_key(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
    AttrSet k = AttrSet::from_mask(width, static_cast<std::uint64_t>(mask));
    AttrSet closure = index.close(f, k, nullptr, f.size());
    bool minimal = true;
    for (std::size_t a : k.indices()) {
      AttrSet smaller = k;
      smaller.reset(a);
      if (index.close(f, smaller, nullptr, f.size()) == closure) {
        minimal = false;
        break;
      }
    }
    is_key[static_cast<std::size_t>(mask)] = minimal ? 1 : 0;
  }

  std::vector<AttrSet> keys;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (is_key[mask]) keys.push_back(AttrSet::from_mask(width, mask));
  }
  return HereditaryCollection::from_members(width, std::move(keys));
}

FdFunction key_restriction(const FdFunction& f, std::size_t cap) {
  HereditaryCollection keys = all_keys(f, cap);
  std::vector<FdPair> pairs;
  pairs.reserve(keys.size());
  for (const AttrSet& k : keys.members()) {
    pairs.push_back(FdPair{k, fast_closure(f, k)});
  }
  return FdFunction::from_pairs(f.width(), pairs, /*merge=*/false);
}

FdFunction canonicalize(std::size_t width, const std::vector<FdPair>& raw) {
  FdFunction merged = FdFunction::from_pairs(width, raw, /*merge=*/true);
  detail::ClosureIndex index(merged);
  std::vector<FdPair> closed_pairs;
  closed_pairs.reserve(merged.size());
  for (const FdPair& p : merged.pairs()) {
    closed_pairs.push_back(
        FdPair{p.left, index.close(merged, p.left, nullptr, merged.size())});
  }
  return FdFunction::from_pairs(width, closed_pairs, /*merge=*/false);
}

FdFunction materialize_mu(const FdFunction& f, std::size_t mu_cap) {
  check_cap(f.width(), mu_cap, "materialize_mu");
  const std::size_t width = f.width();
  const std::uint64_t total = 1ULL << width;

  detail::ClosureIndex index(f);
  std::vector<FdPair> pairs(total, FdPair{AttrSet(width), AttrSet(width)});
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
    AttrSet s = AttrSet::from_mask(width, static_cast<std::uint64_t>(mask));
    pairs[static_cast<std::size_t>(mask)] = FdPair{s, index.close(f, s, nullptr, f.size())};
  }
  return FdFunction::from_pairs(width, pairs, /*merge=*/false);
}

}  // namespace fdmat
