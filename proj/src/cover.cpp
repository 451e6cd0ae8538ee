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

#include "fdmat/cover.hpp"

#include <cstdint>

#include "closure_index.hpp"
#include "fdmat/closure.hpp"

namespace fdmat {

std::vector<FdPair> removable_pairs(const FdFunction& f) {
  const std::size_t n = f.size();
  detail::ClosureIndex index(f);
  std::vector<char> removable(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const FdPair& p = f.pair_at(static_cast<std::size_t>(i));
    AttrSet rest = index.close(f, p.left, nullptr, static_cast<std::size_t>(i));
    removable[static_cast<std::size_t>(i)] = p.right.subset_of(rest) ? 1 : 0;
  }
  std::vector<FdPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (removable[i]) out.push_back(f.pair_at(i));
  }
  return out;
}

FdFunction nonredundant_cover(const FdFunction& f) {
  // Inherently sequential: each verdict depends on the prior removals.
  // Removing a pair never makes a kept pair removable, so one pass is final.
  const std::size_t n = f.size();
  detail::ClosureIndex index(f);
  std::vector<char> active(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const FdPair& p = f.pair_at(i);
    AttrSet rest = index.close(f, p.left, &active, i);
    if (p.right.subset_of(rest)) active[i] = 0;
  }
  std::vector<FdPair> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (active[i]) kept.push_back(f.pair_at(i));
  }
  return FdFunction::from_pairs(f.width(), kept, /*merge=*/false);
}

bool is_cover(const FdFunction& f, const FdFunction& ref) {
  if (f.width() != ref.width()) {
    raise(ErrorCode::kUniverseMismatch, "is_cover arguments over different universes");
  }
  detail::ClosureIndex fi(f);
  detail::ClosureIndex ri(ref);
  for (const FdPair& p : f.pairs()) {
    if (!p.right.subset_of(ri.close(ref, p.left, nullptr, ref.size()))) return false;
  }
  for (const FdPair& p : ref.pairs()) {
    if (!p.right.subset_of(fi.close(f, p.left, nullptr, f.size()))) return false;
  }
  return true;
}

FdFunction span(const FdFunction& f, const FdFunction& mu) {
  if (f.width() != mu.width()) {
    raise(ErrorCode::kUniverseMismatch, "span arguments over different universes");
  }
  for (const FdPair& p : f.pairs()) {
    if (!mu.contains(p)) {
      raise(ErrorCode::kNotSubsetOfMu, "span argument has a pair outside mu");
    }
  }
  detail::ClosureIndex index(f);
  std::vector<FdPair> reached;
  for (const FdPair& p : mu.pairs()) {
    if (p.right.subset_of(index.close(f, p.left, nullptr, f.size()))) {
      reached.push_back(p);
    }
  }
  return FdFunction::from_pairs(mu.width(), reached, /*merge=*/false);
}

bool is_independent(const FdFunction& f) {
  const std::size_t n = f.size();
  detail::ClosureIndex index(f);
  for (std::size_t i = 0; i < n; ++i) {
    const FdPair& p = f.pair_at(i);
    if (p.right.subset_of(index.close(f, p.left, nullptr, i))) return false;
  }
  return true;
}

}  // namespace fdmat
