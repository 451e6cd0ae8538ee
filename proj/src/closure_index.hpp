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

#ifndef FDMAT_SRC_CLOSURE_INDEX_HPP_
#define FDMAT_SRC_CLOSURE_INDEX_HPP_

#include <cstdint>
#include <vector>

#include "fdmat/core.hpp"

namespace fdmat::detail {

// Occurrence lists in CSR layout plus per-pair left-side counts. Built once
// per function, shareable across many closure queries; each query only
// copies the counter array.
struct ClosureIndex {
  std::size_t width = 0;
  std::size_t npairs = 0;
  std::vector<std::uint32_t> offsets;     // width + 1
  std::vector<std::uint32_t> pair_ids;    // one entry per (attr, pair) use
  std::vector<std::uint32_t> base_counts; // |left| per pair
  std::vector<std::uint32_t> empty_lefts; // pairs firing unconditionally

  explicit ClosureIndex(const FdFunction& f) : width(f.width()), npairs(f.size()) {
    offsets.assign(width + 1, 0);
    base_counts.assign(npairs, 0);
    for (std::size_t i = 0; i < npairs; ++i) {
      std::uint32_t count = 0;
      f.pair_at(i).left.for_each_index([&](std::size_t a) {
        ++offsets[a + 1];
        ++count;
      });
      base_counts[i] = count;
      if (count == 0) empty_lefts.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::size_t a = 0; a < width; ++a) offsets[a + 1] += offsets[a];
    pair_ids.resize(offsets[width]);
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < npairs; ++i) {
      f.pair_at(i).left.for_each_index(
          [&](std::size_t a) { pair_ids[cursor[a]++] = static_cast<std::uint32_t>(i); });
    }
  }

  // Closure of x over the indexed function. `active` (optional) masks pairs
  // out; `skip` (npairs when unused) ignores one more.
  AttrSet close(const FdFunction& f, const AttrSet& x, const std::vector<char>* active,
                std::size_t skip) const {
    std::vector<std::uint32_t> counts = base_counts;
    AttrSet closure = x;
    std::vector<std::size_t> queue = x.indices();

    auto fire = [&](std::uint32_t pid) {
      closure.union_tracking(f.pair_at(pid).right, queue);
    };
    for (std::uint32_t pid : empty_lefts) {
      if (pid == skip || (active != nullptr && !(*active)[pid])) continue;
      fire(pid);
    }
    while (!queue.empty()) {
      std::size_t attr = queue.back();
      queue.pop_back();
      for (std::uint32_t k = offsets[attr]; k < offsets[attr + 1]; ++k) {
        std::uint32_t pid = pair_ids[k];
        if (pid == skip || (active != nullptr && !(*active)[pid])) continue;
        if (--counts[pid] == 0) fire(pid);
      }
    }
    return closure;
  }
};

}  // namespace fdmat::detail

#endif  // FDMAT_SRC_CLOSURE_INDEX_HPP_
