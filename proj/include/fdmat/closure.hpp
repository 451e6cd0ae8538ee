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

#ifndef FDMAT_CLOSURE_HPP_
#define FDMAT_CLOSURE_HPP_

#include <cstddef>
#include <vector>

#include "fdmat/core.hpp"
#include "fdmat/flats.hpp"

namespace fdmat {

// Default enumeration bounds. Exceeding a bound raises kCapExceeded; nothing
// is ever silently truncated.
inline constexpr std::size_t kEnumerationCap = 12;
inline constexpr std::size_t kMuCap = 12;

struct ClosureResult {
  AttrSet closure;
  Trace trace;
};

/// Staged closure: repeatedly unions the right sides of every pair whose
/// left side is already covered, recording one stage per growth step. This
/// is the reference implementation; it is kept permanently because the stage
/// sequence itself is part of several results (see dd_target).
ClosureResult extend_by_closure(const FdFunction& f, const AttrSet& x);

/// Linear-time closure kernel: per-pair counters of unsatisfied left-side
/// attributes and a work queue of newly derived attributes. Bit-exact match
/// with extend_by_closure on every input.
AttrSet fast_closure(const FdFunction& f, const AttrSet& x);

/// fast_closure over f with the pair at `skip_index` ignored. Used for
/// redundancy tests without copying the function.
AttrSet fast_closure_skipping(const FdFunction& f, const AttrSet& x,
                              std::size_t skip_index);

/// True iff `c` is a fixed point of the closure induced by f.
bool is_closed(const FdFunction& f, const AttrSet& c);

/// All closed sets, canonical order. Requires width <= cap.
std::vector<AttrSet> closed_sets(const FdFunction& f, std::size_t cap = kEnumerationCap);

/// All inclusion-minimal sets whose closure is `c`, canonical order.
/// Throws kNotClosed when c is not closed, kCapExceeded when |c| > cap.
std::vector<AttrSet> keys_of(const FdFunction& f, const AttrSet& c,
                             std::size_t cap = kEnumerationCap);

/// Every key of every closed set, as a hereditary collection (downward
/// closure is checked on the way out).
HereditaryCollection all_keys(const FdFunction& f, std::size_t cap = kEnumerationCap);

/// The pairs (K, closure(K)) for each key K. Extending this restriction
/// regenerates the full closure.
FdFunction key_restriction(const FdFunction& f, std::size_t cap = kEnumerationCap);

/// Reduces an arbitrary pair list to the canonical function: duplicate left
/// sides are merged by right-side union, then every right side is replaced
/// by the full closure of its left side under the merged relation.
FdFunction canonicalize(std::size_t width, const std::vector<FdPair>& raw);

/// The explicit closure function {(S, closure(S)) : S subset of U} with all
/// 2^width pairs. Requires width <= mu_cap.
FdFunction materialize_mu(const FdFunction& f, std::size_t mu_cap = kMuCap);

}  // namespace fdmat

#endif  // FDMAT_CLOSURE_HPP_
