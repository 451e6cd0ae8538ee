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

#ifndef FDMAT_COVER_HPP_
#define FDMAT_COVER_HPP_

#include <vector>

#include "fdmat/core.hpp"

namespace fdmat {

/// Pairs that are derivable from the rest of the function: right side
/// contained in the closure of the left side once the pair itself is
/// removed. Canonical order.
std::vector<FdPair> removable_pairs(const FdFunction& f);

/// One pass over the pairs in canonical order, deleting each pair that is
/// removable with respect to the current (partially pruned) set. Removing a
/// pair never makes another one removable, so a single pass leaves no
/// removable pair. The result generates the same closure as the input.
/// Different scan orders give different (all valid) results; the canonical
/// order makes this one reproducible.
FdFunction nonredundant_cover(const FdFunction& f);

/// True iff f and ref induce the same closure on every set: every pair of
/// each is derivable under the other. Works without materializing the full
/// closure, so it is usable at any universe size.
bool is_cover(const FdFunction& f, const FdFunction& ref);

/// Span of f inside a materialized closure function mu: the pairs of mu
/// whose right side is already reachable from their left side under f
/// alone. Requires f's pairs to be members of mu (kNotSubsetOfMu).
FdFunction span(const FdFunction& f, const FdFunction& mu);

/// Local irredundance: no pair of f is derivable from the others. This is
/// the independence test of the cover matroid.
bool is_independent(const FdFunction& f);

}  // namespace fdmat

#endif  // FDMAT_COVER_HPP_
