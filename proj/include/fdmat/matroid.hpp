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

#ifndef FDMAT_MATROID_HPP_
#define FDMAT_MATROID_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fdmat/core.hpp"

namespace fdmat {

inline constexpr std::size_t kBasisCap = 8;

/// Partition of a function's pairs by how their right side relates to a
/// closed set: contained (body), strictly contained (interior), equal (top).
/// Pairs reaching outside the closed set are dropped.
struct RangeRestriction {
  AttrSet closed_set;
  FdFunction body;
  FdFunction interior;
  FdFunction top;
};

/// Throws kNotClosed when c is not closed under f's closure.
RangeRestriction restrict_range(const FdFunction& f, const AttrSet& c);

struct DirectDetermination {
  bool holds = false;
  AttrSet shared_closure;
  /// Derivation of x under the interior pairs alone; its final stage is the
  /// evidence when holds is true.
  Trace trace;
};

/// Whether y is reachable from x using only pairs that stay strictly inside
/// the shared closed set. Requires closure(x) == closure(y)
/// (kUnequalClosures). The verdict does not depend on which cover of the
/// same closure is supplied.
DirectDetermination directly_determines(const FdFunction& cover, const AttrSet& x,
                                        const AttrSet& y);

/// Given closure(y) == c and a non-empty top at c, returns a pair (Z, c) of
/// the cover such that y directly determines Z. Resolution order: a top pair
/// whose left side is inside y; any top pair when y directly determines c;
/// otherwise the top pairs applicable at the first stage of y's derivation
/// that covers one. Ties resolve canonically.
/// Throws kClosureMismatch, kEmptyTop.
FdPair dd_target(const FdFunction& cover, const AttrSet& y, const AttrSet& c);

/// Replaces `out` by `in` in a nonredundant cover. Requires equal right
/// sides (kPairMismatch), membership of `out` (kPairMismatch), and that
/// out.left directly determines in.left (kNoDirectDetermination). The result
/// is a cover of the same closure with the same pair count.
FdFunction exchange(const FdFunction& basis, const FdPair& out, const FdPair& in);

/// The direct-determination matching between two nonredundant covers of the
/// same closure: each pair of `a` is matched with the unique pair of `b`
/// over the same closed set that it directly determines. Total, injective
/// and self-inverse. Throws kNotNonredundantCover.
std::vector<std::pair<FdPair, FdPair>> dd_bijection(const FdFunction& a,
                                                    const FdFunction& b);

/// All nonredundant covers of a materialized closure function, found by
/// closing the pruned seed cover under single-pair exchanges (breadth-first
/// over the exchange graph). Candidate incoming pairs for a closed set are
/// the non-reflexive pairs of mu with that right side. Every discovered
/// cover is verified nonredundant before it is kept. Canonical order.
/// Throws kBadParams when mu is not materialized, kCapExceeded when the
/// universe exceeds universe_cap or more than max_bases covers are found.
std::vector<FdFunction> enumerate_bases(const FdFunction& mu,
                                        std::size_t max_bases = 1u << 20,
                                        std::size_t universe_cap = kBasisCap);

/// The closed sets at which a nonredundant cover has top pairs, canonical
/// order. Invariant across all nonredundant covers of one closure.
/// Throws kNotNonredundantCover.
std::vector<AttrSet> top_signature(const FdFunction& cover);

struct SingletonStatus {
  /// Sufficient-condition verdict: the pair is reflexive, or its left side
  /// directly determines its closure, or the left side is not a key.
  bool dependent_by_rule = false;
  bool reflexive = false;
  bool dd_to_closure = false;
  bool left_is_key = false;
  /// Ground truth, local test: the one-pair function has no removable pair.
  bool locally_irredundant = false;
  /// Ground truth, global test: member of some enumerated nonredundant
  /// cover. Absent when the universe exceeds the basis cap.
  std::optional<bool> in_some_basis;
  /// The rule claims dependence but the pair sits inside a basis.
  bool conflict = false;
};

/// Status of a single pair of mu as an element of the cover matroid. The
/// rule verdict is sufficient for dependence only; when it does not fire the
/// status is undetermined rather than independent. Throws kPairNotInMu.
SingletonStatus singleton_status(const FdFunction& mu, const FdPair& p,
                                 std::size_t basis_cap = kBasisCap);

}  // namespace fdmat

#endif  // FDMAT_MATROID_HPP_
