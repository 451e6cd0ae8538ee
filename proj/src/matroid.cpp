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

#include "fdmat/matroid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "fdmat/closure.hpp"
#include "fdmat/cover.hpp"

namespace fdmat {

namespace {

FdFunction interior_at(const FdFunction& f, const AttrSet& c) {
  std::vector<FdPair> pairs;
  for (const FdPair& p : f.pairs()) {
    if (p.right.proper_subset_of(c)) pairs.push_back(p);
  }
  return FdFunction::from_pairs(f.width(), pairs, /*merge=*/false);
}

// Key for visited-set bookkeeping in the exchange search; widths here are
// <= kBasisCap so single-word masks identify sets exactly.
std::vector<std::uint64_t> basis_key(const FdFunction& f) {
  std::vector<std::uint64_t> key;
  key.reserve(f.size());
  for (const FdPair& p : f.pairs()) key.push_back(p.left.low_mask());
  return key;
}

void check_canonical_cover(const FdFunction& f, const char* who) {
  for (const FdPair& p : f.pairs()) {
    if (fast_closure(f, p.left) != p.right) {
      raise(ErrorCode::kNotNonredundantCover,
            std::string(who) + ": pair right side is not the closure of its left side");
    }
  }
  if (!is_independent(f)) {
    raise(ErrorCode::kNotNonredundantCover, std::string(who) + ": has a removable pair");
  }
}

}  // namespace

RangeRestriction restrict_range(const FdFunction& f, const AttrSet& c) {
  if (f.width() != c.width()) {
    raise(ErrorCode::kUniverseMismatch, "restriction set over a different universe");
  }
  if (!is_closed(f, c)) {
    raise(ErrorCode::kNotClosed, "range restriction target is not closed");
  }
  std::vector<FdPair> body, interior, top;
  for (const FdPair& p : f.pairs()) {
    if (!p.right.subset_of(c)) continue;
    body.push_back(p);
    if (p.right == c) {
      top.push_back(p);
    } else {
      interior.push_back(p);
    }
  }
  RangeRestriction r;
  r.closed_set = c;
  r.body = FdFunction::from_pairs(f.width(), body, /*merge=*/false);
  r.interior = FdFunction::from_pairs(f.width(), interior, /*merge=*/false);
  r.top = FdFunction::from_pairs(f.width(), top, /*merge=*/false);
  return r;
}

DirectDetermination directly_determines(const FdFunction& cover, const AttrSet& x,
                                        const AttrSet& y) {
  AttrSet cx = fast_closure(cover, x);
  AttrSet cy = fast_closure(cover, y);
  if (cx != cy) {
    raise(ErrorCode::kUnequalClosures, "direct determination needs equal closures");
  }
  DirectDetermination out;
  out.shared_closure = cx;
  ClosureResult derived = extend_by_closure(interior_at(cover, cx), x);
  out.holds = y.subset_of(derived.closure);
  out.trace = std::move(derived.trace);
  return out;
}

FdPair dd_target(const FdFunction& cover, const AttrSet& y, const AttrSet& c) {
  AttrSet cy = fast_closure(cover, y);
  if (cy != c) {
    raise(ErrorCode::kClosureMismatch, "set does not close to the requested closed set");
  }
  std::vector<FdPair> top;
  for (const FdPair& p : cover.pairs()) {
    if (p.right == c) top.push_back(p);
  }
  if (top.empty()) {
    raise(ErrorCode::kEmptyTop, "cover has no pair reaching the closed set");
  }

  // Projectivity: a top pair already inside y.
  for (const FdPair& p : top) {
    if (p.left.subset_of(y)) return p;
  }
  // Direct determination of the whole closed set: any top pair works.
  AttrSet interior_closure = fast_closure(interior_at(cover, c), y);
  if (c.subset_of(interior_closure)) return top.front();
  // Otherwise walk y's derivation to the first stage that makes a top pair
  // applicable; everything up to that stage used interior pairs only.
  ClosureResult derived = extend_by_closure(cover, y);
  for (const AttrSet& stage : derived.trace.stages) {
    for (const FdPair& p : top) {
      if (p.left.subset_of(stage)) return p;
    }
  }
  throw std::logic_error("dd_target: derivation reached the closed set without a top pair");
}

FdFunction exchange(const FdFunction& basis, const FdPair& out, const FdPair& in) {
  if (!basis.contains(out)) {
    raise(ErrorCode::kPairMismatch, "outgoing pair is not in the basis");
  }
  if (out.right != in.right) {
    raise(ErrorCode::kPairMismatch, "exchange pairs have different closed sets");
  }
  if (out == in) return basis;

  DirectDetermination dd = directly_determines(basis, out.left, in.left);
  if (!dd.holds) {
    raise(ErrorCode::kNoDirectDetermination,
          "outgoing left side does not directly determine the incoming one");
  }
  if (basis.contains(in)) {
    raise(ErrorCode::kNotNonredundantCover,
          "incoming pair already present; the basis was redundant");
  }
  FdFunction result = basis.without(out).insert(in, /*merge=*/false);
  if (result.size() != basis.size() || !is_cover(result, basis)) {
    throw std::logic_error("exchange: replacement failed to preserve the cover");
  }
  return result;
}

std::vector<std::pair<FdPair, FdPair>> dd_bijection(const FdFunction& a,
                                                    const FdFunction& b) {
  if (a.width() != b.width()) {
    raise(ErrorCode::kUniverseMismatch, "covers over different universes");
  }
  check_canonical_cover(a, "dd_bijection lhs");
  check_canonical_cover(b, "dd_bijection rhs");
  if (!is_cover(a, b)) {
    raise(ErrorCode::kNotNonredundantCover, "arguments cover different closures");
  }

  auto match = [](const FdFunction& from, const FdFunction& to) {
    std::vector<std::pair<FdPair, FdPair>> out;
    for (const FdPair& pf : from.pairs()) {
      FdFunction interior = interior_at(from, pf.right);
      AttrSet reach = fast_closure(interior, pf.left);
      const FdPair* found = nullptr;
      for (const FdPair& pt : to.pairs()) {
        if (pt.right != pf.right) continue;
        if (!pt.left.subset_of(reach)) continue;
        if (found != nullptr) {
          throw std::logic_error("dd_bijection: multiple targets for one pair");
        }
        found = &pt;
      }
      if (found == nullptr) {
        throw std::logic_error("dd_bijection: no target for a pair");
      }
      out.emplace_back(pf, *found);
    }
    return out;
  };

  std::vector<std::pair<FdPair, FdPair>> forward = match(a, b);
  std::vector<std::pair<FdPair, FdPair>> backward = match(b, a);

  // Self-inverse: the reverse run must be the transposed matching.
  for (const auto& [pa, pb] : forward) {
    bool mirrored = false;
    for (const auto& [qb, qa] : backward) {
      if (qb == pb && qa == pa) {
        mirrored = true;
        break;
      }
    }
    if (!mirrored) {
      throw std::logic_error("dd_bijection: matching is not self-inverse");
    }
  }
  return forward;
}

std::vector<FdFunction> enumerate_bases(const FdFunction& mu, std::size_t max_bases,
                                        std::size_t universe_cap) {
  const std::size_t width = mu.width();
  if (width > universe_cap) {
    raise(ErrorCode::kCapExceeded, "enumerate_bases: universe size exceeds cap");
  }
  if (mu.size() != (std::size_t{1} << width)) {
    raise(ErrorCode::kBadParams, "enumerate_bases expects a materialized closure");
  }

  // Candidate incoming pairs per closed set: non-reflexive pairs with that
  // right side. Reflexive pairs are removable in every cover.
  std::vector<std::pair<AttrSet, std::vector<FdPair>>> by_closed;
  for (const FdPair& p : mu.pairs()) {
    if (p.left == p.right) continue;
    bool placed = false;
    for (auto& [c, list] : by_closed) {
      if (c == p.right) {
        list.push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) by_closed.push_back({p.right, {p}});
  }
  auto candidates_for = [&](const AttrSet& c) -> const std::vector<FdPair>* {
    for (const auto& [cc, list] : by_closed) {
      if (cc == c) return &list;
    }
    return nullptr;
  };

  FdFunction seed = nonredundant_cover(mu);
  std::set<std::vector<std::uint64_t>> visited;
  std::vector<FdFunction> found;
  std::deque<FdFunction> frontier;
  visited.insert(basis_key(seed));
  found.push_back(seed);
  frontier.push_back(std::move(seed));

  while (!frontier.empty()) {
    FdFunction basis = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const FdPair out = basis.pair_at(i);
      const std::vector<FdPair>* cands = candidates_for(out.right);
      if (cands == nullptr) continue;
      FdFunction interior = interior_at(basis, out.right);
      AttrSet reach = fast_closure(interior, out.left);
      for (const FdPair& in : *cands) {
        if (in == out || basis.contains(in)) continue;
        if (!in.left.subset_of(reach)) continue;
        FdFunction next = basis.without_index(i).insert(in, /*merge=*/false);
        auto key = basis_key(next);
        if (visited.count(key)) continue;
        visited.insert(std::move(key));
        if (!is_independent(next)) continue;  // anomalies surface in the audit
        if (found.size() + 1 > max_bases) {
          raise(ErrorCode::kCapExceeded, "enumerate_bases: more covers than the cap");
        }
        found.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const FdFunction& x, const FdFunction& y) { return canonical_less(x, y); });
  return found;
}

std::vector<AttrSet> top_signature(const FdFunction& cover) {
  check_canonical_cover(cover, "top_signature");
  std::vector<AttrSet> out;
  for (const FdPair& p : cover.pairs()) out.push_back(p.right);
  std::sort(out.begin(), out.end(),
            [](const AttrSet& a, const AttrSet& b) { return canonical_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SingletonStatus singleton_status(const FdFunction& mu, const FdPair& p,
                                 std::size_t basis_cap) {
  if (!mu.contains(p)) {
    raise(ErrorCode::kPairNotInMu, "singleton pair is not an element of mu");
  }
  SingletonStatus s;
  s.reflexive = p.left == p.right;
  s.dd_to_closure = directly_determines(mu, p.left, p.right).holds;

  s.left_is_key = true;
  for (std::size_t a : p.left.indices()) {
    AttrSet smaller = p.left;
    smaller.reset(a);
    if (fast_closure(mu, smaller) == p.right) {
      s.left_is_key = false;
      break;
    }
  }
  s.dependent_by_rule = s.reflexive || s.dd_to_closure || !s.left_is_key;

  FdFunction single = FdFunction::from_pairs(mu.width(), {p}, /*merge=*/false);
  s.locally_irredundant = is_independent(single);

  if (mu.width() <= basis_cap) {
    bool member = false;
    for (const FdFunction& basis : enumerate_bases(mu, 1u << 20, basis_cap)) {
      if (basis.contains(p)) {
        member = true;
        break;
      }
    }
    s.in_some_basis = member;
  }
  s.conflict = s.dependent_by_rule && s.in_some_basis.value_or(false);
  return s;
}

}  // namespace fdmat
