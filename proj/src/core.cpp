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

#include "fdmat/core.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace fdmat {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) {
  return (width + kWordBits - 1) / kWordBits;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::kEmptyName: return "EmptyName";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kDuplicateLeft: return "DuplicateLeft";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kNotSubsetOfMu: return "NotSubsetOfMu";
    case ErrorCode::kUnequalClosures: return "UnequalClosures";
    case ErrorCode::kEmptyTop: return "EmptyTop";
    case ErrorCode::kClosureMismatch: return "ClosureMismatch";
    case ErrorCode::kNoDirectDetermination: return "NoDirectDetermination";
    case ErrorCode::kPairMismatch: return "PairMismatch";
    case ErrorCode::kNotNonredundantCover: return "NotNonredundantCover";
    case ErrorCode::kPairNotInMu: return "PairNotInMu";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kMissingHeader: return "MissingHeader";
  }
  return "UnknownError";
}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

Universe Universe::make(std::vector<std::string> names) {
  Universe u;
  u.names_ = std::move(names);
  u.index_.reserve(u.names_.size());
  for (std::size_t i = 0; i < u.names_.size(); ++i) {
    if (u.names_[i].empty()) {
      raise(ErrorCode::kEmptyName, "attribute name at position " + std::to_string(i));
    }
    auto [it, inserted] = u.index_.emplace(u.names_[i], i);
    (void)it;
    if (!inserted) {
      raise(ErrorCode::kDuplicateAttribute, u.names_[i]);
    }
  }
  return u;
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) raise(ErrorCode::kUnknownAttribute, std::string(name));
  return *idx;
}

AttrSet::AttrSet(std::size_t width) : width_(width), words_(word_count(width), 0) {}

AttrSet AttrSet::full(std::size_t width) {
  AttrSet s(width);
  for (std::size_t i = 0; i + 1 < s.words_.size(); ++i) s.words_[i] = ~0ULL;
  if (!s.words_.empty()) {
    std::size_t rem = width % kWordBits;
    s.words_.back() = rem == 0 ? ~0ULL : ((1ULL << rem) - 1);
  }
  return s;
}

AttrSet AttrSet::of(std::size_t width, std::initializer_list<std::size_t> indices) {
  AttrSet s(width);
  for (std::size_t i : indices) s.set(i);
  return s;
}

AttrSet AttrSet::from_indices(std::size_t width, const std::vector<std::size_t>& indices) {
  AttrSet s(width);
  for (std::size_t i : indices) s.set(i);
  return s;
}

AttrSet AttrSet::from_mask(std::size_t width, std::uint64_t mask) {
  AttrSet s(width);
  for (std::size_t i = 0; i < width && i < kWordBits; ++i) {
    if (mask & (1ULL << i)) s.set(i);
  }
  return s;
}

bool AttrSet::test(std::size_t index) const {
  assert(index < width_);
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1ULL;
}

void AttrSet::set(std::size_t index) {
  assert(index < width_);
  words_[index / kWordBits] |= 1ULL << (index % kWordBits);
}

void AttrSet::reset(std::size_t index) {
  assert(index < width_);
  words_[index / kWordBits] &= ~(1ULL << (index % kWordBits));
}

std::size_t AttrSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool AttrSet::empty_set() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void AttrSet::check_width(const AttrSet& other) const {
  if (width_ != other.width_) {
    raise(ErrorCode::kUniverseMismatch,
          "set widths " + std::to_string(width_) + " and " + std::to_string(other.width_));
  }
}

bool AttrSet::subset_of(const AttrSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool AttrSet::proper_subset_of(const AttrSet& other) const {
  return subset_of(other) && *this != other;
}

bool AttrSet::intersects(const AttrSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

AttrSet AttrSet::union_with(const AttrSet& other) const {
  check_width(other);
  AttrSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

AttrSet AttrSet::intersect_with(const AttrSet& other) const {
  check_width(other);
  AttrSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

AttrSet AttrSet::difference(const AttrSet& other) const {
  check_width(other);
  AttrSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
  return out;
}

AttrSet AttrSet::complement() const {
  return AttrSet::full(width_).difference(*this);
}

void AttrSet::union_in_place(const AttrSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

void AttrSet::union_tracking(const AttrSet& other, std::vector<std::size_t>& added) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t gained = other.words_[i] & ~words_[i];
    if (!gained) continue;
    words_[i] |= gained;
    while (gained) {
      added.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(gained)));
      gained &= gained - 1;
    }
  }
}

std::vector<std::size_t> AttrSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(word));
      out.push_back(w * kWordBits + bit);
      word &= word - 1;
    }
  }
  return out;
}

std::uint64_t AttrSet::low_mask() const {
  return words_.empty() ? 0 : words_[0];
}

bool AttrSet::operator==(const AttrSet& other) const {
  return width_ == other.width_ && words_ == other.words_;
}

std::size_t AttrSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  h ^= width_;
  h *= 1099511628211ULL;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const AttrSet& a, const AttrSet& b) {
  std::size_t ca = a.count();
  std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal cardinality: the first differing position decides, and the set
  // containing it sorts first. For sorted position sequences this is exactly
  // lexicographic order.
  for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t lowest = diff & (~diff + 1);
      return (a.words_[i] & lowest) != 0;
    }
  }
  return false;
}

bool canonical_less(const FdPair& a, const FdPair& b) {
  if (a.left != b.left) return canonical_less(a.left, b.left);
  if (a.right != b.right) return canonical_less(a.right, b.right);
  return false;
}

FdFunction FdFunction::from_pairs(std::size_t width, const std::vector<FdPair>& pairs,
                                  bool merge) {
  FdFunction f(width);
  std::unordered_map<AttrSet, std::size_t> by_left;
  by_left.reserve(pairs.size());
  for (const FdPair& p : pairs) {
    if (p.left.width() != width || p.right.width() != width) {
      raise(ErrorCode::kUniverseMismatch, "pair width differs from function width");
    }
    auto [it, inserted] = by_left.emplace(p.left, f.pairs_.size());
    if (inserted) {
      f.pairs_.push_back(p);
    } else {
      if (!merge) {
        raise(ErrorCode::kDuplicateLeft, "duplicate left side");
      }
      f.pairs_[it->second].right.union_in_place(p.right);
    }
  }
  std::sort(f.pairs_.begin(), f.pairs_.end(),
            [](const FdPair& x, const FdPair& y) { return canonical_less(x.left, y.left); });
  return f;
}

std::optional<std::size_t> FdFunction::index_of_left(const AttrSet& left) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), left,
      [](const FdPair& p, const AttrSet& l) { return canonical_less(p.left, l); });
  if (it != pairs_.end() && it->left == left) {
    return static_cast<std::size_t>(it - pairs_.begin());
  }
  return std::nullopt;
}

std::optional<AttrSet> FdFunction::right_of(const AttrSet& left) const {
  auto idx = index_of_left(left);
  if (!idx) return std::nullopt;
  return pairs_[*idx].right;
}

bool FdFunction::contains(const FdPair& pair) const {
  auto idx = index_of_left(pair.left);
  return idx && pairs_[*idx].right == pair.right;
}

FdFunction FdFunction::insert(const FdPair& pair, bool merge) const {
  std::vector<FdPair> all = pairs_;
  all.push_back(pair);
  return from_pairs(width_, all, merge);
}

FdFunction FdFunction::without_index(std::size_t index) const {
  FdFunction f(width_);
  f.pairs_.reserve(pairs_.size() - 1);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i != index) f.pairs_.push_back(pairs_[i]);
  }
  return f;
}

FdFunction FdFunction::without(const FdPair& pair) const {
  auto idx = index_of_left(pair.left);
  if (!idx || pairs_[*idx].right != pair.right) return *this;
  return without_index(*idx);
}

bool canonical_less(const FdFunction& a, const FdFunction& b) {
  return std::lexicographical_compare(
      a.pairs().begin(), a.pairs().end(), b.pairs().begin(), b.pairs().end(),
      [](const FdPair& x, const FdPair& y) { return canonical_less(x, y); });
}

}  // namespace fdmat
