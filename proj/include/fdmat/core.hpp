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

#ifndef FDMAT_CORE_HPP_
#define FDMAT_CORE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fdmat {

// Machine-readable failure reasons. Every throwing operation documents which
// of these it can raise; the CLI maps any of them to exit code 2.
enum class ErrorCode {
  kDuplicateAttribute,
  kEmptyName,
  kUniverseMismatch,
  kDuplicateLeft,
  kCapExceeded,
  kNotClosed,
  kNotIndependent,
  kNotSubsetOfMu,
  kUnequalClosures,
  kEmptyTop,
  kClosureMismatch,
  kNoDirectDetermination,
  kPairMismatch,
  kNotNonredundantCover,
  kPairNotInMu,
  kBadParams,
  kUnknownAttribute,
  kSyntaxError,
  kMissingHeader,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

/// Named ground set. Attribute positions are assigned in declaration order
/// and never change; every other type in the library works with positions.
class Universe {
 public:
  /// Throws kEmptyName / kDuplicateAttribute.
  static Universe make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Position lookup that throws kUnknownAttribute.
  std::size_t require(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Dense bitmask over the positions of one universe. The width (universe
/// size) is part of the value; combining sets of different widths raises
/// kUniverseMismatch instead of reindexing.
class AttrSet {
 public:
  AttrSet() = default;
  explicit AttrSet(std::size_t width);

  static AttrSet empty(std::size_t width) { return AttrSet(width); }
  static AttrSet full(std::size_t width);
  static AttrSet of(std::size_t width, std::initializer_list<std::size_t> indices);
  static AttrSet from_indices(std::size_t width, const std::vector<std::size_t>& indices);
  /// Low |width| bits of `mask`; handy for exhaustive scans of small universes.
  static AttrSet from_mask(std::size_t width, std::uint64_t mask);

  std::size_t width() const { return width_; }
  bool test(std::size_t index) const;
  void set(std::size_t index);
  void reset(std::size_t index);

  std::size_t count() const;
  bool empty_set() const;

  bool subset_of(const AttrSet& other) const;
  bool proper_subset_of(const AttrSet& other) const;
  bool intersects(const AttrSet& other) const;

  AttrSet union_with(const AttrSet& other) const;
  AttrSet intersect_with(const AttrSet& other) const;
  AttrSet difference(const AttrSet& other) const;
  /// Complement within the universe.
  AttrSet complement() const;

  void union_in_place(const AttrSet& other);

  /// Unions `other` into this set, appending each newly gained index to
  /// `added`. Word-level; the workhorse of the closure kernels.
  void union_tracking(const AttrSet& other, std::vector<std::size_t>& added);

  std::vector<std::size_t> indices() const;

  /// Calls fn(index) for every member, ascending, without allocating.
  template <typename Fn>
  void for_each_index(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }
  /// Value of the low 64 bits; only valid for width <= 64.
  std::uint64_t low_mask() const;

  bool operator==(const AttrSet& other) const;
  bool operator!=(const AttrSet& other) const { return !(*this == other); }

  std::size_t hash() const;

 private:
  void check_width(const AttrSet& other) const;

  friend bool canonical_less(const AttrSet& a, const AttrSet& b);

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Total order on sets of one universe: smaller cardinality first, then by
/// the lowest position where the two sets differ (the set containing it is
/// smaller). For equal cardinalities this is lexicographic order on the
/// sorted position sequences. Every deterministic ordering in the library
/// derives from this rule.
bool canonical_less(const AttrSet& a, const AttrSet& b);

/// One dependency: left determines right.
struct FdPair {
  AttrSet left;
  AttrSet right;

  bool operator==(const FdPair& other) const {
    return left == other.left && right == other.right;
  }
  bool operator!=(const FdPair& other) const { return !(*this == other); }
};

/// Order pairs by canonical left order, ties by right. Within one
/// FdFunction lefts are unique, so there the left rule alone decides.
bool canonical_less(const FdPair& a, const FdPair& b);

/// A set of dependency pairs with at most one pair per left side, held in
/// canonical order. Values are immutable after construction; "mutators"
/// return new functions.
class FdFunction {
 public:
  FdFunction() = default;
  explicit FdFunction(std::size_t width) : width_(width) {}

  /// Builds from arbitrary pairs. With merge, pairs sharing a left side are
  /// combined by right-side union; without it they raise kDuplicateLeft.
  static FdFunction from_pairs(std::size_t width, const std::vector<FdPair>& pairs,
                               bool merge);

  std::size_t width() const { return width_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  /// Pairs in canonical order.
  const std::vector<FdPair>& pairs() const { return pairs_; }

  std::optional<std::size_t> index_of_left(const AttrSet& left) const;
  const FdPair& pair_at(std::size_t index) const { return pairs_.at(index); }
  std::optional<AttrSet> right_of(const AttrSet& left) const;
  bool contains(const FdPair& pair) const;

  /// Returns this function with `pair` inserted (see from_pairs for the
  /// duplicate-left rule).
  FdFunction insert(const FdPair& pair, bool merge) const;
  /// Returns this function without the pair at `index`.
  FdFunction without_index(std::size_t index) const;
  /// Returns this function without `pair`; unchanged if absent.
  FdFunction without(const FdPair& pair) const;

  bool operator==(const FdFunction& other) const {
    return width_ == other.width_ && pairs_ == other.pairs_;
  }
  bool operator!=(const FdFunction& other) const { return !(*this == other); }

 private:
  std::size_t width_ = 0;
  std::vector<FdPair> pairs_;
};

/// Order on whole functions: lexicographic over canonical pair sequences.
bool canonical_less(const FdFunction& a, const FdFunction& b);

/// Stage sequence of a staged closure computation. stages[0] is the query
/// set and every later stage is a strict superset of its predecessor; the
/// repeated fixed point is not recorded. fired[t] lists the pairs whose left
/// side first became applicable while producing stages[t].
struct Trace {
  std::vector<AttrSet> stages;
  std::vector<std::vector<FdPair>> fired;

  std::size_t growth_steps() const {
    return stages.empty() ? 0 : stages.size() - 1;
  }
};

}  // namespace fdmat

template <>
struct std::hash<fdmat::AttrSet> {
  std::size_t operator()(const fdmat::AttrSet& s) const { return s.hash(); }
};

#endif  // FDMAT_CORE_HPP_
