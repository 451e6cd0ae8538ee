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

#include "fdmat/audit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <memory>
#include <sstream>

#include "fdmat/closure.hpp"
#include "fdmat/cover.hpp"
#include "fdmat/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdmat::audit {

namespace {

// ---------------------------------------------------------------------------
// Deterministic generator (seed-stable across platforms).
// ---------------------------------------------------------------------------

struct SplitMix {
  std::uint64_t state;

  explicit SplitMix(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

// ---------------------------------------------------------------------------
// Naive closure, the ground truth: whole-function passes until stable.
// ---------------------------------------------------------------------------

AttrSet naive_closure(const FdFunction& f, const AttrSet& x) {
  AttrSet current = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const FdPair& p : f.pairs()) {
      if (p.left.subset_of(current) && !p.right.subset_of(current)) {
        current.union_in_place(p.right);
        changed = true;
      }
    }
  }
  return current;
}

// ---------------------------------------------------------------------------
// Exhaustive mask machinery for universes of at most 4 attributes. Attribute
// sets are 4-bit masks; subsets of the materialized closure are masks over
// its 16 pair indices, where pair i is (set i, closure of set i).
// ---------------------------------------------------------------------------

struct MaskOracle {
  std::size_t n = 0;
  std::size_t nsets = 0;
  std::array<std::uint16_t, 16> clo{};
  std::array<std::uint16_t, 16> intclo{};
  std::uint32_t all_pairs = 0;
  std::uint32_t nonreflexive = 0;
  std::vector<std::uint16_t> span_tbl;
  std::vector<char> irr_tbl;
  std::vector<char> basis_tbl;
  std::vector<std::uint32_t> bases;

  std::uint16_t close(std::uint16_t x, std::uint32_t fm) const {
    std::uint16_t current = x;
    bool changed = true;
    while (changed) {
      changed = false;
      std::uint32_t rest = fm;
      while (rest) {
        std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if ((i & ~static_cast<std::uint32_t>(current)) == 0 &&
            (clo[i] & ~current) != 0) {
          current |= clo[i];
          changed = true;
        }
      }
    }
    return current;
  }

  bool irr(std::uint32_t fm) const { return irr_tbl[fm] != 0; }

  /// Direct determination between attribute sets with equal closures.
  bool dd(std::uint16_t x, std::uint16_t y) const {
    return (y & ~intclo[x]) == 0;
  }

  bool key(std::uint16_t x) const {
    std::uint16_t rest = x;
    while (rest) {
      std::uint16_t bit = rest & (~rest + 1);
      rest = static_cast<std::uint16_t>(rest & (rest - 1));
      if (clo[x & ~bit] == clo[x]) return false;
    }
    return true;
  }

  explicit MaskOracle(const FdFunction& f) {
    n = f.width();
    assert(n <= 4);
    nsets = std::size_t{1} << n;
    all_pairs = (1u << nsets) - 1;

    // Closure table by naive passes over the instance pairs.
    std::vector<std::pair<std::uint16_t, std::uint16_t>> raw;
    raw.reserve(f.size());
    for (const FdPair& p : f.pairs()) {
      raw.emplace_back(static_cast<std::uint16_t>(p.left.low_mask()),
                       static_cast<std::uint16_t>(p.right.low_mask()));
    }
    for (std::size_t x = 0; x < nsets; ++x) {
      std::uint16_t current = static_cast<std::uint16_t>(x);
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& [l, r] : raw) {
          if ((l & ~current) == 0 && (r & ~current) != 0) {
            current |= r;
            changed = true;
          }
        }
      }
      clo[x] = current;
    }
    for (std::size_t i = 0; i < nsets; ++i) {
      if (clo[i] != i) nonreflexive |= 1u << i;
    }

    // Interior closure per set: only pairs landing strictly inside the
    // closed set of that set participate.
    for (std::size_t x = 0; x < nsets; ++x) {
      std::uint16_t c = clo[x];
      std::uint32_t ifm = 0;
      for (std::size_t i = 0; i < nsets; ++i) {
        if ((clo[i] & ~c) == 0 && clo[i] != c) ifm |= 1u << i;
      }
      intclo[x] = close(static_cast<std::uint16_t>(x), ifm);
    }

    const std::size_t nfm = std::size_t{1} << nsets;
    span_tbl.assign(nfm, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t fm = 0; fm < static_cast<std::int64_t>(nfm); ++fm) {
      std::uint16_t s = 0;
      for (std::size_t i = 0; i < nsets; ++i) {
        if (close(static_cast<std::uint16_t>(i), static_cast<std::uint32_t>(fm)) == clo[i]) {
          s |= static_cast<std::uint16_t>(1u << i);
        }
      }
      span_tbl[static_cast<std::size_t>(fm)] = s;
    }

    irr_tbl.assign(nfm, 0);
    for (std::size_t fm = 0; fm < nfm; ++fm) {
      bool ok = true;
      std::uint32_t rest = static_cast<std::uint32_t>(fm);
      while (rest) {
        std::uint32_t bit = rest & (~rest + 1);
        rest &= rest - 1;
        if (span_tbl[fm & ~bit] & bit) {
          ok = false;
          break;
        }
      }
      irr_tbl[fm] = ok ? 1 : 0;
    }

    // Nonredundant covers: every subset of the non-reflexive pairs that
    // spans everything and has no removable pair.
    basis_tbl.assign(nfm, 0);
    std::uint32_t sub = nonreflexive;
    for (;;) {
      if (span_tbl[sub] == all_pairs && irr_tbl[sub]) {
        basis_tbl[sub] = 1;
        bases.push_back(sub);
      }
      if (sub == 0) break;
      sub = (sub - 1) & nonreflexive;
    }
    std::sort(bases.begin(), bases.end());
  }
};

FdFunction function_from_mask(std::size_t width, const MaskOracle& oracle,
                              std::uint32_t fm) {
  std::vector<FdPair> pairs;
  std::uint32_t rest = fm;
  while (rest) {
    std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    pairs.push_back(FdPair{AttrSet::from_mask(width, i),
                           AttrSet::from_mask(width, oracle.clo[i])});
  }
  return FdFunction::from_pairs(width, pairs, /*merge=*/false);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public oracles
// ---------------------------------------------------------------------------

FdFunction oracle_closure_table(const FdFunction& f, std::size_t cap) {
  if (f.width() > cap) {
    raise(ErrorCode::kCapExceeded, "oracle_closure_table: universe exceeds cap");
  }
  const std::size_t width = f.width();
  const std::uint64_t total = 1ULL << width;
  std::vector<FdPair> pairs(total, FdPair{AttrSet(width), AttrSet(width)});
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
    AttrSet s = AttrSet::from_mask(width, static_cast<std::uint64_t>(mask));
    pairs[static_cast<std::size_t>(mask)] = FdPair{s, naive_closure(f, s)};
  }
  return FdFunction::from_pairs(width, pairs, /*merge=*/false);
}

std::vector<FdFunction> oracle_nonredundant_covers(const FdFunction& mu, std::size_t cap) {
  if (mu.width() > cap) {
    raise(ErrorCode::kCapExceeded, "oracle_nonredundant_covers: universe exceeds cap");
  }
  if (mu.size() != (std::size_t{1} << mu.width())) {
    raise(ErrorCode::kBadParams, "oracle_nonredundant_covers expects a materialized closure");
  }
  MaskOracle oracle(mu);
  std::vector<FdFunction> out;
  out.reserve(oracle.bases.size());
  for (std::uint32_t fm : oracle.bases) {
    out.push_back(function_from_mask(mu.width(), oracle, fm));
  }
  std::sort(out.begin(), out.end(),
            [](const FdFunction& a, const FdFunction& b) { return canonical_less(a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return names;
}

}  // namespace

Instance fd_fixture() {
  Instance inst;
  inst.kind = Instance::Kind::kFd;
  inst.id = "fixture:fd";
  inst.universe = Universe::make(letter_names(4));
  std::vector<FdPair> raw = {
      {AttrSet::of(4, {0}), AttrSet::of(4, {1})},
      {AttrSet::of(4, {1}), AttrSet::of(4, {0})},
      {AttrSet::of(4, {0, 2}), AttrSet::of(4, {3})},
  };
  inst.fd = canonicalize(4, raw);
  return inst;
}

Instance facet_fixture() {
  Instance inst;
  inst.kind = Instance::Kind::kHereditary;
  inst.id = "fixture:facets";
  inst.universe = Universe::make(letter_names(3));
  inst.h = HereditaryCollection::from_facets(
      3, {AttrSet::of(3, {0, 1}), AttrSet::of(3, {2})});
  return inst;
}

Instance uniform_fixture(std::size_t n, std::size_t rank) {
  Instance inst;
  inst.kind = Instance::Kind::kHereditary;
  inst.id = "fixture:uniform-" + std::to_string(rank) + "-" + std::to_string(n);
  inst.universe = Universe::make(letter_names(n));
  inst.h = HereditaryCollection::uniform(n, rank);
  return inst;
}

Instance random_instance(std::uint64_t seed, const RandomParams& params) {
  if (params.universe_size == 0 || params.universe_size > 8) {
    raise(ErrorCode::kBadParams, "random_instance universe_size must be in 1..8");
  }
  const std::size_t n = params.universe_size;
  const std::uint64_t nsets = 1ULL << n;
  SplitMix rng(seed * 0x9E3779B97F4A7C15ULL + n * 1315423911ULL +
               (params.kind == Instance::Kind::kFd ? 0 : 0x5851F42D4C957F2DULL));

  Instance inst;
  inst.kind = params.kind;
  inst.universe = Universe::make(letter_names(n));

  if (params.kind == Instance::Kind::kFd) {
    inst.id = "fd:s" + std::to_string(seed) + ":n" + std::to_string(n) + ":p" +
              std::to_string(params.max_pairs);
    std::size_t npairs = 1 + static_cast<std::size_t>(rng.below(params.max_pairs));
    std::vector<FdPair> raw;
    raw.reserve(npairs);
    for (std::size_t i = 0; i < npairs; ++i) {
      raw.push_back(FdPair{AttrSet::from_mask(n, rng.below(nsets)),
                           AttrSet::from_mask(n, rng.below(nsets))});
    }
    inst.fd = canonicalize(n, raw);
  } else {
    inst.id = "her:s" + std::to_string(seed) + ":n" + std::to_string(n) + ":f" +
              std::to_string(params.max_pairs);
    std::vector<AttrSet> facets;
    for (std::size_t i = 0; i < params.max_pairs; ++i) {
      facets.push_back(AttrSet::from_mask(n, rng.below(nsets)));
    }
    inst.h = HereditaryCollection::from_facets(n, facets);
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Claim checkers
// ---------------------------------------------------------------------------

namespace {

struct Outcome {
  ClaimStatus status = ClaimStatus::kPass;
  std::vector<std::pair<std::string, std::string>> detail;
};

Outcome capped() { return Outcome{ClaimStatus::kCapped, {}}; }

Outcome failed(std::vector<std::pair<std::string, std::string>> detail) {
  return Outcome{ClaimStatus::kFail, std::move(detail)};
}

/// Per-instance scratch shared by the checkers; the expensive tables are
/// built on first use.
struct Context {
  const Instance& inst;

  explicit Context(const Instance& instance) : inst(instance) {}

  const FdFunction& table() {
    if (!table_) table_ = oracle_closure_table(inst.fd, 10);
    return *table_;
  }
  const MaskOracle& mask() {
    if (!mask_) mask_ = std::make_unique<MaskOracle>(inst.fd);
    return *mask_;
  }

  // Hereditary scratch: member deltas and both flat closures for all sets.
  struct Flats {
    std::vector<AttrSet> deltas;        // aligned with h.members()
    std::vector<AttrSet> topdown;       // indexed by set mask
    std::vector<AttrSet> bottomup;      // indexed by set mask
  };
  const Flats& flats() {
    if (!flats_) {
      const HereditaryCollection& h = inst.h;
      const std::size_t width = h.width();
      auto f = std::make_unique<Flats>();
      f->deltas.reserve(h.size());
      for (const AttrSet& m : h.members()) f->deltas.push_back(delta(h, m));
      const std::uint64_t total = 1ULL << width;
      f->topdown.resize(total, AttrSet(width));
      f->bottomup.resize(total, AttrSet(width));
      FdFunction dep = dependence_function(h);
      for (std::uint64_t m = 0; m < total; ++m) {
        AttrSet x = AttrSet::from_mask(width, m);
        AttrSet acc = AttrSet::full(width);
        bool any = false;
        for (const AttrSet& image : f->deltas) {
          if (x.subset_of(image)) {
            acc = acc.intersect_with(image);
            any = true;
          }
        }
        f->topdown[m] = any ? acc : AttrSet::full(width);
        f->bottomup[m] = extend_by_closure(dep, x).closure;
      }
      flats_ = std::move(f);
    }
    return *flats_;
  }

  std::string set_text(const AttrSet& s) const { return io::format_set(inst.universe, s); }
  std::string pair_text(const FdPair& p) const { return io::format_pair(inst.universe, p); }
  std::string pair_text(std::uint32_t left_mask) {
    const MaskOracle& o = mask();
    FdPair p{AttrSet::from_mask(o.n, left_mask), AttrSet::from_mask(o.n, o.clo[left_mask])};
    return pair_text(p);
  }
  std::string function_text(std::uint32_t fm) {
    std::string out;
    std::uint32_t rest = fm;
    while (rest) {
      std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      if (!out.empty()) out += " ; ";
      out += pair_text(i);
    }
    return out.empty() ? "(empty)" : out;
  }

 private:
  std::optional<FdFunction> table_;
  std::unique_ptr<MaskOracle> mask_;
  std::unique_ptr<Flats> flats_;
};

// --- dependency-instance checkers -----------------------------------------

Outcome check_ec2(Context& ctx) {
  if (ctx.inst.fd.width() > 10) return capped();
  const FdFunction& table = ctx.table();
  const std::size_t width = ctx.inst.fd.width();
  const std::uint64_t total = 1ULL << width;
  auto at = [&](std::uint64_t m) { return table.pair_at(table.index_of_left(
      AttrSet::from_mask(width, m)).value()).right; };
  std::vector<AttrSet> clo(total, AttrSet(width));
  for (std::uint64_t m = 0; m < total; ++m) clo[m] = at(m);

  for (std::uint64_t m = 0; m < total; ++m) {
    AttrSet x = AttrSet::from_mask(width, m);
    if (!x.subset_of(clo[m])) {
      return failed({{"law", "inclusion"}, {"set", ctx.set_text(x)}});
    }
    for (std::size_t q = 0; q < width; ++q) {
      if (x.test(q)) continue;
      if (!clo[m].subset_of(clo[m | (1ULL << q)])) {
        return failed({{"law", "monotonicity"},
                       {"set", ctx.set_text(x)},
                       {"point", ctx.inst.universe.name(q)}});
      }
    }
    if (clo[clo[m].low_mask()] != clo[m]) {
      return failed({{"law", "idempotence"}, {"set", ctx.set_text(x)}});
    }
  }
  return {};
}

Outcome check_co6(Context& ctx) {
  if (ctx.inst.fd.width() > 10) return capped();
  const FdFunction& table = ctx.table();
  const std::size_t width = ctx.inst.fd.width();
  const std::uint64_t total = 1ULL << width;
  std::vector<AttrSet> clo(total, AttrSet(width));
  for (const FdPair& p : table.pairs()) clo[p.left.low_mask()] = p.right;

  auto is_key = [&](std::uint64_t m) {
    for (std::size_t a = 0; a < width; ++a) {
      if (!(m & (1ULL << a))) continue;
      if (clo[m & ~(1ULL << a)] == clo[m]) return false;
    }
    return true;
  };
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!is_key(m)) continue;
    for (std::size_t a = 0; a < width; ++a) {
      if (!(m & (1ULL << a))) continue;
      if (!is_key(m & ~(1ULL << a))) {
        return failed({{"key", ctx.set_text(AttrSet::from_mask(width, m))},
                       {"removed", ctx.inst.universe.name(a)}});
      }
    }
  }
  return {};
}

Outcome check_co7(Context& ctx) {
  if (ctx.inst.fd.width() > 10) return capped();
  const FdFunction& table = ctx.table();
  const std::size_t width = ctx.inst.fd.width();
  const std::uint64_t total = 1ULL << width;
  std::vector<AttrSet> clo(total, AttrSet(width));
  for (const FdPair& p : table.pairs()) clo[p.left.low_mask()] = p.right;

  for (std::uint64_t m = 0; m < total; ++m) {
    AttrSet c = AttrSet::from_mask(width, m);
    bool closed = clo[m] == c;
    bool grows_everywhere = true;
    for (std::size_t p = 0; p < width; ++p) {
      if (c.test(p)) continue;
      const AttrSet& grown = clo[m | (1ULL << p)];
      if (!clo[m].proper_subset_of(grown)) {
        grows_everywhere = false;
        break;
      }
    }
    if (closed != grows_everywhere) {
      return failed({{"set", ctx.set_text(c)},
                     {"closed", closed ? "yes" : "no"},
                     {"grows-at-every-point", grows_everywhere ? "yes" : "no"}});
    }
  }
  return {};
}

Outcome check_co8(Context& ctx) {
  if (ctx.inst.fd.width() > 10) return capped();
  const FdFunction& table = ctx.table();
  const std::size_t width = ctx.inst.fd.width();
  const std::uint64_t total = 1ULL << width;
  std::vector<AttrSet> clo(total, AttrSet(width));
  for (const FdPair& p : table.pairs()) clo[p.left.low_mask()] = p.right;

  AttrSet nonkeys(width);
  for (std::size_t p = 0; p < width; ++p) {
    // {p} fails to be a key exactly when the empty set already reaches it.
    if (clo[1ULL << p] == clo[0]) nonkeys.set(p);
  }
  if (clo[0] != nonkeys) {
    return failed({{"empty-closure", ctx.set_text(clo[0])},
                   {"non-key-points", ctx.set_text(nonkeys)}});
  }
  return {};
}

Outcome check_ec3(Context& ctx) {
  if (ctx.inst.fd.width() > 10) return capped();
  const FdFunction& table = ctx.table();
  const std::size_t width = ctx.inst.fd.width();
  const std::uint64_t total = 1ULL << width;
  std::vector<AttrSet> clo(total, AttrSet(width));
  for (const FdPair& p : table.pairs()) clo[p.left.low_mask()] = p.right;

  std::vector<FdPair> restriction;
  for (std::uint64_t m = 0; m < total; ++m) {
    bool key = true;
    for (std::size_t a = 0; a < width; ++a) {
      if ((m & (1ULL << a)) && clo[m & ~(1ULL << a)] == clo[m]) {
        key = false;
        break;
      }
    }
    if (key) restriction.push_back(FdPair{AttrSet::from_mask(width, m), clo[m]});
  }
  FdFunction restricted = FdFunction::from_pairs(width, restriction, /*merge=*/false);
  for (std::uint64_t m = 0; m < total; ++m) {
    AttrSet x = AttrSet::from_mask(width, m);
    if (naive_closure(restricted, x) != clo[m]) {
      return failed({{"set", ctx.set_text(x)},
                     {"restricted-closure", ctx.set_text(naive_closure(restricted, x))},
                     {"closure", ctx.set_text(clo[m])}});
    }
  }
  return {};
}

Outcome check_ec7_monotonicity(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  const std::size_t nfm = std::size_t{1} << o.nsets;
  for (std::size_t fm = 0; fm < nfm; ++fm) {
    if (!o.irr_tbl[fm]) continue;
    std::uint32_t rest = static_cast<std::uint32_t>(fm);
    while (rest) {
      std::uint32_t bit = rest & (~rest + 1);
      rest &= rest - 1;
      if (!o.irr_tbl[fm & ~bit]) {
        return failed({{"independent", ctx.function_text(static_cast<std::uint32_t>(fm))},
                       {"dependent-subset", ctx.function_text(static_cast<std::uint32_t>(fm) & ~bit)}});
      }
    }
  }
  return {};
}

Outcome check_ec8_spanlaws(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  const std::size_t nfm = std::size_t{1} << o.nsets;
  for (std::size_t fm = 0; fm < nfm; ++fm) {
    std::uint16_t s = o.span_tbl[fm];
    if (fm & ~static_cast<std::size_t>(s)) {
      return failed({{"law", "inclusion"},
                     {"function", ctx.function_text(static_cast<std::uint32_t>(fm))}});
    }
    if (o.span_tbl[s] != s) {
      return failed({{"law", "idempotence"},
                     {"function", ctx.function_text(static_cast<std::uint32_t>(fm))}});
    }
    for (std::size_t j = 0; j < o.nsets; ++j) {
      if (fm & (1ULL << j)) continue;
      if (s & ~o.span_tbl[fm | (1ULL << j)]) {
        return failed({{"law", "monotonicity"},
                       {"function", ctx.function_text(static_cast<std::uint32_t>(fm))},
                       {"added-pair", ctx.pair_text(static_cast<std::uint32_t>(j))}});
      }
    }
  }
  return {};
}

Outcome check_ec8_keys(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  const std::size_t nfm = std::size_t{1} << o.nsets;
  for (std::size_t fm = 0; fm < nfm; ++fm) {
    bool minimal_span = true;
    std::uint32_t rest = static_cast<std::uint32_t>(fm);
    while (rest) {
      std::uint32_t bit = rest & (~rest + 1);
      rest &= rest - 1;
      if (o.span_tbl[fm & ~bit] == o.span_tbl[fm]) {
        minimal_span = false;
        break;
      }
    }
    if (minimal_span != (o.irr_tbl[fm] != 0)) {
      return failed({{"function", ctx.function_text(static_cast<std::uint32_t>(fm))},
                     {"minimal-span", minimal_span ? "yes" : "no"},
                     {"locally-irredundant", o.irr_tbl[fm] ? "yes" : "no"}});
    }
  }
  return {};
}

// Sample of covers used by the restriction checkers: the whole closure, each
// basis, and one deliberately redundant cover.
std::vector<std::uint32_t> sample_covers(const MaskOracle& o) {
  std::vector<std::uint32_t> covers;
  covers.push_back(o.all_pairs);
  for (std::size_t i = 0; i < o.bases.size() && i < 8; ++i) covers.push_back(o.bases[i]);
  if (!o.bases.empty()) {
    covers.push_back(o.bases.front() | (o.all_pairs & ~o.nonreflexive));
  }
  return covers;
}

Outcome check_mat2(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  for (std::uint32_t cover : sample_covers(o)) {
    for (std::size_t c = 0; c < o.nsets; ++c) {
      if (o.clo[c] != c) continue;
      std::uint32_t body = 0, interior = 0;
      for (std::size_t i = 0; i < o.nsets; ++i) {
        if (!(cover & (1u << i))) continue;
        if ((o.clo[i] & ~c) == 0) {
          body |= 1u << i;
          if (o.clo[i] != c) interior |= 1u << i;
        }
      }
      std::uint16_t x = static_cast<std::uint16_t>(c);
      for (std::uint16_t sub = x;; sub = static_cast<std::uint16_t>((sub - 1) & x)) {
        if (o.close(sub, body) != o.clo[sub]) {
          return failed({{"part", "body-regenerates"},
                         {"cover", ctx.function_text(cover)},
                         {"closed-set", ctx.set_text(AttrSet::from_mask(o.n, c))},
                         {"set", ctx.set_text(AttrSet::from_mask(o.n, sub))}});
        }
        if (o.close(sub, interior) & ~o.clo[sub]) {
          return failed({{"part", "interior-stays-inside"},
                         {"cover", ctx.function_text(cover)},
                         {"closed-set", ctx.set_text(AttrSet::from_mask(o.n, c))},
                         {"set", ctx.set_text(AttrSet::from_mask(o.n, sub))}});
        }
        if (sub == 0) break;
      }
    }
  }
  return {};
}

std::uint16_t signature_of(const MaskOracle& o, std::uint32_t fm) {
  std::uint16_t sig = 0;
  std::uint32_t rest = fm;
  while (rest) {
    std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    sig |= static_cast<std::uint16_t>(1u << o.clo[i]);
  }
  return sig;
}

Outcome check_mat4(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  if (o.bases.empty()) return {};
  std::uint16_t sig = signature_of(o, o.bases.front());
  for (std::uint32_t b : o.bases) {
    if (signature_of(o, b) != sig) {
      return failed({{"basis-a", ctx.function_text(o.bases.front())},
                     {"basis-b", ctx.function_text(b)}});
    }
  }
  return {};
}

Outcome check_mat6(Context& ctx) {
  if (ctx.inst.fd.width() > 8) return capped();
  const FdFunction& table = ctx.table();
  const std::size_t width = ctx.inst.fd.width();
  const std::uint64_t total = 1ULL << width;
  std::vector<AttrSet> clo(total, AttrSet(width));
  for (const FdPair& p : table.pairs()) clo[p.left.low_mask()] = p.right;

  // Interior closure for every set, grouped by shared closed set.
  std::vector<AttrSet> ic(total, AttrSet(width));
  for (std::uint64_t c = 0; c < total; ++c) {
    if (clo[c].low_mask() != c) continue;
    AttrSet closed = AttrSet::from_mask(width, c);
    std::vector<FdPair> interior;
    for (const FdPair& p : table.pairs()) {
      if (p.right.proper_subset_of(closed)) interior.push_back(p);
    }
    FdFunction ifn = FdFunction::from_pairs(width, interior, /*merge=*/false);
    for (std::uint64_t m = 0; m < total; ++m) {
      if (clo[m].low_mask() == c) {
        ic[m] = naive_closure(ifn, AttrSet::from_mask(width, m));
      }
    }
  }

  for (std::uint64_t m = 0; m < total; ++m) {
    AttrSet x = AttrSet::from_mask(width, m);
    if (!x.subset_of(ic[m])) {
      return failed({{"property", "reflexivity"}, {"set", ctx.set_text(x)}});
    }
    // Projectivity over all subsets with the same closure.
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      if (clo[sub] == clo[m] && !AttrSet::from_mask(width, sub).subset_of(ic[m])) {
        return failed({{"property", "projectivity"},
                       {"set", ctx.set_text(x)},
                       {"subset", ctx.set_text(AttrSet::from_mask(width, sub))}});
      }
      if (sub == 0) break;
    }
  }

  // Transitivity within each closure class; exhaustive when small, seeded
  // sampling otherwise.
  for (std::uint64_t c = 0; c < total; ++c) {
    if (clo[c].low_mask() != c) continue;
    std::vector<std::uint64_t> members;
    for (std::uint64_t m = 0; m < total; ++m) {
      if (clo[m].low_mask() == c) members.push_back(m);
    }
    auto dd = [&](std::uint64_t x, std::uint64_t y) {
      return AttrSet::from_mask(width, y).subset_of(ic[x]);
    };
    auto violation = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
      return dd(x, y) && dd(y, z) && !dd(x, z);
    };
    const std::size_t k = members.size();
    if (k * k * k <= (1u << 22)) {
      for (std::uint64_t x : members)
        for (std::uint64_t y : members)
          for (std::uint64_t z : members)
            if (violation(x, y, z)) {
              return failed({{"property", "transitivity"},
                             {"x", ctx.set_text(AttrSet::from_mask(width, x))},
                             {"y", ctx.set_text(AttrSet::from_mask(width, y))},
                             {"z", ctx.set_text(AttrSet::from_mask(width, z))}});
            }
    } else {
      SplitMix rng(0x6D1770 + c);
      for (int t = 0; t < 8192; ++t) {
        std::uint64_t x = members[rng.below(k)];
        std::uint64_t y = members[rng.below(k)];
        std::uint64_t z = members[rng.below(k)];
        if (violation(x, y, z)) {
          return failed({{"property", "transitivity"},
                         {"x", ctx.set_text(AttrSet::from_mask(width, x))},
                         {"y", ctx.set_text(AttrSet::from_mask(width, y))},
                         {"z", ctx.set_text(AttrSet::from_mask(width, z))}});
        }
      }
    }
  }
  return {};
}

Outcome check_mat7(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  std::vector<std::uint32_t> covers = sample_covers(o);
  for (std::size_t c = 0; c < o.nsets; ++c) {
    if (o.clo[c] != c) continue;
    auto interior_of = [&](std::uint32_t cover) {
      std::uint32_t ifm = 0;
      for (std::size_t i = 0; i < o.nsets; ++i) {
        if ((cover & (1u << i)) && (o.clo[i] & ~c) == 0 && o.clo[i] != c) ifm |= 1u << i;
      }
      return ifm;
    };
    std::uint32_t reference = interior_of(o.all_pairs);
    for (std::uint32_t cover : covers) {
      std::uint32_t ifm = interior_of(cover);
      std::uint16_t x = static_cast<std::uint16_t>(c);
      for (std::uint16_t sub = x;; sub = static_cast<std::uint16_t>((sub - 1) & x)) {
        if (o.close(sub, ifm) != o.close(sub, reference)) {
          return failed({{"cover", ctx.function_text(cover)},
                         {"closed-set", ctx.set_text(AttrSet::from_mask(o.n, c))},
                         {"set", ctx.set_text(AttrSet::from_mask(o.n, sub))}});
        }
        if (sub == 0) break;
      }
    }
  }
  return {};
}

Outcome check_mat9(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  for (std::uint32_t basis : o.bases) {
    // No two distinct same-closure pairs of a nonredundant cover determine
    // each other directly.
    std::uint32_t rest = basis;
    while (rest) {
      std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      std::uint32_t rest2 = basis;
      while (rest2) {
        std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(rest2));
        rest2 &= rest2 - 1;
        if (i == j || o.clo[i] != o.clo[j]) continue;
        if (o.dd(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j))) {
          return failed({{"part", "dd-inside-cover"},
                         {"basis", ctx.function_text(basis)},
                         {"from", ctx.pair_text(i)},
                         {"to", ctx.pair_text(j)}});
        }
      }
      // Substituting any directly determined same-closure pair keeps the
      // cover property.
      for (std::size_t j = 0; j < o.nsets; ++j) {
        if (j == i || o.clo[j] != o.clo[i]) continue;
        if (!o.dd(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j))) continue;
        std::uint32_t exchanged = (basis & ~(1u << i)) | (1u << j);
        if (o.span_tbl[exchanged] != o.all_pairs) {
          return failed({{"part", "exchange-preserves-cover"},
                         {"basis", ctx.function_text(basis)},
                         {"out", ctx.pair_text(i)},
                         {"in", ctx.pair_text(static_cast<std::uint32_t>(j))}});
        }
      }
    }
  }
  return {};
}

Outcome check_mat10(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  auto match_unique = [&](std::uint32_t from, std::uint32_t to, std::uint32_t i,
                          std::uint32_t* out_j) {
    (void)from;
    int hits = 0;
    std::uint32_t rest = to;
    while (rest) {
      std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      if (o.clo[j] != o.clo[i]) continue;
      if (o.dd(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j))) {
        ++hits;
        *out_j = j;
      }
    }
    return hits;
  };

  for (std::uint32_t a : o.bases) {
    for (std::uint32_t b : o.bases) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> forward;
      std::uint32_t seen = 0;
      std::uint32_t rest = a;
      bool ok = true;
      while (rest) {
        std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        std::uint32_t j = 0;
        int hits = match_unique(a, b, i, &j);
        if (hits != 1) {
          return failed({{"part", hits == 0 ? "not-total" : "not-unique"},
                         {"basis-a", ctx.function_text(a)},
                         {"basis-b", ctx.function_text(b)},
                         {"pair", ctx.pair_text(i)}});
        }
        if (seen & (1u << j)) ok = false;
        seen |= 1u << j;
        forward.emplace_back(i, j);
      }
      if (!ok) {
        return failed({{"part", "not-injective"},
                       {"basis-a", ctx.function_text(a)},
                       {"basis-b", ctx.function_text(b)}});
      }
      for (auto [i, j] : forward) {
        std::uint32_t back = 0;
        int hits = match_unique(b, a, j, &back);
        if (hits != 1 || back != i) {
          return failed({{"part", "not-self-inverse"},
                         {"basis-a", ctx.function_text(a)},
                         {"basis-b", ctx.function_text(b)},
                         {"pair", ctx.pair_text(i)}});
        }
      }
    }
  }
  return {};
}

Outcome check_mat11_cardinality(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  if (o.bases.empty()) return {};
  int size = std::popcount(o.bases.front());
  for (std::uint32_t b : o.bases) {
    if (std::popcount(b) != size) {
      return failed({{"basis-a", ctx.function_text(o.bases.front())},
                     {"basis-b", ctx.function_text(b)}});
    }
  }
  return {};
}

Outcome check_mat11_exchange(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  for (std::uint32_t a : o.bases) {
    for (std::uint32_t b : o.bases) {
      if (a == b) continue;
      std::uint32_t only_a = a & ~b;
      std::uint32_t rest = only_a;
      while (rest) {
        std::uint32_t x = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        bool found = false;
        std::uint32_t cand = b & ~a;
        while (cand) {
          std::uint32_t y = static_cast<std::uint32_t>(std::countr_zero(cand));
          cand &= cand - 1;
          if (o.basis_tbl[(a & ~(1u << x)) | (1u << y)]) {
            found = true;
            break;
          }
        }
        if (!found) {
          return failed({{"basis-a", ctx.function_text(a)},
                         {"basis-b", ctx.function_text(b)},
                         {"out", ctx.pair_text(x)}});
        }
      }
    }
  }
  return {};
}

Outcome check_mat11_augmentation(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  std::vector<std::vector<std::uint32_t>> by_size(o.nsets + 1);
  std::uint32_t sub = o.nonreflexive;
  for (;;) {
    if (o.irr_tbl[sub]) by_size[std::popcount(sub)].push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & o.nonreflexive;
  }
  for (std::size_t k = 0; k + 1 < by_size.size(); ++k) {
    for (std::uint32_t f : by_size[k]) {
      for (std::uint32_t g : by_size[k + 1]) {
        bool found = false;
        std::uint32_t cand = g & ~f;
        while (cand) {
          std::uint32_t j = cand & (~cand + 1);
          cand &= cand - 1;
          if (o.irr_tbl[f | j]) {
            found = true;
            break;
          }
        }
        if (!found) {
          return failed({{"smaller", ctx.function_text(f)},
                         {"larger", ctx.function_text(g)}});
        }
      }
    }
  }
  return {};
}

Outcome check_mat12(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  for (std::size_t i = 0; i < o.nsets; ++i) {
    bool reflexive = o.clo[i] == i;
    bool dd_closure = (o.clo[i] & ~o.intclo[i]) == 0;
    bool is_key = o.key(static_cast<std::uint16_t>(i));
    bool rule_dependent = reflexive || dd_closure || !is_key;
    if (!rule_dependent) continue;
    for (std::uint32_t b : o.bases) {
      if (b & (1u << i)) {
        return failed({{"pair", ctx.pair_text(static_cast<std::uint32_t>(i))},
                       {"reflexive", reflexive ? "yes" : "no"},
                       {"dd-to-closure", dd_closure ? "yes" : "no"},
                       {"left-is-key", is_key ? "yes" : "no"},
                       {"containing-basis", ctx.function_text(b)}});
      }
    }
  }
  return {};
}

Outcome check_ec6_equivalence(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();
  std::uint32_t sub = o.nonreflexive;
  for (;;) {
    if (o.irr_tbl[sub]) {
      bool inside = false;
      for (std::uint32_t b : o.bases) {
        if ((sub & ~b) == 0) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        return failed({{"independent", ctx.function_text(sub)}});
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & o.nonreflexive;
  }
  return {};
}

Outcome check_fl7(Context& ctx) {
  if (ctx.inst.fd.width() > 4) return capped();
  const MaskOracle& o = ctx.mask();

  // The hereditary family here lives over the pairs of the closure: its
  // members are the locally irredundant functions. Distinct dependence
  // images only.
  std::vector<std::uint32_t> images;
  std::uint32_t sub = o.nonreflexive;
  for (;;) {
    if (o.irr_tbl[sub]) {
      std::uint32_t image = sub;
      for (std::size_t j = 0; j < o.nsets; ++j) {
        if (sub & (1u << j)) continue;
        if (!o.irr_tbl[sub | (1u << j)]) image |= 1u << j;
      }
      images.push_back(image);
    }
    if (sub == 0) break;
    sub = (sub - 1) & o.nonreflexive;
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  const std::size_t nfm = std::size_t{1} << o.nsets;
  for (std::size_t fm = 0; fm < nfm; ++fm) {
    std::uint32_t kappa = o.all_pairs;
    bool any = false;
    for (std::uint32_t image : images) {
      if ((fm & ~image) == 0) {
        kappa &= image;
        any = true;
      }
    }
    if (!any) kappa = o.all_pairs;
    if (kappa != o.span_tbl[fm]) {
      return failed({{"function", ctx.function_text(static_cast<std::uint32_t>(fm))},
                     {"flat-closure", ctx.function_text(kappa)},
                     {"span", ctx.function_text(o.span_tbl[fm])}});
    }
  }
  return {};
}

// --- hereditary-instance checkers ------------------------------------------

Outcome check_fl4_closurelaws(Context& ctx) {
  if (ctx.inst.h.width() > 8) return capped();
  const auto& fl = ctx.flats();
  const std::size_t width = ctx.inst.h.width();
  const std::uint64_t total = 1ULL << width;
  for (std::uint64_t m = 0; m < total; ++m) {
    AttrSet x = AttrSet::from_mask(width, m);
    const AttrSet& k = fl.topdown[m];
    if (!x.subset_of(k)) {
      return failed({{"law", "inclusion"}, {"set", ctx.set_text(x)}});
    }
    for (std::size_t q = 0; q < width; ++q) {
      if (x.test(q)) continue;
      if (!k.subset_of(fl.topdown[m | (1ULL << q)])) {
        return failed({{"law", "monotonicity"},
                       {"set", ctx.set_text(x)},
                       {"point", ctx.inst.universe.name(q)}});
      }
    }
    if (fl.topdown[k.low_mask()] != k) {
      return failed({{"law", "idempotence"}, {"set", ctx.set_text(x)}});
    }
  }
  return {};
}

Outcome check_fl4_h_subset_of_keys(Context& ctx) {
  if (ctx.inst.h.width() > 8) return capped();
  const auto& fl = ctx.flats();
  const auto& members = ctx.inst.h.members();
  for (const AttrSet& m : members) {
    for (std::size_t p : m.indices()) {
      AttrSet smaller = m;
      smaller.reset(p);
      if (fl.topdown[smaller.low_mask()] == fl.topdown[m.low_mask()]) {
        return failed({{"member", ctx.set_text(m)},
                       {"removed", ctx.inst.universe.name(p)}});
      }
    }
  }
  return {};
}

Outcome check_fl3_note_a(Context& ctx) {
  if (ctx.inst.h.width() > 8) return capped();
  const auto& fl = ctx.flats();
  const auto& members = ctx.inst.h.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (fl.deltas[i] != fl.topdown[members[i].low_mask()]) {
      return failed({{"member", ctx.set_text(members[i])},
                     {"dependence-image", ctx.set_text(fl.deltas[i])},
                     {"flat-closure", ctx.set_text(fl.topdown[members[i].low_mask()])}});
    }
  }
  return {};
}

Outcome check_fl4_keyset_equality(Context& ctx) {
  if (ctx.inst.h.width() > 8) return capped();
  const auto& fl = ctx.flats();
  const std::size_t width = ctx.inst.h.width();
  const std::uint64_t total = 1ULL << width;
  for (std::uint64_t m = 0; m < total; ++m) {
    AttrSet x = AttrSet::from_mask(width, m);
    bool minimal = true;
    for (std::size_t p : x.indices()) {
      AttrSet smaller = x;
      smaller.reset(p);
      if (fl.topdown[smaller.low_mask()] == fl.topdown[m]) {
        minimal = false;
        break;
      }
    }
    bool member = ctx.inst.h.contains(x);
    if (minimal != member) {
      return failed({{"set", ctx.set_text(x)},
                     {"key-of-flat-closure", minimal ? "yes" : "no"},
                     {"member", member ? "yes" : "no"}});
    }
  }
  return {};
}

Outcome check_fl5(Context& ctx) {
  if (ctx.inst.h.width() > 8) return capped();
  const auto& fl = ctx.flats();
  const auto& members = ctx.inst.h.members();
  const std::size_t width = ctx.inst.h.width();
  const std::uint64_t total = 1ULL << width;
  for (std::uint64_t m = 0; m < total; ++m) {
    AttrSet x = AttrSet::from_mask(width, m);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const AttrSet& ind = members[i];
      if (!ind.subset_of(x)) continue;
      // Maximal inside x: no point of x extends it within the collection.
      bool maximal = true;
      for (std::size_t p : x.difference(ind).indices()) {
        AttrSet bigger = ind;
        bigger.set(p);
        if (ctx.inst.h.contains(bigger)) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      if (fl.topdown[m] != fl.deltas[i]) {
        return failed({{"set", ctx.set_text(x)},
                       {"maximal-independent", ctx.set_text(ind)},
                       {"flat-closure", ctx.set_text(fl.topdown[m])},
                       {"dependence-image", ctx.set_text(fl.deltas[i])}});
      }
    }
  }
  return {};
}

Outcome check_fl6(Context& ctx) {
  if (ctx.inst.h.width() > 8) return capped();
  const auto& fl = ctx.flats();
  const std::size_t width = ctx.inst.h.width();
  const std::uint64_t total = 1ULL << width;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (fl.topdown[m] != fl.bottomup[m]) {
      return failed({{"set", ctx.set_text(AttrSet::from_mask(width, m))},
                     {"top-down", ctx.set_text(fl.topdown[m])},
                     {"bottom-up", ctx.set_text(fl.bottomup[m])}});
    }
  }
  return {};
}

// --- registry ---------------------------------------------------------------

using Checker = Outcome (*)(Context&);

struct ClaimEntry {
  ClaimInfo info;
  Checker fn;
};

const std::vector<ClaimEntry>& entries() {
  using K = Instance::Kind;
  static const std::vector<ClaimEntry> kEntries = {
      {{"EC2", true, K::kFd, "staged extension is a closure operator"}, check_ec2},
      {{"CO6", true, K::kFd, "keys form a hereditary family"}, check_co6},
      {{"CO7", true, K::kFd, "closed sets grow strictly at every outside point"}, check_co7},
      {{"CO8", true, K::kFd, "empty-set closure equals the non-key points"}, check_co8},
      {{"EC3", true, K::kFd, "key restriction regenerates the closure"}, check_ec3},
      {{"EC7-monotonicity", true, K::kFd, "independence is downward closed"},
       check_ec7_monotonicity},
      {{"EC8-spanlaws", true, K::kFd, "span is a closure operator on functions"},
       check_ec8_spanlaws},
      {{"EC8-keys", true, K::kFd, "span-minimal equals locally irredundant"},
       check_ec8_keys},
      {{"MAT2", true, K::kFd, "cover bodies agree with the closure inside a closed set"},
       check_mat2},
      {{"MAT4", true, K::kFd, "top signature is cover-invariant"}, check_mat4},
      {{"MAT6", true, K::kFd, "direct determination is reflexive, projective, transitive"},
       check_mat6},
      {{"MAT7", true, K::kFd, "interior closures agree across covers"}, check_mat7},
      {{"MAT9", true, K::kFd, "direct determination drives exchange and redundancy"},
       check_mat9},
      {{"MAT10", true, K::kFd, "covers are matched bijectively and self-inversely"},
       check_mat10},
      {{"MAT11-cardinality", true, K::kFd, "nonredundant covers have equal size"},
       check_mat11_cardinality},
      {{"MAT11-exchange", true, K::kFd, "single-pair exchange connects covers"},
       check_mat11_exchange},
      {{"FL4-closurelaws", true, K::kHereditary, "flat closure satisfies the closure laws"},
       check_fl4_closurelaws},
      {{"FL4-H-subset-of-keys", true, K::kHereditary,
        "members are keys of their flat closure"},
       check_fl4_h_subset_of_keys},
      {{"FL3-note-a", false, K::kHereditary,
        "dependence image equals flat closure on members"},
       check_fl3_note_a},
      {{"FL4-keyset-equality", false, K::kHereditary,
        "keys of the flat closure are exactly the members"},
       check_fl4_keyset_equality},
      {{"FL5", false, K::kHereditary,
        "flat closure equals the image of every maximal independent subset"},
       check_fl5},
      {{"FL6", false, K::kHereditary, "top-down and bottom-up flat closures agree"},
       check_fl6},
      {{"FL7", false, K::kFd, "span is the flat closure of the irredundant family"},
       check_fl7},
      {{"MAT12", false, K::kFd, "rule-dependent singletons sit in no nonredundant cover"},
       check_mat12},
      {{"EC6-equivalence", false, K::kFd,
        "locally irredundant functions extend to nonredundant covers"},
       check_ec6_equivalence},
      {{"MAT11-augmentation", false, K::kFd, "independent sets satisfy augmentation"},
       check_mat11_augmentation},
  };
  return kEntries;
}

const ClaimEntry* find_entry(std::string_view id) {
  for (const ClaimEntry& e : entries()) {
    if (e.info.id == id) return &e;
  }
  return nullptr;
}

// --- witness minimization ----------------------------------------------------

std::string render_instance(const Instance& inst) {
  if (inst.kind == Instance::Kind::kFd) {
    return io::format_fd_file(inst.universe, inst.fd);
  }
  return io::format_facets_file(inst.universe, inst.h);
}

Instance project_attr(const Instance& inst, std::size_t drop) {
  const std::size_t width = inst.universe.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < width; ++i) {
    if (i != drop) names.push_back(inst.universe.name(i));
  }
  Instance out;
  out.kind = inst.kind;
  out.id = inst.id + ":proj";
  out.universe = Universe::make(names);
  auto project = [&](const AttrSet& s) {
    AttrSet p(width - 1);
    std::size_t j = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (i == drop) continue;
      if (s.test(i)) p.set(j);
      ++j;
    }
    return p;
  };
  if (inst.kind == Instance::Kind::kFd) {
    std::vector<FdPair> pairs;
    for (const FdPair& p : inst.fd.pairs()) {
      pairs.push_back(FdPair{project(p.left), project(p.right)});
    }
    out.fd = canonicalize(width - 1, pairs);
  } else {
    std::vector<AttrSet> facets;
    for (const AttrSet& f : inst.h.maximal_members()) facets.push_back(project(f));
    out.h = HereditaryCollection::from_facets(width - 1, facets);
  }
  return out;
}

std::vector<Instance> reductions(const Instance& inst) {
  std::vector<Instance> out;
  if (inst.kind == Instance::Kind::kFd) {
    for (std::size_t i = 0; i < inst.fd.size(); ++i) {
      Instance r;
      r.kind = inst.kind;
      r.id = inst.id + ":drop";
      r.universe = inst.universe;
      std::vector<FdPair> pairs;
      for (std::size_t j = 0; j < inst.fd.size(); ++j) {
        if (j != i) pairs.push_back(inst.fd.pair_at(j));
      }
      r.fd = canonicalize(inst.fd.width(), pairs);
      out.push_back(std::move(r));
    }
  } else {
    std::vector<AttrSet> facets = inst.h.maximal_members();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      Instance r;
      r.kind = inst.kind;
      r.id = inst.id + ":drop";
      r.universe = inst.universe;
      std::vector<AttrSet> remaining;
      for (std::size_t j = 0; j < facets.size(); ++j) {
        if (j != i) remaining.push_back(facets[j]);
      }
      r.h = HereditaryCollection::from_facets(inst.h.width(), remaining);
      out.push_back(std::move(r));
    }
  }
  if (inst.universe.size() > 1) {
    for (std::size_t a = 0; a < inst.universe.size(); ++a) {
      out.push_back(project_attr(inst, a));
    }
  }
  return out;
}

bool claim_fails(const ClaimEntry& entry, const Instance& inst) {
  Context ctx(inst);
  return entry.fn(ctx).status == ClaimStatus::kFail;
}

Witness make_witness(const Instance& inst, const ClaimEntry& entry) {
  Instance minimized = inst;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Instance& candidate : reductions(minimized)) {
      if (claim_fails(entry, candidate)) {
        minimized = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  Context ctx(minimized);
  Outcome outcome = entry.fn(ctx);

  Witness w;
  w.claim = std::string(entry.info.id);
  w.kind = minimized.kind;
  w.instance_text = render_instance(minimized);
  w.detail = std::move(outcome.detail);
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public audit surface
// ---------------------------------------------------------------------------

std::string_view claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kCapped: return "capped";
  }
  return "unknown";
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> kRegistry = [] {
    std::vector<ClaimInfo> out;
    for (const ClaimEntry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return kRegistry;
}

const ClaimInfo* find_claim(std::string_view id) {
  const ClaimEntry* e = find_entry(id);
  return e == nullptr ? nullptr : &e->info;
}

std::string Witness::to_text() const {
  std::string out = "claim " + claim + "\n";
  for (const auto& [key, value] : detail) {
    out += "  " + key + ": " + value + "\n";
  }
  out += "  instance:\n";
  std::size_t pos = 0;
  while (pos < instance_text.size()) {
    std::size_t end = instance_text.find('\n', pos);
    if (end == std::string::npos) end = instance_text.size();
    out += "    " + instance_text.substr(pos, end - pos) + "\n";
    pos = end + 1;
  }
  return out;
}

AuditReport audit_instance(const Instance& instance,
                           const std::vector<std::string>& claims) {
  AuditReport report;
  report.instance_id = instance.id;
  Context ctx(instance);
  for (const ClaimEntry& entry : entries()) {
    if (entry.info.kind != instance.kind) continue;
    if (!claims.empty() &&
        std::find(claims.begin(), claims.end(), entry.info.id) == claims.end()) {
      continue;
    }
    Outcome outcome = entry.fn(ctx);
    report.verdicts.emplace_back(std::string(entry.info.id), outcome.status);
    if (outcome.status == ClaimStatus::kFail) {
      report.witnesses.push_back(make_witness(instance, entry));
    }
  }
  return report;
}

bool revalidate(const Witness& witness) {
  const ClaimEntry* entry = find_entry(witness.claim);
  if (entry == nullptr) return false;
  Instance inst;
  inst.id = "witness";
  inst.kind = witness.kind;
  if (witness.kind == Instance::Kind::kFd) {
    io::ParsedFd parsed = io::parse_fd_file(witness.instance_text);
    inst.universe = std::move(parsed.universe);
    inst.fd = std::move(parsed.canonical);
  } else {
    io::ParsedFacets parsed = io::parse_facets_file(witness.instance_text);
    inst.universe = std::move(parsed.universe);
    inst.h = std::move(parsed.collection);
  }
  return claim_fails(*entry, inst);
}

SuiteConfig default_config() {
  SuiteConfig config;
  for (std::uint64_t s = 1; s <= 250; ++s) config.fd_seeds.push_back(s);
  for (std::uint64_t s = 1; s <= 25; ++s) config.hereditary_seeds.push_back(s);
  for (std::uint64_t s = 1; s <= 30; ++s) config.open_seeds.push_back(s);
  return config;
}

AuditSummary run_suite(const SuiteConfig& config) {
  std::vector<std::string> must_fd, must_her, open_fd, all_fd, all_her;
  for (const ClaimEntry& e : entries()) {
    std::string id(e.info.id);
    if (!config.claims.empty() &&
        std::find(config.claims.begin(), config.claims.end(), id) ==
            config.claims.end()) {
      continue;
    }
    if (e.info.kind == Instance::Kind::kFd) {
      all_fd.push_back(id);
      if (e.info.must_pass) must_fd.push_back(id);
      else open_fd.push_back(id);
    } else {
      all_her.push_back(id);
      if (e.info.must_pass) must_her.push_back(id);
    }
  }

  struct Job {
    Instance inst;
    const std::vector<std::string>* claims;
  };
  std::vector<Job> jobs;

  if (config.include_fixtures) {
    jobs.push_back({fd_fixture(), &all_fd});
    jobs.push_back({facet_fixture(), &all_her});
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::size_t rank = 1; rank <= n; ++rank) {
        jobs.push_back({uniform_fixture(n, rank), &all_her});
      }
    }
  }
  for (std::uint64_t seed : config.fd_seeds) {
    for (std::size_t size : config.fd_sizes) {
      jobs.push_back({random_instance(seed, {size, config.fd_max_pairs,
                                             Instance::Kind::kFd}),
                      &must_fd});
    }
  }
  for (std::uint64_t seed : config.hereditary_seeds) {
    for (std::size_t size : config.hereditary_sizes) {
      jobs.push_back({random_instance(seed, {size, config.facet_count,
                                             Instance::Kind::kHereditary}),
                      &all_her});
    }
  }
  for (std::uint64_t seed : config.open_seeds) {
    for (std::size_t size : config.open_sizes) {
      jobs.push_back({random_instance(seed, {size, 6, Instance::Kind::kFd}),
                      &open_fd});
    }
  }

  AuditSummary summary;
  summary.reports.resize(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i) {
    summary.reports[static_cast<std::size_t>(i)] =
        audit_instance(jobs[static_cast<std::size_t>(i)].inst,
                       *jobs[static_cast<std::size_t>(i)].claims);
  }

  summary.instances = jobs.size();
  for (const ClaimEntry& e : entries()) {
    ClaimTally tally;
    tally.claim = std::string(e.info.id);
    tally.must_pass = e.info.must_pass;
    summary.tallies.push_back(tally);
  }
  for (const AuditReport& report : summary.reports) {
    for (const auto& [claim, status] : report.verdicts) {
      for (ClaimTally& tally : summary.tallies) {
        if (tally.claim != claim) continue;
        if (status == ClaimStatus::kPass) ++tally.pass;
        else if (status == ClaimStatus::kFail) ++tally.fail;
        else ++tally.capped;
        if (status == ClaimStatus::kFail && tally.must_pass) summary.must_pass_ok = false;
      }
    }
    for (const Witness& w : report.witnesses) {
      if (!revalidate(w)) summary.witnesses_ok = false;
    }
  }
  summary.tallies.erase(
      std::remove_if(summary.tallies.begin(), summary.tallies.end(),
                     [](const ClaimTally& t) {
                       return t.pass + t.fail + t.capped == 0;
                     }),
      summary.tallies.end());
  return summary;
}

std::string AuditSummary::to_text() const {
  std::ostringstream out;
  out << "audit summary\n";
  out << "instances: " << instances << "\n";
  out << "claims:\n";
  for (const ClaimTally& t : tallies) {
    out << "  " << t.claim << (t.must_pass ? " [must-pass]" : " [recorded]")
        << " pass=" << t.pass << " fail=" << t.fail << " capped=" << t.capped << "\n";
  }
  std::size_t witness_count = 0;
  for (const AuditReport& r : reports) witness_count += r.witnesses.size();
  out << "witnesses: " << witness_count << "\n";
  for (const AuditReport& r : reports) {
    for (const Witness& w : r.witnesses) {
      out << "-- instance " << r.instance_id << "\n" << w.to_text();
    }
  }
  out << "must-pass: " << (must_pass_ok ? "OK" : "FAIL") << "\n";
  out << "witness-revalidation: " << (witnesses_ok ? "OK" : "FAIL") << "\n";
  return out.str();
}

}  // namespace fdmat::audit

