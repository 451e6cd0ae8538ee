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

#ifndef FDMAT_AUDIT_HPP_
#define FDMAT_AUDIT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdmat/core.hpp"
#include "fdmat/flats.hpp"

namespace fdmat::audit {

// ---------------------------------------------------------------------------
// Ground-truth oracles. These deliberately share no code with the closure
// kernels they are used to validate.
// ---------------------------------------------------------------------------

/// Full (set, closure) table computed by repeated whole-function scans until
/// stable; no counters, no work queue. Throws kCapExceeded above the cap.
FdFunction oracle_closure_table(const FdFunction& f, std::size_t cap = 10);

/// Every nonredundant cover of a materialized closure, found by scanning all
/// subsets of its non-reflexive pairs. Throws kCapExceeded when the universe
/// exceeds the cap, kBadParams when mu is not materialized.
std::vector<FdFunction> oracle_nonredundant_covers(const FdFunction& mu,
                                                   std::size_t cap = 4);

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

struct Instance {
  enum class Kind { kFd, kHereditary };
  Kind kind = Kind::kFd;
  std::string id;
  Universe universe;
  FdFunction fd;            // kind == kFd
  HereditaryCollection h;   // kind == kHereditary
};

/// The four-attribute dependency fixture used throughout the tests and docs.
Instance fd_fixture();
/// The three-attribute facet fixture whose two flat-closure computations
/// disagree.
Instance facet_fixture();
/// Uniform collection fixture: subsets of size <= rank over n attributes.
Instance uniform_fixture(std::size_t n, std::size_t rank);

struct RandomParams {
  std::size_t universe_size = 4;
  /// For dependency instances: upper bound on raw pair count. For hereditary
  /// instances: facet count.
  std::size_t max_pairs = 6;
  Instance::Kind kind = Instance::Kind::kFd;
};

/// Deterministic in (seed, params). Dependency instances are canonicalized;
/// hereditary instances come from random facets. Throws kBadParams when
/// universe_size is 0 or exceeds 8.
Instance random_instance(std::uint64_t seed, const RandomParams& params);

// ---------------------------------------------------------------------------
// Claims
// ---------------------------------------------------------------------------

enum class ClaimStatus { kPass, kFail, kCapped };

std::string_view claim_status_name(ClaimStatus s);

struct ClaimInfo {
  std::string_view id;
  bool must_pass;
  Instance::Kind kind;
  std::string_view summary;
};

/// Every auditable claim, in report order. Ids are stable and usable as
/// filters; "must pass" claims fail the whole suite, the others are recorded
/// with witnesses.
const std::vector<ClaimInfo>& claim_registry();

const ClaimInfo* find_claim(std::string_view id);

struct Witness {
  std::string claim;
  Instance::Kind kind = Instance::Kind::kFd;
  /// Minimized instance in dependency/facet file form; parsing it and
  /// re-running the claim reproduces the violation.
  std::string instance_text;
  std::vector<std::pair<std::string, std::string>> detail;
  std::string to_text() const;
};

struct AuditReport {
  std::string instance_id;
  std::vector<std::pair<std::string, ClaimStatus>> verdicts;  // registry order
  std::vector<Witness> witnesses;
};

/// Runs the named claims (all claims of the instance's kind when empty)
/// and reports one verdict each. Claims whose caps the instance exceeds get
/// a capped verdict; failures carry minimized witnesses.
AuditReport audit_instance(const Instance& instance,
                           const std::vector<std::string>& claims = {});

/// Re-runs a witness's claim on its own minimized instance. True when the
/// violation reproduces.
bool revalidate(const Witness& witness);

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

struct SuiteConfig {
  // Main corpus: must-pass claims on seeds x sizes dependency instances.
  std::vector<std::uint64_t> fd_seeds;
  std::vector<std::size_t> fd_sizes{3, 4, 5, 6};
  std::size_t fd_max_pairs = 8;
  // Hereditary corpus.
  std::vector<std::uint64_t> hereditary_seeds;
  std::vector<std::size_t> hereditary_sizes{3, 4, 6, 8};
  std::size_t facet_count = 3;
  // Open-claim corpus: all claims (including the recorded-open ones, which
  // carry the expensive exhaustive checkers) on a smaller seeded set.
  std::vector<std::uint64_t> open_seeds;
  std::vector<std::size_t> open_sizes{3, 4};
  bool include_fixtures = true;
  // Empty means every registry claim.
  std::vector<std::string> claims;
};

/// 1000 dependency instances, 100 hereditary instances, 60 open-corpus
/// instances, fixtures included.
SuiteConfig default_config();

struct ClaimTally {
  std::string claim;
  bool must_pass = false;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t capped = 0;
};

struct AuditSummary {
  std::vector<AuditReport> reports;
  std::vector<ClaimTally> tallies;
  std::size_t instances = 0;
  bool must_pass_ok = true;
  /// All witnesses re-validated in isolation.
  bool witnesses_ok = true;

  /// Deterministic plain-text rendering (identical configs give identical
  /// bytes).
  std::string to_text() const;
};

AuditSummary run_suite(const SuiteConfig& config);

}  // namespace fdmat::audit

#endif  // FDMAT_AUDIT_HPP_
