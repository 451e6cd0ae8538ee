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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdmat/audit.hpp"
#include "fdmat/closure.hpp"
#include "fdmat/core.hpp"
#include "fdmat/cover.hpp"
#include "fdmat/flats.hpp"
#include "fdmat/io.hpp"
#include "fdmat/matroid.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fdmat;

constexpr int kExitOk = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::kBadParams, "cannot open file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json set_json(const Universe& u, const AttrSet& s) {
  json out = json::array();
  for (std::size_t i : s.indices()) out.push_back(u.name(i));
  return out;
}

json sets_json(const Universe& u, const std::vector<AttrSet>& sets) {
  json out = json::array();
  for (const AttrSet& s : sets) out.push_back(set_json(u, s));
  return out;
}

json pair_json(const Universe& u, const FdPair& p) {
  json out = json::object();
  out["left"] = set_json(u, p.left);
  out["right"] = set_json(u, p.right);
  return out;
}

json function_json(const Universe& u, const FdFunction& f) {
  json out = json::array();
  for (const FdPair& p : f.pairs()) out.push_back(pair_json(u, p));
  return out;
}

json trace_json(const Universe& u, const Trace& trace) {
  json stages = json::array();
  for (std::size_t t = 0; t < trace.stages.size(); ++t) {
    json stage = json::object();
    stage["stage"] = t;
    stage["set"] = set_json(u, trace.stages[t]);
    json fired = json::array();
    for (const FdPair& p : trace.fired[t]) fired.push_back(pair_json(u, p));
    stage["fired"] = fired;
    stages.push_back(stage);
  }
  return stages;
}

std::string trace_text(const Universe& u, const Trace& trace) {
  std::string out;
  for (std::size_t t = 0; t < trace.stages.size(); ++t) {
    out += "  " + std::to_string(t) + ": " + io::format_set(u, trace.stages[t]);
    if (!trace.fired[t].empty()) {
      out += "   [";
      for (std::size_t i = 0; i < trace.fired[t].size(); ++i) {
        if (i) out += " ; ";
        out += io::format_pair(u, trace.fired[t][i]);
      }
      out += "]";
    }
    out += "\n";
  }
  return out;
}

json universe_json(const Universe& u) {
  json out = json::array();
  for (const std::string& name : u.names()) out.push_back(name);
  return out;
}

void emit(const std::string& command, const Universe& u, const json& result,
          bool as_json, const std::string& text) {
  if (as_json) {
    json out = json::object();
    out["command"] = command;
    out["universe"] = universe_json(u);
    out["result"] = result;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

struct CommonArgs {
  std::string fds_path;
  bool json_output = false;
};

io::ParsedFd load_fd(const CommonArgs& args) {
  return io::parse_fd_file(read_file(args.fds_path));
}

// --- subcommand handlers ----------------------------------------------------

int cmd_closure(const CommonArgs& args, const std::string& set_text, bool with_trace) {
  io::ParsedFd parsed = load_fd(args);
  AttrSet x = io::parse_set(parsed.universe, set_text);
  ClosureResult staged = extend_by_closure(parsed.canonical, x);
  AttrSet fast = fast_closure(parsed.canonical, x);
  if (fast != staged.closure) {
    throw std::logic_error("closure kernels disagree");
  }
  json result = json::object();
  result["set"] = set_json(parsed.universe, x);
  result["closure"] = set_json(parsed.universe, staged.closure);
  std::string text = io::format_set(parsed.universe, staged.closure) + "\n";
  if (with_trace) {
    result["trace"] = trace_json(parsed.universe, staged.trace);
    text += "trace:\n" + trace_text(parsed.universe, staged.trace);
  }
  emit("closure", parsed.universe, result, args.json_output, text);
  return kExitOk;
}

int cmd_closed_sets(const CommonArgs& args) {
  io::ParsedFd parsed = load_fd(args);
  std::vector<AttrSet> sets = closed_sets(parsed.canonical);
  std::string text;
  for (const AttrSet& s : sets) {
    text += (s.empty_set() ? "{}" : io::format_set(parsed.universe, s)) + "\n";
  }
  emit("closed-sets", parsed.universe, sets_json(parsed.universe, sets),
       args.json_output, text);
  return kExitOk;
}

int cmd_keys(const CommonArgs& args, const std::string& of_text) {
  io::ParsedFd parsed = load_fd(args);
  std::vector<AttrSet> keys;
  if (of_text.empty()) {
    keys = all_keys(parsed.canonical).members();
  } else {
    keys = keys_of(parsed.canonical, io::parse_set(parsed.universe, of_text));
  }
  emit("keys", parsed.universe, sets_json(parsed.universe, keys), args.json_output,
       io::format_sets(parsed.universe, keys) + "\n");
  return kExitOk;
}

int cmd_mincover(const CommonArgs& args) {
  io::ParsedFd parsed = load_fd(args);
  FdFunction cover = nonredundant_cover(parsed.canonical);
  emit("mincover", parsed.universe, function_json(parsed.universe, cover),
       args.json_output, io::format_fd_file(parsed.universe, cover));
  return kExitOk;
}

int cmd_canonicalize(const CommonArgs& args) {
  io::ParsedFd parsed = load_fd(args);
  emit("canonicalize", parsed.universe, function_json(parsed.universe, parsed.canonical),
       args.json_output, io::format_fd_file(parsed.universe, parsed.canonical));
  return kExitOk;
}

int cmd_span(const CommonArgs& args, const std::string& dom_text) {
  io::ParsedFd parsed = load_fd(args);
  FdFunction mu = materialize_mu(parsed.canonical);
  std::vector<FdPair> sub_pairs;
  if (dom_text.empty()) {
    sub_pairs = parsed.canonical.pairs();
  } else {
    for (const AttrSet& dom : io::parse_set_list(parsed.universe, dom_text)) {
      sub_pairs.push_back(FdPair{dom, fast_closure(parsed.canonical, dom)});
    }
  }
  FdFunction sub = FdFunction::from_pairs(parsed.universe.size(), sub_pairs, true);
  FdFunction result = span(sub, mu);
  std::string text;
  for (const FdPair& p : result.pairs()) {
    text += io::format_pair(parsed.universe, p) + "\n";
  }
  json j = json::object();
  j["function"] = function_json(parsed.universe, sub);
  j["span"] = function_json(parsed.universe, result);
  emit("span", parsed.universe, j, args.json_output, text);
  return kExitOk;
}

int cmd_dd(const CommonArgs& args, const std::string& from_text,
           const std::string& to_text) {
  io::ParsedFd parsed = load_fd(args);
  AttrSet from = io::parse_set(parsed.universe, from_text);
  AttrSet to = io::parse_set(parsed.universe, to_text);
  DirectDetermination dd = directly_determines(parsed.canonical, from, to);
  json result = json::object();
  result["from"] = set_json(parsed.universe, from);
  result["to"] = set_json(parsed.universe, to);
  result["holds"] = dd.holds;
  result["shared_closure"] = set_json(parsed.universe, dd.shared_closure);
  result["trace"] = trace_json(parsed.universe, dd.trace);
  std::string text = dd.holds ? "yes\n" : "no\n";
  text += "interior derivation:\n" + trace_text(parsed.universe, dd.trace);
  emit("dd", parsed.universe, result, args.json_output, text);
  return kExitOk;
}

int cmd_bases(const CommonArgs& args) {
  io::ParsedFd parsed = load_fd(args);
  FdFunction mu = materialize_mu(parsed.canonical);
  std::vector<FdFunction> bases = enumerate_bases(mu);
  json result = json::array();
  std::string text = std::to_string(bases.size()) + " bases\n";
  for (const FdFunction& basis : bases) {
    result.push_back(function_json(parsed.universe, basis));
    std::string line;
    for (const FdPair& p : basis.pairs()) {
      if (!line.empty()) line += " ; ";
      line += io::format_pair(parsed.universe, p);
    }
    text += line + "\n";
  }
  emit("bases", parsed.universe, result, args.json_output, text);
  return kExitOk;
}

int cmd_top_signature(const CommonArgs& args) {
  io::ParsedFd parsed = load_fd(args);
  FdFunction cover = nonredundant_cover(parsed.canonical);
  std::vector<AttrSet> signature = top_signature(cover);
  json result = json::object();
  result["cover"] = function_json(parsed.universe, cover);
  result["signature"] = sets_json(parsed.universe, signature);
  emit("top-signature", parsed.universe, result, args.json_output,
       io::format_sets(parsed.universe, signature) + "\n");
  return kExitOk;
}

int cmd_flats(const std::string& facets_path, const std::string& set_text,
              bool json_output) {
  io::ParsedFacets parsed = io::parse_facets_file(read_file(facets_path));
  AttrSet x = io::parse_set(parsed.universe, set_text);
  AttrSet td = kappa_topdown(parsed.collection, x);
  AttrSet bu = kappa_bottomup(parsed.collection, x);
  json result = json::object();
  result["set"] = set_json(parsed.universe, x);
  result["topdown"] = set_json(parsed.universe, td);
  result["bottomup"] = set_json(parsed.universe, bu);
  result["diverged"] = td != bu;
  std::string text = "top-down:  " + io::format_set(parsed.universe, td) + "\n" +
                     "bottom-up: " + io::format_set(parsed.universe, bu) + "\n" +
                     (td != bu ? "diverged: yes\n" : "diverged: no\n");
  emit("flats", parsed.universe, result, json_output, text);
  return kExitOk;
}

int cmd_singleton(const CommonArgs& args, const std::string& left_text,
                  const std::string& closed_text) {
  io::ParsedFd parsed = load_fd(args);
  FdFunction mu = materialize_mu(parsed.canonical);
  FdPair p{io::parse_set(parsed.universe, left_text),
           io::parse_set(parsed.universe, closed_text)};
  SingletonStatus s = singleton_status(mu, p);
  json result = json::object();
  result["pair"] = pair_json(parsed.universe, p);
  result["dependent_by_rule"] = s.dependent_by_rule;
  result["reflexive"] = s.reflexive;
  result["dd_to_closure"] = s.dd_to_closure;
  result["left_is_key"] = s.left_is_key;
  result["locally_irredundant"] = s.locally_irredundant;
  if (s.in_some_basis.has_value()) result["in_some_basis"] = *s.in_some_basis;
  result["conflict"] = s.conflict;
  result["verdict"] = s.dependent_by_rule ? "dependent-by-rule" : "undetermined-by-rule";
  std::string text = std::string("verdict: ") +
                     (s.dependent_by_rule ? "dependent-by-rule" : "undetermined-by-rule") +
                     "\n";
  text += std::string("locally irredundant: ") + (s.locally_irredundant ? "yes" : "no") + "\n";
  if (s.in_some_basis.has_value()) {
    text += std::string("in some basis: ") + (*s.in_some_basis ? "yes" : "no") + "\n";
  }
  if (s.conflict) text += "conflict: rule says dependent, oracle found it in a basis\n";
  emit("singleton", parsed.universe, result, args.json_output, text);
  return kExitOk;
}

json witness_json(const audit::Witness& w) {
  json out = json::object();
  json detail = json::object();
  for (const auto& [key, value] : w.detail) detail[key] = value;
  out["detail"] = detail;
  out["instance"] = w.instance_text;
  return out;
}

int cmd_audit(const std::string& fds_path, const std::string& facets_path,
              std::optional<std::size_t> random_count, std::size_t universe_size,
              std::uint64_t seed, const std::vector<std::string>& claims,
              bool json_output) {
  std::vector<audit::Instance> instances;
  if (!fds_path.empty()) {
    io::ParsedFd parsed = io::parse_fd_file(read_file(fds_path));
    audit::Instance inst;
    inst.kind = audit::Instance::Kind::kFd;
    inst.id = "file:" + fds_path;
    inst.universe = std::move(parsed.universe);
    inst.fd = std::move(parsed.canonical);
    instances.push_back(std::move(inst));
  } else if (!facets_path.empty()) {
    io::ParsedFacets parsed = io::parse_facets_file(read_file(facets_path));
    audit::Instance inst;
    inst.kind = audit::Instance::Kind::kHereditary;
    inst.id = "file:" + facets_path;
    inst.universe = std::move(parsed.universe);
    inst.h = std::move(parsed.collection);
    instances.push_back(std::move(inst));
  } else if (random_count.has_value()) {
    for (std::uint64_t i = 0; i < *random_count; ++i) {
      instances.push_back(audit::random_instance(
          seed + i, {universe_size, 8, audit::Instance::Kind::kFd}));
    }
  } else {
    raise(ErrorCode::kBadParams, "audit needs --fds, --facets or --random");
  }

  bool must_pass_ok = true;
  json reports = json::array();
  std::string text;
  for (const audit::Instance& inst : instances) {
    audit::AuditReport report = audit::audit_instance(inst, claims);
    json jr = json::object();
    jr["instance"] = report.instance_id;
    json verdicts = json::array();
    text += "instance " + report.instance_id + "\n";
    for (const auto& [claim, status] : report.verdicts) {
      const audit::ClaimInfo* info = audit::find_claim(claim);
      bool must = info != nullptr && info->must_pass;
      if (status == audit::ClaimStatus::kFail && must) must_pass_ok = false;
      json v = json::object();
      v["claim"] = claim;
      v["status"] = std::string(audit::claim_status_name(status));
      for (const audit::Witness& w : report.witnesses) {
        if (w.claim == claim) v["witness"] = witness_json(w);
      }
      verdicts.push_back(v);
      text += "  " + claim + ": " + std::string(audit::claim_status_name(status)) + "\n";
    }
    jr["verdicts"] = verdicts;
    reports.push_back(jr);
    for (const audit::Witness& w : report.witnesses) {
      text += w.to_text();
    }
  }
  text += must_pass_ok ? "must-pass: OK\n" : "must-pass: FAIL\n";

  if (json_output) {
    json out = json::object();
    out["command"] = "audit";
    out["universe"] = instances.size() == 1 ? universe_json(instances[0].universe)
                                            : json::array();
    out["result"] = json::object({{"must_pass_ok", must_pass_ok}});
    out["verdicts"] = reports;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return must_pass_ok ? kExitOk : kExitAuditFail;
}

int cmd_suite(bool json_output) {
  audit::AuditSummary summary = audit::run_suite(audit::default_config());
  if (json_output) {
    json out = json::object();
    out["command"] = "audit";
    out["universe"] = json::array();
    json result = json::object();
    result["instances"] = summary.instances;
    result["must_pass_ok"] = summary.must_pass_ok;
    result["witnesses_ok"] = summary.witnesses_ok;
    json tallies = json::array();
    for (const audit::ClaimTally& t : summary.tallies) {
      json jt = json::object();
      jt["claim"] = t.claim;
      jt["must_pass"] = t.must_pass;
      jt["pass"] = t.pass;
      jt["fail"] = t.fail;
      jt["capped"] = t.capped;
      tallies.push_back(jt);
    }
    result["claims"] = tallies;
    out["result"] = result;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << summary.to_text();
  }
  return summary.must_pass_ok && summary.witnesses_ok ? kExitOk : kExitAuditFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite closures, covers and the cover matroid"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json after the subcommand as well
  bool json_output = false;
  app.add_flag("--json", json_output, "emit one JSON object");

  std::string fds, facets, set_text, of_text, from_text, to_text, dom_text;
  std::string left_text, closed_text;
  bool with_trace = false;

  auto* closure_cmd = app.add_subcommand("closure", "closure of a set");
  closure_cmd->add_option("--fds", fds, "dependency file")->required();
  closure_cmd->add_option("--set", set_text, "attribute set")->required();
  closure_cmd->add_flag("--trace", with_trace, "print the stage sequence");

  auto* closed_cmd = app.add_subcommand("closed-sets", "all closed sets");
  closed_cmd->add_option("--fds", fds, "dependency file")->required();

  auto* keys_cmd = app.add_subcommand("keys", "keys of a closed set or all keys");
  keys_cmd->add_option("--fds", fds, "dependency file")->required();
  keys_cmd->add_option("--of", of_text, "closed set (omit for every key)");

  auto* mincover_cmd = app.add_subcommand("mincover", "one-pass nonredundant cover");
  mincover_cmd->add_option("--fds", fds, "dependency file")->required();

  auto* canonical_cmd = app.add_subcommand("canonicalize", "canonical form");
  canonical_cmd->add_option("--fds", fds, "dependency file")->required();

  auto* span_cmd = app.add_subcommand("span", "span of a subfunction inside mu");
  span_cmd->add_option("--fds", fds, "dependency file")->required();
  span_cmd->add_option("--dom", dom_text, "left sides, '/'-separated (default: all)");

  auto* dd_cmd = app.add_subcommand("dd", "direct determination");
  dd_cmd->add_option("--fds", fds, "dependency file")->required();
  dd_cmd->add_option("--from", from_text, "determining set")->required();
  dd_cmd->add_option("--to", to_text, "determined set")->required();

  auto* bases_cmd = app.add_subcommand("bases", "all nonredundant covers");
  bases_cmd->add_option("--fds", fds, "dependency file")->required();

  auto* top_cmd = app.add_subcommand("top-signature", "closed sets carrying top pairs");
  top_cmd->add_option("--fds", fds, "dependency file")->required();

  auto* flats_cmd = app.add_subcommand("flats", "flat closure, both constructions");
  flats_cmd->add_option("--facets", facets, "facet file")->required();
  flats_cmd->add_option("--set", set_text, "attribute set")->required();

  auto* singleton_cmd = app.add_subcommand("singleton", "status of one pair of mu");
  singleton_cmd->add_option("--fds", fds, "dependency file")->required();
  singleton_cmd->add_option("--left", left_text, "left side")->required();
  singleton_cmd->add_option("--closed", closed_text, "its closed set")->required();

  std::optional<std::size_t> random_count;
  std::size_t universe_size = 4;
  std::uint64_t seed = 1;
  std::vector<std::string> claims;
  bool full_suite = false;
  auto* audit_cmd = app.add_subcommand("audit", "run claim checkers");
  audit_cmd->add_option("--fds", fds, "dependency file");
  audit_cmd->add_option("--facets", facets, "facet file");
  audit_cmd->add_option("--random", random_count, "number of random instances");
  audit_cmd->add_option("--universe", universe_size, "random universe size");
  audit_cmd->add_option("--seed", seed, "random seed");
  audit_cmd->add_option("--claims", claims, "claim filter (ids)");
  audit_cmd->add_flag("--suite", full_suite, "run the full default suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CommonArgs common{fds, json_output};
  try {
    if (closure_cmd->parsed()) return cmd_closure(common, set_text, with_trace);
    if (closed_cmd->parsed()) return cmd_closed_sets(common);
    if (keys_cmd->parsed()) return cmd_keys(common, of_text);
    if (mincover_cmd->parsed()) return cmd_mincover(common);
    if (canonical_cmd->parsed()) return cmd_canonicalize(common);
    if (span_cmd->parsed()) return cmd_span(common, dom_text);
    if (dd_cmd->parsed()) return cmd_dd(common, from_text, to_text);
    if (bases_cmd->parsed()) return cmd_bases(common);
    if (top_cmd->parsed()) return cmd_top_signature(common);
    if (flats_cmd->parsed()) return cmd_flats(facets, set_text, json_output);
    if (singleton_cmd->parsed()) return cmd_singleton(common, left_text, closed_text);
    if (audit_cmd->parsed()) {
      if (full_suite) return cmd_suite(json_output);
      return cmd_audit(fds, facets, random_count, universe_size, seed, claims,
                       json_output);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
