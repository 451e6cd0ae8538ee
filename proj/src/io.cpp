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

#include "fdmat/io.hpp"

#include "fdmat/closure.hpp"

namespace fdmat::io {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string> tokens;
};

// Comment stripping, token splitting, blank-line removal.
std::vector<Line> scan_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw = end == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, end - pos);
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::vector<std::string> tokens = tokenize(raw);
    if (!tokens.empty()) lines.push_back(Line{line_no, std::move(tokens)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

Universe parse_header(const std::vector<Line>& lines) {
  if (lines.empty() || lines.front().tokens.front() != "attrs:") {
    raise(ErrorCode::kMissingHeader, "first line must be 'attrs: <names>'");
  }
  std::vector<std::string> names(lines.front().tokens.begin() + 1,
                                 lines.front().tokens.end());
  return Universe::make(std::move(names));
}

std::size_t require_attr(const Universe& u, const std::string& name, std::size_t line_no) {
  auto idx = u.index_of(name);
  if (!idx) {
    raise(ErrorCode::kUnknownAttribute, name + " at line " + std::to_string(line_no));
  }
  return *idx;
}

}  // namespace

ParsedFd parse_fd_file(std::string_view text) {
  std::vector<Line> lines = scan_lines(text);
  ParsedFd out{parse_header(lines), {}, {}};
  const std::size_t width = out.universe.size();

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    AttrSet left(width), right(width);
    bool seen_arrow = false;
    for (const std::string& token : line.tokens) {
      if (token == "->") {
        if (seen_arrow) {
          raise(ErrorCode::kSyntaxError,
                "multiple '->' at line " + std::to_string(line.number));
        }
        seen_arrow = true;
        continue;
      }
      std::size_t idx = require_attr(out.universe, token, line.number);
      (seen_arrow ? right : left).set(idx);
    }
    if (!seen_arrow) {
      raise(ErrorCode::kSyntaxError, "missing '->' at line " + std::to_string(line.number));
    }
    out.raw_pairs.push_back(FdPair{std::move(left), std::move(right)});
  }
  out.canonical = canonicalize(width, out.raw_pairs);
  return out;
}

ParsedFacets parse_facets_file(std::string_view text) {
  std::vector<Line> lines = scan_lines(text);
  Universe universe = parse_header(lines);
  const std::size_t width = universe.size();

  std::vector<AttrSet> facets;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    AttrSet facet(width);
    for (const std::string& token : line.tokens) {
      facet.set(require_attr(universe, token, line.number));
    }
    facets.push_back(std::move(facet));
  }
  HereditaryCollection collection = HereditaryCollection::from_facets(width, facets);
  return ParsedFacets{std::move(universe), std::move(facets), std::move(collection)};
}

std::string format_set(const Universe& u, const AttrSet& s) {
  std::string out;
  for (std::size_t i : s.indices()) {
    if (!out.empty()) out += ' ';
    out += u.name(i);
  }
  return out;
}

std::string format_sets(const Universe& u, const std::vector<AttrSet>& sets) {
  std::string out;
  bool first = true;
  for (const AttrSet& s : sets) {
    if (!first) out += " / ";
    first = false;
    // The empty set needs a visible marker inside a joined list.
    out += s.empty_set() ? "{}" : format_set(u, s);
  }
  return out;
}

std::string format_pair(const Universe& u, const FdPair& p) {
  std::string left = format_set(u, p.left);
  std::string right = format_set(u, p.right);
  if (left.empty()) return "-> " + right;
  return left + " -> " + right;
}

std::string format_fd_file(const Universe& u, const FdFunction& f) {
  std::string out = "attrs:";
  for (const std::string& name : u.names()) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const FdPair& p : f.pairs()) {
    out += format_pair(u, p);
    out += '\n';
  }
  return out;
}

std::string format_facets_file(const Universe& u, const HereditaryCollection& h) {
  std::string out = "attrs:";
  for (const std::string& name : u.names()) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const AttrSet& facet : h.maximal_members()) {
    out += format_set(u, facet);
    out += '\n';
  }
  return out;
}

AttrSet parse_set(const Universe& u, std::string_view text) {
  AttrSet s(u.size());
  for (const std::string& token : tokenize(text)) {
    if (token == "{}") continue;  // explicit empty-set marker
    s.set(u.require(token));
  }
  return s;
}

std::vector<AttrSet> parse_set_list(const Universe& u, std::string_view text) {
  std::vector<AttrSet> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t sep = text.find('/', pos);
    std::string_view chunk = sep == std::string_view::npos
                                 ? text.substr(pos)
                                 : text.substr(pos, sep - pos);
    out.push_back(parse_set(u, chunk));
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return out;
}

}  // namespace fdmat::io
