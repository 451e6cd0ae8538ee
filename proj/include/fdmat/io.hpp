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

#ifndef FDMAT_IO_HPP_
#define FDMAT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "fdmat/core.hpp"
#include "fdmat/flats.hpp"

namespace fdmat::io {

// Dependency file grammar:
//   attrs: a b c d        header naming the universe, required first
//   a c -> d              one dependency per line, "->" as its own token
//   -> a                  empty left side is the empty set
//   # comment             from '#' to end of line
// Tokens are separated by one or more spaces; lines end with LF, with or
// without a trailing newline.
struct ParsedFd {
  Universe universe;
  std::vector<FdPair> raw_pairs;
  FdFunction canonical;
};

/// Throws kMissingHeader, kSyntaxError, kUnknownAttribute (messages carry
/// 1-based line numbers), kDuplicateAttribute, kEmptyName.
ParsedFd parse_fd_file(std::string_view text);

// Facet files share the header and token rules; each body line is one facet
// (a maximal independent set).
struct ParsedFacets {
  Universe universe;
  std::vector<AttrSet> facets;
  HereditaryCollection collection;
};

ParsedFacets parse_facets_file(std::string_view text);

/// Attribute names in declaration order, space separated. Empty set -> "".
std::string format_set(const Universe& u, const AttrSet& s);

/// Sets joined by " / ".
std::string format_sets(const Universe& u, const std::vector<AttrSet>& sets);

/// "LHS -> RHS" with the set formatting above.
std::string format_pair(const Universe& u, const FdPair& p);

/// Whole function as a re-parsable dependency file (header plus one line per
/// pair in canonical order).
std::string format_fd_file(const Universe& u, const FdFunction& f);

/// Facets of a hereditary collection as a re-parsable facets file.
std::string format_facets_file(const Universe& u, const HereditaryCollection& h);

/// Parses "a c" against the universe; tolerates extra spaces.
AttrSet parse_set(const Universe& u, std::string_view text);

/// Parses "a c / b / ..." into a list of sets (the " / " joiner above).
std::vector<AttrSet> parse_set_list(const Universe& u, std::string_view text);

}  // namespace fdmat::io

#endif  // FDMAT_IO_HPP_
