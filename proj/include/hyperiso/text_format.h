// Copyright 2026 The hyperiso Authors.
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

// Line-oriented text format.
//
//   k n m            header of a simple hypergraph
//   v1 v2 ... vk     m lines, 0-based ids, strictly increasing
//
//   k n m multi      header of a multihypergraph
//   v1 ... vk [xC]   m lines, ids non-decreasing, optional multiplicity C
//
// Blank lines and lines starting with '#' are skipped.

#ifndef HYPERISO_TEXT_FORMAT_H_
#define HYPERISO_TEXT_FORMAT_H_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "hyperiso/hypergraph.h"

namespace hyperiso {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using AnyHypergraph = std::variant<Hypergraph, MultiHypergraph>;

AnyHypergraph ParseAny(std::istream& in);
// Rejects the multi header.
Hypergraph ParseHypergraph(std::istream& in);
// Accepts both headers.
MultiHypergraph ParseMultiHypergraph(std::istream& in);

Hypergraph ReadHypergraphFile(const std::string& path);
MultiHypergraph ReadMultiHypergraphFile(const std::string& path);

void WriteText(std::ostream& out, const Hypergraph& h);
void WriteText(std::ostream& out, const MultiHypergraph& h);

}  // namespace hyperiso

#endif  // HYPERISO_TEXT_FORMAT_H_
