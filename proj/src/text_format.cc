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

#include "hyperiso/text_format.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hyperiso {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::uint64_t ParseUnsigned(const std::string& tok, int line,
                            const char* what) {
  std::uint64_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("expected non-negative integer for ") +
                               what + ", got '" + tok + "'");
  }
  return value;
}

// Returns false at end of input.
bool NextContentLine(std::istream& in, int* line_no, std::string* line) {
  while (std::getline(in, *line)) {
    ++*line_no;
    const auto pos = line->find_first_not_of(" \t\r");
    if (pos == std::string::npos || (*line)[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

AnyHypergraph ParseAny(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!NextContentLine(in, &line_no, &line)) {
    throw ParseError(line_no + 1, "missing header 'k n m'");
  }
  const auto header = Tokens(line);
  if (header.size() != 3 && !(header.size() == 4 && header[3] == "multi")) {
    throw ParseError(line_no, "header must be 'k n m' or 'k n m multi'");
  }
  const bool multi = header.size() == 4;
  const auto k = ParseUnsigned(header[0], line_no, "k");
  const auto n = ParseUnsigned(header[1], line_no, "n");
  const auto m = ParseUnsigned(header[2], line_no, "m");
  if (k < 2) throw ParseError(line_no, "k must be >= 2");
  if (!multi && k > n) throw ParseError(line_no, "k exceeds n");
  if (n == 0) throw ParseError(line_no, "n must be >= 1");

  std::vector<std::vector<Vertex>> tuples;
  std::vector<std::uint32_t> mults;
  tuples.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!NextContentLine(in, &line_no, &line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                        " edge lines, found " +
                                        std::to_string(i));
    }
    auto toks = Tokens(line);
    std::uint32_t mult = 1;
    if (multi && !toks.empty() && toks.back().starts_with('x')) {
      mult = static_cast<std::uint32_t>(
          ParseUnsigned(toks.back().substr(1), line_no, "multiplicity"));
      if (mult == 0) throw ParseError(line_no, "multiplicity must be >= 1");
      toks.pop_back();
    }
    if (toks.size() != k) {
      throw ParseError(line_no, "expected " + std::to_string(k) +
                                    " vertex ids, got " +
                                    std::to_string(toks.size()));
    }
    std::vector<Vertex> t;
    t.reserve(k);
    for (const auto& tok : toks) {
      const auto v = ParseUnsigned(tok, line_no, "vertex id");
      if (v >= n) {
        throw ParseError(line_no, "vertex id " + tok + " out of range");
      }
      if (!t.empty() && (multi ? v < t.back() : v <= t.back())) {
        throw ParseError(line_no, multi ? "ids must be non-decreasing"
                                        : "ids must be strictly increasing");
      }
      t.push_back(static_cast<Vertex>(v));
    }
    tuples.push_back(std::move(t));
    mults.push_back(mult);
  }
  if (NextContentLine(in, &line_no, &line)) {
    throw ParseError(line_no, "trailing content after " + std::to_string(m) +
                                  " edges");
  }
  if (multi) {
    return MakeMultiHypergraph(static_cast<int>(k), static_cast<int>(n),
                               tuples, mults);
  }
  try {
    return MakeHypergraph(static_cast<int>(k), static_cast<int>(n), tuples);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Hypergraph ParseHypergraph(std::istream& in) {
  auto any = ParseAny(in);
  if (auto* h = std::get_if<Hypergraph>(&any)) return std::move(*h);
  throw ParseError(1, "expected a simple hypergraph, found 'multi' header");
}

MultiHypergraph ParseMultiHypergraph(std::istream& in) {
  auto any = ParseAny(in);
  if (auto* h = std::get_if<MultiHypergraph>(&any)) return std::move(*h);
  return ToMulti(std::get<Hypergraph>(any));
}

namespace {
std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}
}  // namespace

Hypergraph ReadHypergraphFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ParseHypergraph(in);
}

MultiHypergraph ReadMultiHypergraphFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ParseMultiHypergraph(in);
}

void WriteText(std::ostream& out, const Hypergraph& h) {
  out << h.k() << ' ' << h.n() << ' ' << h.num_edges() << '\n';
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto t = h.edge(e);
    for (std::size_t i = 0; i < t.size(); ++i) {
      out << (i ? " " : "") << t[i];
    }
    out << '\n';
  }
}

void WriteText(std::ostream& out, const MultiHypergraph& h) {
  out << h.k() << ' ' << h.n() << ' ' << h.num_tuples() << " multi\n";
  for (std::size_t e = 0; e < h.num_tuples(); ++e) {
    const auto t = h.tuple(e);
    for (std::size_t i = 0; i < t.size(); ++i) {
      out << (i ? " " : "") << t[i];
    }
    if (h.multiplicity(e) != 1) out << " x" << h.multiplicity(e);
    out << '\n';
  }
}

}  // namespace hyperiso
