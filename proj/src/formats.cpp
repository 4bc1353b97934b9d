// Copyright 2026 The Shatter Authors
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

#include "shatter/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "shatter/errors.hpp"

namespace shatter {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Non-empty lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  while (true) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
    if (eol == std::string_view::npos) break;
  }
  return out;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

long parse_int(std::string_view token, int line) {
  token = trim(token);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

SetSystem build_family(std::optional<int> n, const std::vector<std::pair<int, std::vector<long>>>& sets) {
  int ground = n.value_or(1);
  if (!n) {
    for (const auto& [line, elems] : sets) {
      for (long e : elems) ground = std::max<long>(ground, std::min<long>(e, kMaxGroundSize + 1));
    }
  }
  if (ground > kMaxGroundSize) {
    fail(ErrorCode::kGroundSetTooLarge, "ground set larger than " + std::to_string(kMaxGroundSize));
  }
  check_ground_size(ground);
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& [line, elems] : sets) {
    Mask m = 0;
    for (long e : elems) {
      if (e < 1 || e > ground) {
        fail(ErrorCode::kElementOutOfRange, "line " + std::to_string(line) + ": element " + std::to_string(e) +
                                                " outside [1," + std::to_string(ground) + "]");
      }
      const Mask bit = element_bit(static_cast<int>(e));
      if ((m & bit) != 0) parse_error(line, "element " + std::to_string(e) + " repeated");
      m |= bit;
    }
    masks.push_back(m);
  }
  std::vector<std::pair<Mask, int>> order;
  order.reserve(masks.size());
  for (std::size_t k = 0; k < masks.size(); ++k) order.emplace_back(masks[k], sets[k].first);
  std::sort(order.begin(), order.end());
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (order[k].first == order[k - 1].first) {
      parse_error(order[k].second, "duplicate set " + format_set(order[k].first));
    }
  }
  return SetSystem(ground, std::move(masks));
}

}  // namespace

SetSystem parse_ss(std::string_view text) {
  std::optional<int> n;
  std::vector<std::pair<int, std::vector<long>>> sets;
  for (const auto& [number, line] : content_lines(text)) {
    if (line.starts_with("n=") || line.starts_with("n =")) {
      if (n || !sets.empty()) parse_error(number, "the n= header must come first and only once");
      const long value = parse_int(line.substr(line.find('=') + 1), number);
      if (value < 0 || value > kMaxGroundSize) {
        fail(ErrorCode::kGroundSetTooLarge, "n=" + std::to_string(value) + " outside [0," +
                                                std::to_string(kMaxGroundSize) + "]");
      }
      n = static_cast<int>(value);
      continue;
    }
    std::vector<long> elems;
    if (line != "-") {
      std::string_view rest = line;
      while (true) {
        const auto comma = rest.find(',');
        elems.push_back(parse_int(rest.substr(0, comma), number));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    sets.emplace_back(number, std::move(elems));
  }
  return build_family(n, sets);
}

std::string emit_ss(const SetSystem& f) {
  std::string out = "n=" + std::to_string(f.ground_size()) + "\n";
  for (Mask m : f) {
    if (m == 0) {
      out += "-\n";
      continue;
    }
    std::string line;
    for (int e : elements_of(m)) {
      if (!line.empty()) line += ',';
      line += std::to_string(e);
    }
    out += line + "\n";
  }
  return out;
}

SetSystem parse_family_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("sets") || !doc["sets"].is_array()) {
    fail(ErrorCode::kParse, "JSON family needs a \"sets\" array");
  }
  std::optional<int> n;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) fail(ErrorCode::kParse, "\"n\" must be an integer");
    const long value = doc["n"].get<long>();
    if (value < 0 || value > kMaxGroundSize) fail(ErrorCode::kGroundSetTooLarge, "n outside range");
    n = static_cast<int>(value);
  }
  std::vector<std::pair<int, std::vector<long>>> sets;
  int index = 0;
  for (const auto& s : doc["sets"]) {
    ++index;
    if (!s.is_array()) parse_error(index, "each set must be an array");
    std::vector<long> elems;
    for (const auto& e : s) {
      if (!e.is_number_integer()) parse_error(index, "elements must be integers");
      elems.push_back(e.get<long>());
    }
    sets.emplace_back(index, std::move(elems));
  }
  return build_family(n, sets);
}

std::string emit_family_json(const SetSystem& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (Mask m : f) sets.push_back(elements_of(m));
  nlohmann::json doc;
  doc["n"] = f.ground_size();
  doc["sets"] = std::move(sets);
  return doc.dump();
}

SetSystem parse_family(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_family_json(text);
  return parse_ss(text);
}

LabeledTree parse_tree(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorCode::kParse, "empty tree file");
  LabeledTree t;
  const long m = parse_int(lines.front().second, lines.front().first);
  if (m < 1) parse_error(lines.front().first, "vertex count must be positive");
  t.vertex_count = static_cast<std::size_t>(m);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [number, line] = lines[k];
    std::istringstream in{std::string(line)};
    std::string a, b, c, extra;
    if (!(in >> a >> b >> c) || (in >> extra)) parse_error(number, "expected 'u v label'");
    const long u = parse_int(a, number), v = parse_int(b, number), label = parse_int(c, number);
    if (u < 0 || u >= m || v < 0 || v >= m) {
      fail(ErrorCode::kInvalidTree, "line " + std::to_string(number) + ": vertex out of range");
    }
    if (label < 1 || label > kMaxGroundSize) parse_error(number, "label out of range");
    t.edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), static_cast<int>(label)});
  }
  t.validate();
  return t;
}

std::string emit_tree(const LabeledTree& t) {
  std::string out = std::to_string(t.vertex_count) + "\n";
  for (const auto& e : t.edges) {
    out += std::to_string(e.from) + " " + std::to_string(e.to) + " " + std::to_string(e.label) + "\n";
  }
  return out;
}

std::string graph_to_dot(const LabeledInclusionGraph& g) {
  std::string out = "digraph G {\n";
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    out += "  v" + std::to_string(k) + " [label=\"" + format_set(g.family[k]) + "\"];\n";
  }
  for (const auto& e : g.edges) {
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=" +
           std::to_string(e.label) + "];\n";
  }
  return out + "}\n";
}

std::string tree_to_dot(const LabeledTree& t) {
  std::string out = "digraph T {\n";
  for (std::size_t k = 0; k < t.vertex_count; ++k) out += "  v" + std::to_string(k) + ";\n";
  for (const auto& e : t.edges) {
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=" +
           std::to_string(e.label) + "];\n";
  }
  return out + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace shatter
