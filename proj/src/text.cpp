/*
 * Copyright 2026 The mexpart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "mexpart/text.hpp"

#include <charconv>
#include <vector>

#include <json.hpp>

#include "mexpart/error.hpp"

namespace mexpart {

namespace {

constexpr std::string_view kEmpty = "-";

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\r')
      ++end;
    if (end > pos) tokens.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

// Strict positive decimal: digits only, no sign, no leading zero, fits Part.
Part parse_part(std::string_view token, std::string_view whole) {
  Part value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last || value == 0 || token[0] == '0')
    throw ParseError("bad part '" + std::string(token) + "' in '" + std::string(whole) + "'");
  return value;
}

// Returns the tokens, or an empty list for the "-" empty object.
std::vector<std::string_view> object_tokens(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty line; the empty object is written '-'");
  if (tokens.size() == 1 && tokens[0] == kEmpty) return {};
  return tokens;
}

void append_parts(std::string& out, const Partition& p) {
  for (Part x : p.parts()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
}

}  // namespace

std::string to_text(const Partition& p) {
  if (p.empty()) return std::string(kEmpty);
  std::string out;
  append_parts(out, p);
  return out;
}

std::string to_text(const Overpartition& op) {
  if (op.weight() == 0) return std::string(kEmpty);
  std::string out;
  const auto over = op.overlined().parts();
  const auto plain = op.plain().parts();
  std::size_t i = 0, j = 0;
  while (i < over.size() || j < plain.size()) {
    if (!out.empty()) out += ' ';
    if (i < over.size() && (j == plain.size() || over[i] >= plain[j])) {
      out += '~';
      out += std::to_string(over[i++]);
    } else {
      out += std::to_string(plain[j++]);
    }
  }
  return out;
}

std::string to_text(const ColoredPartition& c) {
  if (c.empty()) return std::string(kEmpty);
  std::string out;
  for (const auto& part : c.parts()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(part.size);
    out += part.color == Color::first ? "_1" : "_2";
  }
  return out;
}

std::string to_text(const FamilyObject& obj) {
  return std::visit([](const auto& x) { return to_text(x); }, obj);
}

std::string to_json_line(const FamilyObject& obj) {
  using nlohmann::json;
  auto parts_array = [](const Partition& p) {
    return json(std::vector<Part>(p.parts().begin(), p.parts().end()));
  };
  json record;
  if (const auto* p = std::get_if<Partition>(&obj)) {
    record["parts"] = parts_array(*p);
  } else if (const auto* op = std::get_if<Overpartition>(&obj)) {
    record["overlined"] = parts_array(op->overlined());
    record["plain"] = parts_array(op->plain());
  } else {
    json parts = json::array();
    for (const auto& part : std::get<ColoredPartition>(obj).parts())
      parts.push_back({{"size", part.size}, {"color", static_cast<int>(part.color)}});
    record["parts"] = std::move(parts);
  }
  return record.dump();
}

Partition parse_partition(std::string_view text) {
  std::vector<Part> parts;
  for (auto token : object_tokens(text)) parts.push_back(parse_part(token, text));
  return Partition(std::move(parts));
}

Overpartition parse_overpartition(std::string_view text) {
  std::vector<Part> overlined, plain;
  for (auto token : object_tokens(text)) {
    if (token.starts_with('~'))
      overlined.push_back(parse_part(token.substr(1), text));
    else
      plain.push_back(parse_part(token, text));
  }
  return Overpartition(Partition(std::move(overlined)), Partition(std::move(plain)));
}

ColoredPartition parse_colored(std::string_view text) {
  std::vector<ColoredPart> parts;
  for (auto token : object_tokens(text)) {
    Color color = Color::first;
    if (auto underscore = token.find('_'); underscore != std::string_view::npos) {
      auto suffix = token.substr(underscore + 1);
      if (suffix == "1")
        color = Color::first;
      else if (suffix == "2")
        color = Color::second;
      else
        throw ParseError("bad color in '" + std::string(token) + "'");
      token = token.substr(0, underscore);
    }
    parts.push_back({parse_part(token, text), color});
  }
  return ColoredPartition(std::move(parts));
}

}  // namespace mexpart
