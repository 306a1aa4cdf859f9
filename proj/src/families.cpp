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
#include "mexpart/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>

#include "mexpart/error.hpp"

namespace mexpart {

Overpartition::Overpartition(Partition overlined, Partition plain)
    : overlined_(std::move(overlined)), plain_(std::move(plain)) {
  if (!has_distinct_parts(overlined_))
    throw DomainError("overlined parts of an overpartition must be distinct");
}

ColoredPartition::ColoredPartition(std::vector<ColoredPart> parts)
    : parts_(std::move(parts)) {
  for (const auto& part : parts_) {
    if (part.size % 2 == 0)
      throw DomainError("colored partition parts must be odd, got " +
                        std::to_string(part.size));
    if (part.color != Color::first && part.color != Color::second)
      throw DomainError("part color must be 1 or 2");
  }
  std::ranges::sort(parts_, [](const ColoredPart& a, const ColoredPart& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.color < b.color;
  });
}

Weight ColoredPartition::weight() const noexcept {
  Weight w = 0;
  for (const auto& part : parts_) w += part.size;
  return w;
}

Partition ColoredPartition::with_color(Color c) const {
  std::vector<Part> sizes;
  for (const auto& part : parts_)
    if (part.color == c) sizes.push_back(part.size);
  return Partition(std::move(sizes));
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kNames{{
    {Family::partitions, "p"},
    {Family::overpartitions, "pbar"},
    {Family::mex_at_least, "pmex"},
    {Family::restricted_overpartitions, "obar"},
    {Family::no_small_even, "pe"},
    {Family::two_colored_odd, "po2"},
}};

void partitions_rec(unsigned remaining, Part max_part, std::vector<Part>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Part part = std::min<Part>(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Distinct sizes of p in descending order with their multiplicities.
std::vector<std::pair<Part, std::size_t>> runs(const Partition& p) {
  std::vector<std::pair<Part, std::size_t>> result;
  for (Part part : p.parts()) {
    if (!result.empty() && result.back().first == part)
      ++result.back().second;
    else
      result.emplace_back(part, 1);
  }
  return result;
}

template <class T>
std::vector<T> unwrap(std::vector<FamilyObject> objects) {
  std::vector<T> result;
  result.reserve(objects.size());
  for (auto& obj : objects) result.push_back(std::get<T>(std::move(obj)));
  return result;
}

template <class T, class Pred>
std::vector<FamilyObject> filtered(std::vector<T> candidates, Pred&& keep) {
  std::vector<FamilyObject> result;
  for (auto& c : candidates)
    if (keep(c)) result.emplace_back(std::move(c));
  return result;
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (auto [family, name] : kNames)
    if (family == f) return name;
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) noexcept {
  for (auto [family, n] : kNames)
    if (n == name) return family;
  return std::nullopt;
}

bool family_takes_r(Family f) noexcept {
  return f != Family::partitions && f != Family::overpartitions;
}

FamilyId FamilyId::make(Family family, unsigned r) {
  const std::string name(family_name(family));
  if (!family_takes_r(family)) return FamilyId{family, 0};
  if (r < 1)
    throw ParameterError("family " + name + " needs r >= 1");
  if (family == Family::no_small_even && r % 2 == 0)
    throw ParameterError("family pe needs odd r, got " + std::to_string(r));
  if (family == Family::two_colored_odd && r % 2 == 1)
    throw ParameterError("family po2 needs even r, got " + std::to_string(r));
  return FamilyId{family, r};
}

bool in_mex_at_least(const Partition& p, unsigned r) {
  return mex_sequence(p).length_at_least(r);
}

bool in_restricted_overpartitions(const Overpartition& op, unsigned r) {
  return std::ranges::all_of(op.plain().parts(), [r](Part x) {
    return x > r && x % 2 == (r + 1) % 2;
  });
}

bool in_no_small_even(const Partition& p, unsigned r) {
  return std::ranges::none_of(p.parts(), [r](Part x) { return x % 2 == 0 && x < r; });
}

bool in_two_colored_odd(const ColoredPartition& c, unsigned r) {
  return std::ranges::all_of(c.parts(), [r](const ColoredPart& part) {
    return part.size % 2 == 1 && (part.color == Color::first || part.size > r);
  });
}

bool is_member(const FamilyId& f, const FamilyObject& obj) {
  switch (f.family) {
    case Family::partitions:
      return std::holds_alternative<Partition>(obj);
    case Family::overpartitions:
      return std::holds_alternative<Overpartition>(obj);
    case Family::mex_at_least:
      return std::holds_alternative<Partition>(obj) &&
             in_mex_at_least(std::get<Partition>(obj), f.r);
    case Family::restricted_overpartitions:
      return std::holds_alternative<Overpartition>(obj) &&
             in_restricted_overpartitions(std::get<Overpartition>(obj), f.r);
    case Family::no_small_even:
      return std::holds_alternative<Partition>(obj) &&
             in_no_small_even(std::get<Partition>(obj), f.r);
    case Family::two_colored_odd:
      return std::holds_alternative<ColoredPartition>(obj) &&
             in_two_colored_odd(std::get<ColoredPartition>(obj), f.r);
  }
  return false;
}

std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<Part> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Overpartition> all_overpartitions(unsigned n) {
  std::vector<Overpartition> out;
  for (const auto& p : all_partitions(n)) {
    const auto sizes = runs(p);
    const std::size_t k = sizes.size();
    // Bit (k-1-j) overlines the first copy of the j-th largest size, so
    // counting upward walks the mark sequences in ascending order.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Part> overlined, plain;
      for (std::size_t j = 0; j < k; ++j) {
        auto [size, count] = sizes[j];
        if (mask >> (k - 1 - j) & 1) {
          overlined.push_back(size);
          --count;
        }
        plain.insert(plain.end(), count, size);
      }
      out.emplace_back(Partition(std::move(overlined)), Partition(std::move(plain)));
    }
  }
  return out;
}

std::vector<ColoredPartition> all_two_colored_odd(unsigned n) {
  std::vector<ColoredPartition> out;
  for (const auto& p : all_partitions(n)) {
    if (!has_only_odd_parts(p)) continue;
    const auto sizes = runs(p);
    // seconds[j] copies of the j-th size take color 2; odometer with the
    // last size turning fastest.
    std::vector<std::size_t> seconds(sizes.size(), 0);
    while (true) {
      std::vector<ColoredPart> parts;
      for (std::size_t j = 0; j < sizes.size(); ++j) {
        auto [size, count] = sizes[j];
        parts.insert(parts.end(), count - seconds[j], ColoredPart{size, Color::first});
        parts.insert(parts.end(), seconds[j], ColoredPart{size, Color::second});
      }
      out.emplace_back(std::move(parts));

      std::size_t j = sizes.size();
      while (j > 0 && seconds[j - 1] == sizes[j - 1].second) seconds[--j] = 0;
      if (j == 0) break;
      ++seconds[j - 1];
    }
  }
  return out;
}

std::vector<FamilyObject> enumerate_family(const FamilyId& f, unsigned n) {
  const FamilyId checked = FamilyId::make(f.family, f.r);
  const unsigned r = checked.r;
  switch (checked.family) {
    case Family::partitions:
      return filtered(all_partitions(n), [](const Partition&) { return true; });
    case Family::overpartitions:
      return filtered(all_overpartitions(n), [](const Overpartition&) { return true; });
    case Family::mex_at_least:
      return filtered(all_partitions(n),
                      [r](const Partition& p) { return in_mex_at_least(p, r); });
    case Family::restricted_overpartitions:
      return filtered(all_overpartitions(n), [r](const Overpartition& op) {
        return in_restricted_overpartitions(op, r);
      });
    case Family::no_small_even:
      return filtered(all_partitions(n),
                      [r](const Partition& p) { return in_no_small_even(p, r); });
    case Family::two_colored_odd:
      return filtered(all_two_colored_odd(n), [r](const ColoredPartition& c) {
        return in_two_colored_odd(c, r);
      });
  }
  throw ParameterError("unknown family");
}

std::uint64_t count_family(const FamilyId& f, unsigned n) {
  return enumerate_family(f, n).size();
}

std::vector<Partition> mex_at_least_members(unsigned r, unsigned n) {
  return unwrap<Partition>(enumerate_family(FamilyId::make(Family::mex_at_least, r), n));
}

std::vector<Overpartition> restricted_overpartition_members(unsigned r, unsigned n) {
  return unwrap<Overpartition>(
      enumerate_family(FamilyId::make(Family::restricted_overpartitions, r), n));
}

std::vector<Partition> no_small_even_members(unsigned r, unsigned n) {
  return unwrap<Partition>(enumerate_family(FamilyId::make(Family::no_small_even, r), n));
}

std::vector<ColoredPartition> two_colored_odd_members(unsigned r, unsigned n) {
  return unwrap<ColoredPartition>(
      enumerate_family(FamilyId::make(Family::two_colored_odd, r), n));
}

}  // namespace mexpart
