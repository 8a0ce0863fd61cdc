// Copyright 2026 The JobPulse Authors.
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

#ifndef JOBPULSE_CORPUS_HPP_
#define JOBPULSE_CORPUS_HPP_

#include <array>
#include <chrono>
#include <compare>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jobpulse/error.hpp"

namespace jobpulse {

// Los Angeles metro, Santa Barbara County, San Diego metro.
enum class Region { kLA, kSB, kSD };

inline constexpr std::array<Region, 3> kAllRegions = {Region::kLA, Region::kSB, Region::kSD};

std::string_view RegionCode(Region region);

// Exactly "LA", "SB" or "SD".
std::optional<Region> ParseRegion(std::string_view code);

// Calendar date, YYYY-MM-DD.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  static std::optional<Date> Parse(std::string_view text);
  std::string ToString() const;

  friend auto operator<=>(const Date &, const Date &) = default;
};

struct CollectionWindow {
  Date first{2025, 3, 15};
  Date last{2025, 6, 4};

  bool Contains(const Date &d) const { return first <= d && d <= last; }
};

// One scraped job advertisement.
struct Posting {
  std::string job_id;
  std::string title;
  std::string job_description;
  std::string employer_name;
  std::string employer_description;
  Region region = Region::kLA;
  Date retrieved_at;

  friend bool operator==(const Posting &, const Posting &) = default;
};

struct Provenance {
  std::vector<std::string> sources;
  std::chrono::system_clock::time_point loaded_at;
};

// Validated postings. (job_id, region) is unique; the same content under
// different job ids in different regions is kept as distinct postings.
struct Corpus {
  std::vector<Posting> postings;
  Provenance provenance;
};

struct IngestOptions {
  CollectionWindow window;
  std::vector<Region> regions{kAllRegions.begin(), kAllRegions.end()};
};

struct IngestResult {
  Corpus corpus;
  std::vector<Diagnostic> rejected;
  // Records rejected because their (job_id, region) was already taken.
  std::size_t duplicate_count = 0;
  // Non-blank, non-comment lines seen; == postings + rejected.
  std::size_t record_lines = 0;
};

// Reads line-delimited JSON posting exports. Blank lines and lines starting
// with '#' are skipped. Every other line becomes a Posting or a Diagnostic.
// Files are parsed in parallel; results merge in input order, so the first
// occurrence of a duplicate (job_id, region) wins. Throws IoError when a
// file cannot be read.
IngestResult LoadPostings(std::span<const std::filesystem::path> paths, const IngestOptions &options = {});

// Same, over in-memory text; |source| names it in diagnostics.
IngestResult ParsePostings(std::string_view text, const std::string &source, const IngestOptions &options = {});

// One JSON object in the export format, without trailing newline. Keys are
// written in schema order.
std::string PostingToJsonLine(const Posting &posting);

}  // namespace jobpulse

#endif  // JOBPULSE_CORPUS_HPP_
