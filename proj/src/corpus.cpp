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

#include "jobpulse/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <map>
#include <utility>

#include <json.hpp>

#include "jobpulse/io.hpp"
#include "jobpulse/text.hpp"

namespace jobpulse {

std::string_view RegionCode(Region region) {
  switch (region) {
    case Region::kLA: return "LA";
    case Region::kSB: return "SB";
    case Region::kSD: return "SD";
  }
  return "?";
}

std::optional<Region> ParseRegion(std::string_view code) {
  if (code == "LA") return Region::kLA;
  if (code == "SB") return Region::kSB;
  if (code == "SD") return Region::kSD;
  return std::nullopt;
}

std::optional<Date> Date::Parse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto digits = [&](std::size_t from, std::size_t n) -> std::optional<int> {
    int v = 0;
    for (std::size_t i = from; i < from + n; ++i) {
      if (text[i] < '0' || text[i] > '9') return std::nullopt;
      v = v * 10 + (text[i] - '0');
    }
    return v;
  };
  auto y = digits(0, 4), m = digits(5, 2), d = digits(8, 2);
  if (!y || !m || !d || *m < 1 || *m > 12 || *d < 1) return std::nullopt;
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  const bool leap = (*y % 4 == 0 && *y % 100 != 0) || *y % 400 == 0;
  const int limit = kDays[*m - 1] + ((*m == 2 && leap) ? 1 : 0);
  if (*d > limit) return std::nullopt;
  return Date{*y, *m, *d};
}

std::string Date::ToString() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

namespace {

struct ParsedLine {
  Posting posting;
  std::size_t line;
};

struct FileParse {
  std::vector<ParsedLine> postings;
  std::vector<Diagnostic> rejected;
  std::size_t record_lines = 0;
};

const char *const kFields[] = {"job_id", "title", "job_description", "employer_name", "employer_description",
                               "region", "retrieved_at"};

std::optional<std::string> ParseRecord(std::string_view line, const IngestOptions &options, Posting &out) {
  auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return "malformed JSON";
  if (!doc.is_object()) return "record is not a JSON object";
  std::map<std::string, std::string> values;
  for (const char *field : kFields) {
    auto it = doc.find(field);
    if (it == doc.end()) return std::string("missing field '") + field + "'";
    if (!it->is_string()) return std::string("field '") + field + "' is not a string";
    values[field] = it->get<std::string>();
  }
  out.job_id = std::move(values["job_id"]);
  if (TrimLine(out.job_id).empty()) return "empty job_id";
  out.title = std::move(values["title"]);
  out.job_description = std::move(values["job_description"]);
  out.employer_name = std::move(values["employer_name"]);
  if (NormalizeText(out.employer_name).empty()) return "employer_name has no word characters";
  out.employer_description = std::move(values["employer_description"]);
  const auto region = ParseRegion(values["region"]);
  if (!region) return "unknown region '" + values["region"] + "'";
  if (std::find(options.regions.begin(), options.regions.end(), *region) == options.regions.end()) {
    return "region " + values["region"] + " not selected";
  }
  out.region = *region;
  const auto date = Date::Parse(values["retrieved_at"]);
  if (!date) return "malformed retrieved_at '" + values["retrieved_at"] + "'";
  if (!options.window.Contains(*date)) {
    return "retrieved_at " + date->ToString() + " outside collection window " + options.window.first.ToString() +
           ".." + options.window.last.ToString();
  }
  out.retrieved_at = *date;
  return std::nullopt;
}

FileParse ParseText(std::string_view text, const std::string &source, const IngestOptions &options) {
  FileParse result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = TrimLine(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    ++result.record_lines;
    Posting posting;
    if (auto reason = ParseRecord(line, options, posting)) {
      result.rejected.push_back({source, line_no, std::move(*reason)});
    } else {
      result.postings.push_back({std::move(posting), line_no});
    }
  }
  return result;
}

IngestResult Merge(std::vector<std::pair<std::string, FileParse>> files) {
  IngestResult result;
  std::map<std::pair<std::string, Region>, std::pair<std::string, std::size_t>> seen;
  for (auto &[source, parse] : files) {
    result.corpus.provenance.sources.push_back(source);
    result.record_lines += parse.record_lines;
    // Keep diagnostics in line order within each file.
    std::vector<Diagnostic> diagnostics = std::move(parse.rejected);
    for (auto &entry : parse.postings) {
      auto key = std::make_pair(entry.posting.job_id, entry.posting.region);
      auto [it, inserted] = seen.emplace(key, std::make_pair(source, entry.line));
      if (!inserted) {
        ++result.duplicate_count;
        diagnostics.push_back({source, entry.line,
                               "duplicate job_id '" + entry.posting.job_id + "' in region " +
                                   std::string(RegionCode(entry.posting.region)) + " (first seen at " +
                                   it->second.first + ":" + std::to_string(it->second.second) + ")"});
        continue;
      }
      result.corpus.postings.push_back(std::move(entry.posting));
    }
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic &a, const Diagnostic &b) { return a.line < b.line; });
    for (auto &d : diagnostics) result.rejected.push_back(std::move(d));
  }
  result.corpus.provenance.loaded_at = std::chrono::system_clock::now();
  return result;
}

}  // namespace

IngestResult ParsePostings(std::string_view text, const std::string &source, const IngestOptions &options) {
  std::vector<std::pair<std::string, FileParse>> files;
  files.emplace_back(source, ParseText(text, source, options));
  return Merge(std::move(files));
}

IngestResult LoadPostings(std::span<const std::filesystem::path> paths, const IngestOptions &options) {
  // Read up front so an unreadable file fails before any parsing work.
  std::vector<std::string> contents;
  contents.reserve(paths.size());
  for (const auto &p : paths) contents.push_back(ReadFile(p));

  std::vector<std::future<FileParse>> jobs;
  jobs.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return ParseText(contents[i], paths[i].string(), options);
    }));
  }
  std::vector<std::pair<std::string, FileParse>> files;
  for (std::size_t i = 0; i < paths.size(); ++i) files.emplace_back(paths[i].string(), jobs[i].get());
  return Merge(std::move(files));
}

std::string PostingToJsonLine(const Posting &posting) {
  nlohmann::ordered_json doc;
  doc["job_id"] = posting.job_id;
  doc["title"] = posting.title;
  doc["job_description"] = posting.job_description;
  doc["employer_name"] = posting.employer_name;
  doc["employer_description"] = posting.employer_description;
  doc["region"] = std::string(RegionCode(posting.region));
  doc["retrieved_at"] = posting.retrieved_at.ToString();
  return doc.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

}  // namespace jobpulse
