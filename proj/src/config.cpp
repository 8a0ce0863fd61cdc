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

#include "jobpulse/config.hpp"

#include <algorithm>
#include <charconv>

#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"
#include "jobpulse/text.hpp"

namespace jobpulse {

namespace {

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> out;
  std::string current;
  for (char c : value) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::size_t ParseCount(std::string_view key, std::string_view value) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ValidationError("config: " + std::string(key) + " expects a non-negative integer, got '" +
                          std::string(value) + "'");
  }
  return n;
}

Date ParseDateValue(std::string_view key, std::string_view value) {
  auto d = Date::Parse(value);
  if (!d) throw ValidationError("config: " + std::string(key) + " expects YYYY-MM-DD, got '" + std::string(value) + "'");
  return *d;
}

std::vector<std::string> NormalizedWords(std::string_view key, std::string_view value) {
  std::vector<std::string> out;
  for (const auto &item : SplitList(value)) {
    const TokenSeq tokens = NormalizeText(item);
    if (tokens.size() != 1) {
      throw ValidationError("config: " + std::string(key) + " entry '" + item + "' is not a single word");
    }
    out.push_back(tokens.front());
  }
  return out;
}

std::string Join(const std::vector<std::string> &items) {
  std::string out;
  for (const auto &s : items) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

}  // namespace

void PipelineConfig::Set(std::string_view key, std::string_view value, const std::filesystem::path &base_dir) {
  auto path_value = [&] {
    std::filesystem::path p{std::string(value)};
    return (p.is_relative() && !base_dir.empty()) ? base_dir / p : p;
  };
  if (key == "taxonomy") {
    taxonomy_path = path_value();
  } else if (key == "dictionary") {
    dictionary_path = path_value();
  } else if (key == "industry_token") {
    industry_token = NormalizeIndustryToken(value);
  } else if (key == "filter_mode") {
    auto mode = ParseFilterMode(value);
    if (!mode) throw ValidationError("config: filter_mode must be any_field or all_fields, got '" + std::string(value) + "'");
    filter_mode = *mode;
  } else if (key == "regions") {
    regions.clear();
    for (const auto &code : SplitList(value)) {
      auto r = ParseRegion(code);
      if (!r) throw ValidationError("config: unknown region '" + code + "'");
      if (std::find(regions.begin(), regions.end(), *r) == regions.end()) regions.push_back(*r);
    }
    std::sort(regions.begin(), regions.end());
  } else if (key == "window_start") {
    window.first = ParseDateValue(key, value);
  } else if (key == "window_end") {
    window.last = ParseDateValue(key, value);
  } else if (key == "output") {
    output_dir = path_value();
  } else if (key == "format") {
    if (value == "csv") {
      format = OutputFormat::kCsv;
    } else if (value == "text") {
      format = OutputFormat::kText;
    } else {
      throw ValidationError("config: format must be csv or text, got '" + std::string(value) + "'");
    }
  } else if (key == "min_count") {
    discovery.min_count = ParseCount(key, value);
  } else if (key == "role_words") {
    discovery.role_words = NormalizedWords(key, value);
  } else if (key == "legal_suffixes") {
    canonicalize.legal_suffixes = NormalizedWords(key, value);
  } else if (key == "top_k") {
    top_k = ParseCount(key, value);
  } else {
    throw ValidationError("config: unknown key '" + std::string(key) + "'");
  }
}

void PipelineConfig::Validate() const {
  if (taxonomy_path.empty()) throw ValidationError("config: taxonomy path not set");
  if (!std::filesystem::is_regular_file(taxonomy_path)) {
    throw ValidationError("config: taxonomy file not found: " + taxonomy_path.string());
  }
  if (dictionary_path.empty()) throw ValidationError("config: dictionary path not set");
  if (!std::filesystem::is_regular_file(dictionary_path)) {
    throw ValidationError("config: dictionary file not found: " + dictionary_path.string());
  }
  if (regions.empty()) throw ValidationError("config: regions must name at least one of LA, SB, SD");
  NormalizeIndustryToken(industry_token);
  if (window.last < window.first) throw ValidationError("config: window_end precedes window_start");
  if (discovery.role_words.empty()) throw ValidationError("config: role_words is empty");
}

std::string PipelineConfig::Canonical() const {
  std::vector<std::string> region_codes;
  for (Region r : regions) region_codes.emplace_back(RegionCode(r));
  std::string out;
  out += "dictionary = " + dictionary_path.filename().string() + "\n";
  out += "filter_mode = " + std::string(FilterModeName(filter_mode)) + "\n";
  out += "format = " + std::string(format == OutputFormat::kCsv ? "csv" : "text") + "\n";
  out += "industry_token = " + industry_token + "\n";
  out += "legal_suffixes = " + Join(canonicalize.legal_suffixes) + "\n";
  out += "min_count = " + std::to_string(discovery.min_count) + "\n";
  out += "regions = " + Join(region_codes) + "\n";
  out += "role_words = " + Join(discovery.role_words) + "\n";
  out += "taxonomy = " + taxonomy_path.filename().string() + "\n";
  out += "top_k = " + std::to_string(top_k) + "\n";
  out += "window_end = " + window.last.ToString() + "\n";
  out += "window_start = " + window.first.ToString() + "\n";
  return out;
}

std::string PipelineConfig::Hash() const { return Sha256Hex(Canonical()); }

void ApplyConfigText(std::string_view text, const std::string &source, const std::filesystem::path &base_dir,
                     PipelineConfig &config) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = TrimLine(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line_no, "expected 'key = value'");
    const std::string_view key = TrimLine(line.substr(0, eq));
    const std::string_view value = TrimLine(line.substr(eq + 1));
    if (key.empty()) throw ParseError(source, line_no, "empty key");
    try {
      config.Set(key, value, base_dir);
    } catch (const ValidationError &e) {
      throw ValidationError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

PipelineConfig LoadConfig(const std::filesystem::path &path) {
  PipelineConfig config;
  ApplyConfigText(ReadFile(path), path.string(), path.parent_path(), config);
  return config;
}

}  // namespace jobpulse
