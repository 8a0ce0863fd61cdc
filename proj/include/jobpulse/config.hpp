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

#ifndef JOBPULSE_CONFIG_HPP_
#define JOBPULSE_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jobpulse/corpus.hpp"
#include "jobpulse/employers.hpp"
#include "jobpulse/matcher.hpp"

namespace jobpulse {

enum class OutputFormat { kCsv, kText };

struct PipelineConfig {
  std::filesystem::path taxonomy_path;
  std::filesystem::path dictionary_path;
  std::string industry_token = "semiconductor";
  FilterMode filter_mode = FilterMode::kAnyField;
  std::vector<Region> regions{kAllRegions.begin(), kAllRegions.end()};
  CollectionWindow window;
  std::filesystem::path output_dir = "jobpulse-out";
  OutputFormat format = OutputFormat::kCsv;
  DiscoveryOptions discovery;
  CanonicalizeOptions canonicalize;
  std::size_t top_k = 3;

  // Sets one key from its textual value. Relative paths resolve against
  // |base_dir|. Throws ValidationError on unknown keys or bad values.
  void Set(std::string_view key, std::string_view value, const std::filesystem::path &base_dir = {});

  // Throws ValidationError unless both input files exist, regions is
  // non-empty and the industry token is a single token.
  void Validate() const;

  // Sorted `key = value` lines covering every setting that affects
  // artifact content. Paths are reduced to file names; the output directory
  // is omitted.
  std::string Canonical() const;
  std::string Hash() const;
};

// Applies `key = value` lines ('#' comments, blank lines allowed) on top of
// |config|.
void ApplyConfigText(std::string_view text, const std::string &source, const std::filesystem::path &base_dir,
                     PipelineConfig &config);

PipelineConfig LoadConfig(const std::filesystem::path &path);

}  // namespace jobpulse

#endif  // JOBPULSE_CONFIG_HPP_
