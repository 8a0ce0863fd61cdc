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

#ifndef JOBPULSE_PIPELINE_HPP_
#define JOBPULSE_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jobpulse/config.hpp"
#include "jobpulse/corpus.hpp"
#include "jobpulse/dedup.hpp"
#include "jobpulse/employers.hpp"
#include "jobpulse/matcher.hpp"
#include "jobpulse/report.hpp"
#include "jobpulse/taxonomy.hpp"

namespace jobpulse {

struct MatchStage {
  std::vector<MatchRecord> records;  // every matched posting, input order
  std::vector<std::size_t> posting_index;  // parallel to records
  std::vector<bool> kept;                  // parallel to records: passed the industry filter
  std::vector<bool> in_industry;           // parallel to the input postings
  std::size_t raw_observations = 0;        // (posting, term) pairs before the industry filter
  std::size_t kept_observations = 0;
};

// Matches and filters every posting. Work is split across threads; the
// result does not depend on the split.
MatchStage RunMatchStage(std::span<const Posting> postings, const Taxonomy &taxonomy, const PipelineConfig &config);

struct NamedTable {
  std::string name;  // artifact stem, e.g. "demand_engineer"
  DemandTable table;
};

struct PipelineResult {
  std::size_t postings = 0;
  MatchStage match;
  FunnelReport funnel;
  DemandLedger ledger;
  CrossRegionReport cross_region;
  EmployerMapping mapping;
  EmployerReport employers;
  // Function summary, one title table per function, then family and region.
  std::vector<NamedTable> tables;
  std::optional<RatioReport> technician_engineer;
  std::vector<CandidateTitle> candidates;
};

PipelineResult RunPipeline(std::span<const Posting> postings, const Taxonomy &taxonomy,
                           const NameDictionary &dictionary, const PipelineConfig &config);

struct Artifact {
  std::string name;
  std::string content;
};

std::vector<Artifact> MatchArtifacts(const PipelineResult &result, const Taxonomy &taxonomy,
                                     const PipelineConfig &config);
std::vector<Artifact> DedupArtifacts(const PipelineResult &result, const Taxonomy &taxonomy,
                                     const PipelineConfig &config);
std::vector<Artifact> DisambiguateArtifacts(const PipelineResult &result, const PipelineConfig &config);
std::vector<Artifact> ReportArtifacts(const PipelineResult &result, const Taxonomy &taxonomy,
                                      const PipelineConfig &config);
std::vector<Artifact> DiscoverArtifacts(const PipelineResult &result, const PipelineConfig &config);

// Flat `key = value` run manifest. Entries keep insertion order.
class RunManifest {
 public:
  void Set(std::string key, std::string value);
  const std::vector<std::pair<std::string, std::string>> &entries() const { return entries_; }
  std::string ToText() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Writes each artifact atomically under |dir|, records its size and sha256
// in |manifest|, then writes manifest.txt. Returns the manifest text.
std::string WriteArtifacts(const std::filesystem::path &dir, const std::vector<Artifact> &artifacts,
                           RunManifest &manifest);

}  // namespace jobpulse

#endif  // JOBPULSE_PIPELINE_HPP_
