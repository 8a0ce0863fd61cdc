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

#include "jobpulse/pipeline.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"

namespace jobpulse {

namespace {

std::string Ext(const PipelineConfig &config) { return config.format == OutputFormat::kCsv ? ".csv" : ".txt"; }

std::string TableStem(JobFunction f) {
  switch (f) {
    case JobFunction::kScientist: return "demand_scientist";
    case JobFunction::kEngineer: return "demand_engineer";
    case JobFunction::kTechnician: return "demand_technician";
    case JobFunction::kOperationalSupport: return "demand_operational_support";
  }
  return "demand";
}

std::string MatchesCsv(const MatchStage &stage, const Taxonomy &taxonomy) {
  CsvWriter csv({"job_id", "region", "term", "level", "function", "in_title", "kept"});
  for (std::size_t i = 0; i < stage.records.size(); ++i) {
    const auto &r = stage.records[i];
    for (const auto &m : r.matches) {
      const Jst &jst = taxonomy.jsts()[m.jst];
      csv.Row({r.job_id, std::string(RegionCode(r.region)), jst.phrase,
               jst.level == JstLevel::kFamily ? "family" : "title", std::string(FunctionName(taxonomy.FunctionOf(jst))),
               m.in_title ? "1" : "0", stage.kept[i] ? "1" : "0"});
    }
  }
  return csv.str();
}

std::string MatchesText(const MatchStage &stage, const Taxonomy &taxonomy) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < stage.records.size(); ++i) {
    const auto &r = stage.records[i];
    std::string terms;
    for (const auto &m : r.matches) {
      if (!terms.empty()) terms += "; ";
      terms += taxonomy.jsts()[m.jst].phrase;
    }
    rows.push_back({r.job_id + " " + std::string(RegionCode(r.region)), stage.kept[i] ? "kept" : "dropped", terms});
  }
  return RenderTextTable({"posting", "industry", "terms"}, rows);
}

std::string CandidatesCsv(const std::vector<CandidateTitle> &candidates) {
  CsvWriter csv({"phrase", "count"});
  for (const auto &c : candidates) csv.Row({c.phrase, std::to_string(c.count)});
  return csv.str();
}

std::string CandidatesText(const std::vector<CandidateTitle> &candidates) {
  std::vector<std::vector<std::string>> rows;
  for (const auto &c : candidates) rows.push_back({c.phrase, std::to_string(c.count)});
  return RenderTextTable({"candidate title", "postings"}, rows);
}

std::string RatioArtifact(const std::optional<RatioReport> &ratio, const PipelineConfig &config) {
  if (config.format == OutputFormat::kCsv) {
    CsvWriter csv({"pair", "value", "value_num", "value_den", "nearest", "unit"});
    if (ratio) {
      csv.Row({"Technician:Engineer", ratio->decimal, boost::multiprecision::numerator(ratio->value).str(),
               boost::multiprecision::denominator(ratio->value).str(), ratio->NearestText(), ratio->UnitText()});
    }
    return csv.str();
  }
  if (!ratio) return "Technician:Engineer  undefined (no engineer demand)\n";
  return "Technician:Engineer  " + ratio->decimal + "  nearest " + ratio->NearestText() + "  about " +
         ratio->UnitText() + "\n";
}

}  // namespace

MatchStage RunMatchStage(std::span<const Posting> postings, const Taxonomy &taxonomy, const PipelineConfig &config) {
  const JstMatcher matcher(taxonomy);
  const std::string industry = NormalizeIndustryToken(config.industry_token);

  struct Chunk {
    std::vector<std::optional<MatchRecord>> records;
    std::vector<bool> in_industry;
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, postings.size() / 256));
  const std::size_t per = (postings.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<std::future<Chunk>> futures;
  for (std::size_t begin = 0; begin < postings.size(); begin += per) {
    const auto slice = postings.subspan(begin, std::min(per, postings.size() - begin));
    futures.push_back(std::async(std::launch::async, [&matcher, &industry, &config, slice] {
      Chunk chunk;
      chunk.records.reserve(slice.size());
      for (const auto &p : slice) {
        chunk.records.push_back(matcher.MatchPosting(p));
        chunk.in_industry.push_back(IndustryFilter(p, industry, config.filter_mode));
      }
      return chunk;
    }));
  }

  MatchStage stage;
  stage.in_industry.reserve(postings.size());
  std::size_t index = 0;
  for (auto &f : futures) {
    Chunk chunk = f.get();
    for (std::size_t i = 0; i < chunk.records.size(); ++i, ++index) {
      stage.in_industry.push_back(chunk.in_industry[i]);
      if (!chunk.records[i]) continue;
      const std::size_t k = chunk.records[i]->matches.size();
      stage.raw_observations += k;
      if (chunk.in_industry[i]) stage.kept_observations += k;
      stage.kept.push_back(chunk.in_industry[i]);
      stage.posting_index.push_back(index);
      stage.records.push_back(std::move(*chunk.records[i]));
    }
  }
  return stage;
}

PipelineResult RunPipeline(std::span<const Posting> postings, const Taxonomy &taxonomy,
                           const NameDictionary &dictionary, const PipelineConfig &config) {
  PipelineResult result;
  result.postings = postings.size();
  result.match = RunMatchStage(postings, taxonomy, config);
  const MatchStage &stage = result.match;

  std::vector<MatchRecord> kept_records;
  std::vector<Posting> kept_postings;
  for (std::size_t i = 0; i < stage.records.size(); ++i) {
    if (!stage.kept[i]) continue;
    kept_records.push_back(stage.records[i]);
    kept_postings.push_back(postings[stage.posting_index[i]]);
  }

  // Employer canonicalization is independent of weighting.
  std::vector<std::string> names;
  names.reserve(kept_records.size());
  for (const auto &r : kept_records) names.push_back(r.employer_name);
  auto mapping_future = std::async(std::launch::async, [&] { return Canonicalize(names, dictionary, config.canonicalize); });
  auto discovery_future = std::async(std::launch::async, [&] {
    std::vector<Posting> filtered;
    for (std::size_t i = 0; i < postings.size(); ++i) {
      if (stage.in_industry[i]) filtered.push_back(postings[i]);
    }
    return DiscoverCandidateTitles(filtered, taxonomy, config.discovery);
  });

  result.ledger = WeightAssignments(std::move(kept_records));
  result.cross_region = CrossRegionExpand(kept_postings);
  result.funnel = BuildFunnel({{"matched observations", stage.raw_observations},
                               {"industry filtered", stage.kept_observations},
                               {"demand units", result.ledger.unit_count()}});

  const auto &regions = config.regions;
  result.tables.push_back({"demand_function", DemandBy(DemandLevel::kFunction, result.ledger, taxonomy, {}, regions)});
  for (JobFunction f : kAllFunctions) {
    result.tables.push_back({TableStem(f), DemandBy(DemandLevel::kTitle, result.ledger, taxonomy, f, regions)});
  }
  result.tables.push_back({"demand_family", DemandBy(DemandLevel::kFamily, result.ledger, taxonomy, {}, regions)});
  result.tables.push_back({"demand_region", DemandBy(DemandLevel::kRegion, result.ledger, taxonomy, {}, regions)});

  const DemandTable &functions = result.tables.front().table;
  const DemandRow *tech = functions.Find(FunctionName(JobFunction::kTechnician));
  const DemandRow *eng = functions.Find(FunctionName(JobFunction::kEngineer));
  if (tech != nullptr && eng != nullptr && eng->total > 0 && tech->total > 0) {
    result.technician_engineer = Ratio(tech->total, eng->total);
  }

  result.mapping = mapping_future.get();
  result.employers = EmployerStats(result.ledger, result.mapping, config.top_k);
  result.candidates = discovery_future.get();
  return result;
}

std::vector<Artifact> MatchArtifacts(const PipelineResult &result, const Taxonomy &taxonomy,
                                     const PipelineConfig &config) {
  const bool csv = config.format == OutputFormat::kCsv;
  return {{"matches" + Ext(config), csv ? MatchesCsv(result.match, taxonomy) : MatchesText(result.match, taxonomy)},
          {"funnel" + Ext(config), csv ? result.funnel.ToCsv() : result.funnel.ToText()}};
}

std::vector<Artifact> DedupArtifacts(const PipelineResult &result, const Taxonomy &taxonomy,
                                     const PipelineConfig &config) {
  const bool csv = config.format == OutputFormat::kCsv;
  std::string cross = CrossRegionToCsv(result.cross_region);
  if (!csv) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t g = 0; g < result.cross_region.groups.size(); ++g) {
      for (const auto &[job_id, region] : result.cross_region.groups[g].members) {
        rows.push_back({std::to_string(g + 1), job_id, std::string(RegionCode(region))});
      }
    }
    cross = RenderTextTable({"group", "job_id", "region"}, rows);
  }
  return {{"ledger.csv", LedgerToCsv(result.ledger, taxonomy)},
          {"cross_region" + Ext(config), cross},
          {"funnel" + Ext(config), csv ? result.funnel.ToCsv() : result.funnel.ToText()}};
}

std::vector<Artifact> DisambiguateArtifacts(const PipelineResult &result, const PipelineConfig &config) {
  const bool csv = config.format == OutputFormat::kCsv;
  return {{"employer_map.csv", result.mapping.ToCsv()},
          {"employers" + Ext(config), csv ? result.employers.ToCsv() : result.employers.ToText()}};
}

std::vector<Artifact> ReportArtifacts(const PipelineResult &result, const Taxonomy &taxonomy,
                                      const PipelineConfig &config) {
  const bool csv = config.format == OutputFormat::kCsv;
  std::vector<Artifact> out;
  out.push_back({"funnel" + Ext(config), csv ? result.funnel.ToCsv() : result.funnel.ToText()});
  for (const auto &t : result.tables) {
    out.push_back({t.name + Ext(config), csv ? t.table.ToCsv() : t.table.ToText()});
  }
  out.push_back({"ratio" + Ext(config), RatioArtifact(result.technician_engineer, config)});
  for (auto &a : DisambiguateArtifacts(result, config)) out.push_back(std::move(a));
  out.push_back({"ledger.csv", LedgerToCsv(result.ledger, taxonomy)});
  return out;
}

std::vector<Artifact> DiscoverArtifacts(const PipelineResult &result, const PipelineConfig &config) {
  const bool csv = config.format == OutputFormat::kCsv;
  return {{"discovery" + Ext(config), csv ? CandidatesCsv(result.candidates) : CandidatesText(result.candidates)}};
}

void RunManifest::Set(std::string key, std::string value) {
  for (auto &[k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

std::string RunManifest::ToText() const {
  std::string out;
  for (const auto &[k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

std::string WriteArtifacts(const std::filesystem::path &dir, const std::vector<Artifact> &artifacts,
                           RunManifest &manifest) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  manifest.Set("artifact_count", std::to_string(artifacts.size()));
  for (const auto &a : artifacts) {
    WriteFileAtomic(dir / a.name, a.content);
    manifest.Set("artifact." + a.name + ".bytes", std::to_string(a.content.size()));
    manifest.Set("artifact." + a.name + ".sha256", Sha256Hex(a.content));
  }
  std::string text = manifest.ToText();
  WriteFileAtomic(dir / "manifest.txt", text);
  return text;
}

}  // namespace jobpulse
