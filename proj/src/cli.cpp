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

#include "jobpulse/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "jobpulse/config.hpp"
#include "jobpulse/corpus.hpp"
#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"
#include "jobpulse/pipeline.hpp"
#include "jobpulse/synth.hpp"
#include "jobpulse/taxonomy.hpp"

namespace jobpulse {

namespace {

constexpr const char *kVersion = "0.1.0";

struct Flags {
  std::string config;
  std::vector<std::string> inputs;
  std::map<std::string, std::string> overrides;
  std::vector<std::string> sets;

  // synth
  std::uint64_t seed = 42;
  std::optional<std::size_t> n_postings;
  std::optional<std::size_t> cross_region;
  std::vector<std::string> plants;
  bool no_plants = false;
  std::string off_industry_rate;
};

std::string OneLine(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

void AddConfigFlags(CLI::App *cmd, Flags &flags, bool with_inputs) {
  cmd->add_option("--config", flags.config, "Configuration file (default: $JOBPULSE_CONFIG)");
  if (with_inputs) cmd->add_option("--input", flags.inputs, "Posting files (JSON lines)")->required()->expected(1, -1);
  struct Mapped {
    const char *flag;
    const char *key;
    const char *help;
  };
  static const Mapped kMapped[] = {
      {"--out", "output", "Output directory"},
      {"--taxonomy", "taxonomy", "Taxonomy CSV"},
      {"--dictionary", "dictionary", "Name dictionary"},
      {"--industry-token", "industry_token", "Industry token"},
      {"--filter-mode", "filter_mode", "any_field or all_fields"},
      {"--regions", "regions", "Comma-separated region codes"},
      {"--window-start", "window_start", "First collection day (YYYY-MM-DD)"},
      {"--window-end", "window_end", "Last collection day (YYYY-MM-DD)"},
      {"--format", "format", "csv or text"},
      {"--min-count", "min_count", "Minimum postings per discovered title"},
      {"--top-k", "top_k", "Employers in the top-k share"},
  };
  for (const auto &m : kMapped) {
    const std::string key = m.key;
    cmd->add_option_function<std::string>(
        m.flag, [&flags, key](const std::string &v) { flags.overrides[key] = v; }, m.help);
  }
  cmd->add_option("--set", flags.sets, "Override any configuration key (key=value)");
}

PipelineConfig ResolveConfig(const Flags &flags) {
  PipelineConfig config;
  std::string path = flags.config;
  if (path.empty()) {
    if (const char *env = std::getenv("JOBPULSE_CONFIG"); env != nullptr) path = env;
  }
  if (!path.empty()) {
    if (!std::filesystem::is_regular_file(path)) throw ValidationError("config file not found: " + path);
    config = LoadConfig(path);
  }
  for (const auto &s : flags.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ValidationError("--set expects key=value, got '" + s + "'");
    config.Set(TrimLine(std::string_view(s).substr(0, eq)), TrimLine(std::string_view(s).substr(eq + 1)));
  }
  for (const auto &[key, value] : flags.overrides) config.Set(key, value);
  return config;
}

void WarnTaxonomy(const Taxonomy &taxonomy, std::ostream &err) {
  for (const auto &w : taxonomy.warnings()) err << "jobpulse: warning: taxonomy " << OneLine(w.Message()) << "\n";
}

void DescribeInputs(RunManifest &manifest, const std::vector<std::filesystem::path> &inputs,
                    const PipelineConfig &config, const std::string &subcommand) {
  manifest.Set("tool", std::string("jobpulse ") + kVersion);
  manifest.Set("subcommand", subcommand);
  manifest.Set("config_hash", config.Hash());
  std::string canonical = config.Canonical();
  std::size_t pos = 0;
  while (pos < canonical.size()) {
    const std::size_t end = canonical.find('\n', pos);
    const std::string line = canonical.substr(pos, end - pos);
    const std::size_t eq = line.find(" = ");
    manifest.Set("config." + line.substr(0, eq), line.substr(eq + 3));
    pos = end + 1;
  }
  manifest.Set("taxonomy.sha256", Sha256Hex(ReadFile(config.taxonomy_path)));
  manifest.Set("dictionary.sha256", Sha256Hex(ReadFile(config.dictionary_path)));
  manifest.Set("input_count", std::to_string(inputs.size()));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    manifest.Set("input." + std::to_string(i) + ".name", inputs[i].filename().string());
    manifest.Set("input." + std::to_string(i) + ".sha256", Sha256Hex(ReadFile(inputs[i])));
  }
}

std::string RejectsCsv(const IngestResult &ingest) {
  CsvWriter csv({"source", "line", "reason"});
  for (const auto &d : ingest.rejected) csv.Row({d.source, std::to_string(d.line), d.reason});
  return csv.str();
}

std::string IngestSummaryCsv(const IngestResult &ingest) {
  CsvWriter csv({"region", "postings"});
  std::array<std::size_t, 3> counts{};
  for (const auto &p : ingest.corpus.postings) ++counts[static_cast<std::size_t>(p.region)];
  for (Region r : kAllRegions) csv.Row({std::string(RegionCode(r)), std::to_string(counts[static_cast<std::size_t>(r)])});
  return csv.str();
}

void Finish(const std::filesystem::path &dir, const std::vector<Artifact> &artifacts, RunManifest &manifest,
            std::ostream &out) {
  const std::string text = WriteArtifacts(dir, artifacts, manifest);
  out << "wrote " << artifacts.size() << " artifacts to " << dir.string() << "\n";
  out << "manifest " << (dir / "manifest.txt").string() << " sha256 " << Sha256Hex(text) << "\n";
}

int RunPipelineCommand(const std::string &subcommand, const Flags &flags, std::ostream &out, std::ostream &err) {
  PipelineConfig config = ResolveConfig(flags);
  config.Validate();
  const Taxonomy taxonomy = LoadTaxonomy(config.taxonomy_path);
  WarnTaxonomy(taxonomy, err);
  const NameDictionary dictionary = NameDictionary::Load(config.dictionary_path);

  std::vector<std::filesystem::path> inputs(flags.inputs.begin(), flags.inputs.end());
  const IngestResult ingest = LoadPostings(inputs, IngestOptions{config.window, config.regions});

  RunManifest manifest;
  DescribeInputs(manifest, inputs, config, subcommand);
  manifest.Set("count.record_lines", std::to_string(ingest.record_lines));
  manifest.Set("count.postings", std::to_string(ingest.corpus.postings.size()));
  manifest.Set("count.rejected", std::to_string(ingest.rejected.size()));
  manifest.Set("count.duplicates", std::to_string(ingest.duplicate_count));

  if (!ingest.rejected.empty()) {
    err << "jobpulse: warning: " << ingest.rejected.size() << " of " << ingest.record_lines
        << " records rejected; first: " << ingest.rejected.front().source << ":" << ingest.rejected.front().line
        << ": " << OneLine(ingest.rejected.front().reason) << "\n";
  }

  if (subcommand == "ingest") {
    Finish(config.output_dir, {{"rejects.csv", RejectsCsv(ingest)}, {"ingest_summary.csv", IngestSummaryCsv(ingest)}},
           manifest, out);
  }
  if (ingest.duplicate_count > 0) {
    throw ContractError(std::to_string(ingest.duplicate_count) + " duplicate (job_id, region) records in input");
  }
  if (subcommand == "ingest") return 0;

  const PipelineResult result = RunPipeline(ingest.corpus.postings, taxonomy, dictionary, config);
  manifest.Set("count.matched_postings", std::to_string(result.match.records.size()));
  manifest.Set("count.raw_observations", std::to_string(result.match.raw_observations));
  manifest.Set("count.kept_observations", std::to_string(result.match.kept_observations));
  manifest.Set("count.demand_units", std::to_string(result.ledger.unit_count()));
  manifest.Set("count.raw_employer_names", std::to_string(result.employers.raw_names));
  manifest.Set("count.employers", std::to_string(result.employers.unique_employers));
  manifest.Set("count.cross_region_groups", std::to_string(result.cross_region.groups.size()));
  manifest.Set("count.candidate_titles", std::to_string(result.candidates.size()));

  std::vector<Artifact> artifacts;
  if (subcommand == "match") {
    artifacts = MatchArtifacts(result, taxonomy, config);
  } else if (subcommand == "dedup") {
    artifacts = DedupArtifacts(result, taxonomy, config);
  } else if (subcommand == "disambiguate") {
    artifacts = DisambiguateArtifacts(result, config);
  } else if (subcommand == "discover") {
    artifacts = DiscoverArtifacts(result, config);
  } else {
    artifacts = ReportArtifacts(result, taxonomy, config);
    out << result.funnel.ToText();
  }
  Finish(config.output_dir, artifacts, manifest, out);
  return 0;
}

int RunSynthCommand(const Flags &flags, std::ostream &out, std::ostream &err) {
  PipelineConfig config = ResolveConfig(flags);
  if (config.taxonomy_path.empty() || config.dictionary_path.empty()) {
    throw ValidationError("synth needs --taxonomy and --dictionary (or a config naming them)");
  }
  config.Validate();
  const Taxonomy taxonomy = LoadTaxonomy(config.taxonomy_path);
  WarnTaxonomy(taxonomy, err);
  const NameDictionary dictionary = NameDictionary::Load(config.dictionary_path);

  SynthConfig synth;
  synth.seed = flags.seed;
  synth.industry_token = config.industry_token;
  synth.window = config.window;
  if (flags.n_postings) synth.n_postings = *flags.n_postings;
  if (flags.cross_region) synth.cross_region_repeat_count = *flags.cross_region;
  if (!flags.off_industry_rate.empty()) synth.off_industry_rate = ParseRational(flags.off_industry_rate);
  if (flags.no_plants || !flags.plants.empty()) synth.unknown_title_plants.clear();
  for (const auto &p : flags.plants) {
    const auto eq = p.rfind('=');
    if (eq == std::string::npos) throw ValidationError("--plant expects phrase=count, got '" + p + "'");
    std::size_t count = 0;
    try {
      count = std::stoul(p.substr(eq + 1));
    } catch (const std::exception &) {
      throw ValidationError("--plant count is not a number in '" + p + "'");
    }
    synth.unknown_title_plants.push_back({p.substr(0, eq), count});
  }

  const SynthOutput output = Generate(synth, taxonomy, dictionary);
  const auto paths = WriteSynth(output, config.output_dir);

  RunManifest manifest;
  manifest.Set("tool", std::string("jobpulse ") + kVersion);
  manifest.Set("subcommand", "synth");
  manifest.Set("seed", std::to_string(synth.seed));
  manifest.Set("n_postings", std::to_string(synth.n_postings));
  manifest.Set("taxonomy.sha256", Sha256Hex(ReadFile(config.taxonomy_path)));
  manifest.Set("dictionary.sha256", Sha256Hex(ReadFile(config.dictionary_path)));
  manifest.Set("count.postings", std::to_string(output.postings.size()));
  manifest.Set("count.cross_region_groups", std::to_string(output.truth.cross_region_groups));
  std::vector<Artifact> artifacts;
  for (const auto &path : paths) artifacts.push_back({path.filename().string(), ReadFile(path)});
  artifacts.push_back({"truth.csv", TruthToCsv(output.truth)});
  Finish(config.output_dir, artifacts, manifest, out);
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"JobPulse: job-posting demand analysis", "jobpulse"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Flags flags;

  struct Command {
    const char *name;
    const char *help;
  };
  static const Command kPipelineCommands[] = {
      {"ingest", "Validate posting files and list rejected records"},
      {"match", "Match postings against the taxonomy and apply the industry filter"},
      {"dedup", "Weight multi-term postings into demand units"},
      {"disambiguate", "Canonicalize employer names"},
      {"report", "Run the full pipeline: funnel, demand tables and employer report"},
      {"discover", "Propose out-of-taxonomy job titles"},
  };
  for (const auto &c : kPipelineCommands) AddConfigFlags(app.add_subcommand(c.name, c.help), flags, true);

  CLI::App *synth = app.add_subcommand("synth", "Generate a synthetic corpus with ground truth");
  AddConfigFlags(synth, flags, false);
  synth->add_option("--seed", flags.seed, "Random seed");
  synth->add_option_function<std::size_t>(
      "--n-postings", [&flags](const std::size_t &n) { flags.n_postings = n; }, "Number of base postings");
  synth->add_option_function<std::size_t>(
      "--cross-region", [&flags](const std::size_t &n) { flags.cross_region = n; }, "Cross-region repeat count");
  synth->add_option("--off-industry-rate", flags.off_industry_rate, "Fraction of off-industry postings");
  synth->add_option("--plant", flags.plants, "Out-of-taxonomy title to plant (phrase=count)");
  synth->add_flag("--no-plants", flags.no_plants, "Plant no out-of-taxonomy titles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "jobpulse: error: " << OneLine(e.what()) << "\n";
    return 1;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    if (subcommand == "synth") return RunSynthCommand(flags, out, err);
    return RunPipelineCommand(subcommand, flags, out, err);
  } catch (const ContractError &e) {
    err << "jobpulse: contract violation: " << OneLine(e.what()) << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "jobpulse: error: " << OneLine(e.what()) << "\n";
    return 1;
  }
}

int RunCli(int argc, char **argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return RunCli(args, std::cout, std::cerr);
}

}  // namespace jobpulse
