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

#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "jobpulse/cli.hpp"
#include "jobpulse/config.hpp"
#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"
#include "jobpulse/pipeline.hpp"
#include "jobpulse/synth.hpp"
#include "test_support.hpp"

namespace jobpulse {
namespace {

using testing::DataDir;
using testing::DefaultDictionary;
using testing::DefaultTaxonomy;

PipelineConfig DefaultConfig() {
  PipelineConfig config;
  config.taxonomy_path = DataDir() / "taxonomy.csv";
  config.dictionary_path = DataDir() / "name_dictionary.txt";
  return config;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::map<std::string, std::string> ReadManifest(const std::filesystem::path &path) {
  std::map<std::string, std::string> out;
  std::istringstream in(ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    REQUIRE(eq != std::string::npos);
    out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

TEST_CASE("Pipeline recovers the generator's ground truth exactly") {
  SynthConfig synth;
  synth.n_postings = 3000;
  synth.seed = 11;
  const SynthOutput data = Generate(synth, DefaultTaxonomy(), DefaultDictionary());
  const PipelineResult result = RunPipeline(data.postings, DefaultTaxonomy(), DefaultDictionary(), DefaultConfig());

  std::map<std::pair<std::string, Region>, const PostingTruth *> truth;
  std::size_t on_industry = 0;
  for (const auto &t : data.truth.postings) {
    truth[{t.job_id, t.region}] = &t;
    on_industry += !t.off_industry;
  }

  // Off-industry drops and match sets.
  CHECK(result.match.records.size() == data.postings.size());
  for (std::size_t i = 0; i < result.match.records.size(); ++i) {
    const auto &r = result.match.records[i];
    const PostingTruth *t = truth.at({r.job_id, r.region});
    CHECK(result.match.kept[i] == !t->off_industry);
    std::vector<std::string> phrases;
    for (const auto &m : r.matches) phrases.push_back(DefaultTaxonomy().jsts()[m.jst].phrase);
    std::sort(phrases.begin(), phrases.end());
    CHECK(phrases == t->planted_jsts);
  }

  // Weights: 1/k for each planted term of each on-industry posting.
  CHECK(result.ledger.unit_count() == on_industry);
  CHECK(result.ledger.Total() == static_cast<long long>(on_industry));
  for (const auto &a : result.ledger.assignments) {
    const PostingTruth *t = truth.at({a.job_id, a.region});
    CHECK(a.weight == Rational(1, static_cast<long long>(t->planted_jsts.size())));
  }

  // Canonical employer groups equal the planted companies.
  std::map<std::string, std::set<std::string>> truth_groups;
  for (const auto &t : data.truth.postings) {
    if (!t.off_industry) truth_groups[t.employer_company].insert(t.employer_name);
  }
  std::set<std::set<std::string>> expected, got;
  for (auto &[company, names] : truth_groups) expected.insert(names);
  for (const auto &e : result.mapping.employers()) got.insert(std::set<std::string>(e.members.begin(), e.members.end()));
  CHECK(got == expected);

  // Cross-region repeats and planted titles.
  CHECK(result.cross_region.groups.size() == data.truth.cross_region_groups);
  std::map<std::string, std::size_t> found;
  for (const auto &c : result.candidates) found[c.phrase] = c.count;
  CHECK(found == data.truth.title_plants);
}

TEST_CASE("Config file parsing, flag overrides and canonical hash") {
  const auto dir = testing::ScratchDir("config");
  WriteFileAtomic(dir / "run.conf",
                  "# comment\n"
                  "taxonomy = " + (DataDir() / "taxonomy.csv").string() + "\n"
                  "dictionary = dict.txt\n"
                  "regions = LA, SD\n"
                  "filter_mode = all_fields\n"
                  "industry_token = Semiconductor\n"
                  "top_k = 5\n");
  const PipelineConfig config = LoadConfig(dir / "run.conf");
  CHECK(config.dictionary_path == dir / "dict.txt");
  CHECK(config.regions == std::vector<Region>{Region::kLA, Region::kSD});
  CHECK(config.filter_mode == FilterMode::kAllFields);
  CHECK(config.industry_token == "semiconductor");
  CHECK(config.top_k == 5);
  CHECK_THROWS_AS(config.Validate(), ValidationError);  // dict.txt does not exist

  PipelineConfig a = DefaultConfig();
  PipelineConfig b = DefaultConfig();
  b.output_dir = "/elsewhere";
  CHECK(a.Hash() == b.Hash());
  b.Set("filter_mode", "all_fields");
  CHECK(a.Hash() != b.Hash());

  PipelineConfig c;
  CHECK_THROWS_AS(c.Set("colour", "blue"), ValidationError);
  CHECK_THROWS_AS(c.Set("regions", "LA, NYC"), ValidationError);
  CHECK_THROWS_AS(c.Set("industry_token", ""), ValidationError);
  CHECK_THROWS_AS(c.Set("top_k", "-1"), ValidationError);
  c = DefaultConfig();
  c.Set("regions", "");
  CHECK_THROWS_AS(c.Validate(), ValidationError);
  PipelineConfig d;
  CHECK_THROWS_AS(ApplyConfigText("no equals sign\n", "x.conf", {}, d), ParseError);
}

TEST_CASE("CLI synth then report writes a complete manifest deterministically") {
  const auto dir = testing::ScratchDir("cli");
  const std::string tax = (DataDir() / "taxonomy.csv").string();
  const std::string dict = (DataDir() / "name_dictionary.txt").string();
  const CliRun synth = Cli({"synth", "--seed", "42", "--n-postings", "1500", "--taxonomy", tax, "--dictionary", dict,
                            "--out", (dir / "fixtures").string()});
  REQUIRE_MESSAGE(synth.code == 0, synth.err);
  const std::vector<std::string> inputs{(dir / "fixtures/la.jsonl").string(), (dir / "fixtures/sb.jsonl").string(),
                                        (dir / "fixtures/sd.jsonl").string()};

  std::vector<std::string> hashes;
  for (const char *out : {"run1", "run2"}) {
    std::vector<std::string> args{"report", "--config", (DataDir() / "jobpulse.conf").string(), "--out",
                                  (dir / out).string(), "--input"};
    args.insert(args.end(), inputs.begin(), inputs.end());
    const CliRun r = Cli(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const auto manifest = ReadManifest(dir / out / "manifest.txt");
    CHECK(manifest.at("subcommand") == "report");
    CHECK(manifest.at("count.postings") == "1507");
    std::size_t artifacts = 0;
    for (const auto &[key, value] : manifest) {
      if (key.rfind("artifact.", 0) != 0 || key.size() < 7 || key.substr(key.size() - 7) != ".sha256") continue;
      const std::string name = key.substr(9, key.size() - 9 - 7);
      const std::string content = ReadFile(dir / out / name);
      CHECK(!content.empty());
      CHECK(Sha256Hex(content) == value);
      ++artifacts;
    }
    CHECK(artifacts == 12);
    CHECK(std::to_string(artifacts) == manifest.at("artifact_count"));
    hashes.push_back(Sha256Hex(ReadFile(dir / out / "manifest.txt")));
  }
  CHECK(hashes[0] == hashes[1]);

  const CliRun again = Cli({"synth", "--seed", "42", "--n-postings", "1500", "--taxonomy", tax, "--dictionary", dict,
                            "--out", (dir / "fixtures2").string()});
  REQUIRE(again.code == 0);
  CHECK(ReadFile(dir / "fixtures/manifest.txt") == ReadFile(dir / "fixtures2/manifest.txt"));
}

TEST_CASE("CLI subcommands write their stage artifacts") {
  const auto dir = testing::ScratchDir("cli_stages");
  SynthConfig synth;
  synth.n_postings = 400;
  synth.unknown_title_plants = {{"rf engineer", 4}};
  const auto paths = WriteSynth(Generate(synth, DefaultTaxonomy(), DefaultDictionary()), dir / "in");
  const std::map<std::string, std::vector<std::string>> expected{
      {"ingest", {"rejects.csv", "ingest_summary.csv"}},
      {"match", {"matches.csv", "funnel.csv"}},
      {"dedup", {"ledger.csv", "cross_region.csv", "funnel.csv"}},
      {"disambiguate", {"employer_map.csv", "employers.csv"}},
      {"discover", {"discovery.csv"}}};
  for (const auto &[sub, files] : expected) {
    std::vector<std::string> args{sub, "--config", (DataDir() / "jobpulse.conf").string(), "--out",
                                  (dir / sub).string(), "--input"};
    for (const auto &p : paths) args.push_back(p.string());
    const CliRun r = Cli(args);
    REQUIRE_MESSAGE(r.code == 0, sub << ": " << r.err);
    for (const auto &f : files) CHECK_MESSAGE(std::filesystem::file_size(dir / sub / f) > 0, sub << "/" << f);
  }
  CHECK(ReadFile(dir / "discover/discovery.csv") == "phrase,count\nrf engineer,4\n");

  std::vector<std::string> args{"report", "--config", (DataDir() / "jobpulse.conf").string(), "--format", "text",
                                "--out", (dir / "text").string(), "--input"};
  for (const auto &p : paths) args.push_back(p.string());
  REQUIRE(Cli(args).code == 0);
  CHECK(ReadFile(dir / "text/demand_function.txt").rfind("Demand by function", 0) == 0);
}

TEST_CASE("CLI exit codes and single-line diagnostics") {
  const auto dir = testing::ScratchDir("cli_errors");
  Posting p;
  p.job_id = "1";
  p.title = "Product Engineer";
  p.job_description = "semiconductor";
  p.employer_name = "Acme";
  p.retrieved_at = Date{2025, 4, 1};
  WriteFileAtomic(dir / "dup.jsonl", PostingToJsonLine(p) + "\n" + PostingToJsonLine(p) + "\n");
  const std::string conf = (DataDir() / "jobpulse.conf").string();

  const CliRun dup = Cli({"report", "--config", conf, "--out", (dir / "o").string(), "--input",
                          (dir / "dup.jsonl").string()});
  CHECK(dup.code == 2);
  CHECK(dup.err.find("duplicate") != std::string::npos);

  const CliRun ingest = Cli({"ingest", "--config", conf, "--out", (dir / "i").string(), "--input",
                             (dir / "dup.jsonl").string()});
  CHECK(ingest.code == 2);
  CHECK(ReadFile(dir / "i/rejects.csv").find("first seen at") != std::string::npos);

  const CliRun missing = Cli({"report", "--config", conf, "--input", (dir / "none.jsonl").string()});
  CHECK(missing.code == 1);
  const CliRun bad_flag = Cli({"report", "--config", conf, "--filter-mode", "both", "--input",
                               (dir / "dup.jsonl").string()});
  CHECK(bad_flag.code == 1);
  CHECK(bad_flag.err.find("filter_mode") != std::string::npos);
  const CliRun no_sub = Cli({});
  CHECK(no_sub.code == 1);
  const CliRun empty_token = Cli({"report", "--config", conf, "--industry-token", "", "--input",
                                  (dir / "dup.jsonl").string()});
  CHECK(empty_token.code == 1);
  for (const auto *r : {&dup, &missing, &bad_flag, &no_sub, &empty_token}) {
    REQUIRE(!r->err.empty());
    CHECK(r->err.back() == '\n');
    std::istringstream lines(r->err);
    std::string line, last;
    while (std::getline(lines, line)) {
      CHECK(line.rfind("jobpulse: ", 0) == 0);
      last = line;
    }
    CHECK(last.find("warning") == std::string::npos);
  }
  CHECK(Cli({"--help"}).code == 0);
}

TEST_CASE("CLI reads the config path from JOBPULSE_CONFIG") {
  const auto dir = testing::ScratchDir("cli_env");
  SynthConfig synth;
  synth.n_postings = 200;
  synth.unknown_title_plants.clear();
  const auto paths = WriteSynth(Generate(synth, DefaultTaxonomy(), DefaultDictionary()), dir / "in");
  setenv("JOBPULSE_CONFIG", (DataDir() / "jobpulse.conf").string().c_str(), 1);
  std::vector<std::string> args{"match", "--out", (dir / "m").string(), "--input"};
  for (const auto &p : paths) args.push_back(p.string());
  const CliRun r = Cli(args);
  unsetenv("JOBPULSE_CONFIG");
  CHECK_MESSAGE(r.code == 0, r.err);
  CHECK(std::filesystem::exists(dir / "m/matches.csv"));
}

}  // namespace
}  // namespace jobpulse
