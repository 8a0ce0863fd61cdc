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

#ifndef JOBPULSE_SYNTH_HPP_
#define JOBPULSE_SYNTH_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "jobpulse/corpus.hpp"
#include "jobpulse/employers.hpp"
#include "jobpulse/rational.hpp"
#include "jobpulse/taxonomy.hpp"

namespace jobpulse {

struct TitlePlant {
  std::string phrase;
  std::size_t count = 0;
};

// Generator parameters. By default three quarters of postings are in LA, a
// third fall outside the industry, engineers take two thirds of demand and
// technicians a fifth, and 15% of employer names are divisions.
struct SynthConfig {
  std::uint64_t seed = 42;
  std::size_t n_postings = 6066;
  // Indexed by Region.
  std::array<Rational, 3> region_mix{Rational(3, 4), Rational(1, 10), Rational(3, 20)};
  // Indexed by JobFunction: Scientist, Engineer, Technician, OperationalSupport.
  std::array<Rational, 4> function_mix{Rational(7, 75), Rational(2, 3), Rational(1, 5), Rational(1, 25)};
  Rational off_industry_rate{1, 3};
  // Probability that a posting carries k = 1..5 terms.
  std::array<Rational, 5> multi_jst_rate_by_k{Rational(35, 100), Rational(30, 100), Rational(20, 100),
                                              Rational(10, 100), Rational(5, 100)};
  Rational division_rate{15, 100};
  // Fraction of division names whose parent company is also listed.
  Rational listed_parent_rate{7, 10};
  Rational onomastic_collision_rate{1, 4};
  std::size_t cross_region_repeat_count = 7;
  std::vector<TitlePlant> unknown_title_plants{
      {"microelectronics technician", 80}, {"rf engineer", 12}, {"radar engineer", 5}};
  // Raw employer names per demand unit.
  Rational employer_name_ratio{1269, 4044};
  std::string industry_token = "semiconductor";
  CollectionWindow window;

  // Throws ValidationError on rates outside [0, 1] or mixes not summing to
  // exactly one.
  void Validate() const;
};

struct PostingTruth {
  std::string job_id;
  Region region = Region::kLA;
  bool off_industry = false;
  std::vector<std::string> planted_jsts;  // sorted phrases
  std::string planted_title;              // out-of-taxonomy title, if any
  std::string employer_name;
  std::string employer_company;  // parent identity shared by all its names
  std::optional<std::size_t> cross_region_group;
};

struct GroundTruth {
  std::vector<PostingTruth> postings;  // parallel to SynthOutput::postings
  std::map<std::string, std::size_t> title_plants;
  std::size_t cross_region_groups = 0;
};

struct SynthOutput {
  std::vector<Posting> postings;
  GroundTruth truth;
};

// Deterministic for a given (config, taxonomy, dictionary). Planted terms
// appear verbatim in descriptions separated by filler words that are not
// part of any term, so the match set of every posting is exactly its
// planted set. Throws ValidationError if the taxonomy cannot support the
// configuration (e.g. a function with no plantable term).
SynthOutput Generate(const SynthConfig &config, const Taxonomy &taxonomy, const NameDictionary &dictionary);

// A stock of raw employer names with planted divisions and dictionary-word
// collisions; company[i] is the ground-truth identity of names[i].
struct EmployerNameSet {
  std::vector<std::string> names;
  std::vector<std::string> company;
  std::size_t divisions = 0;
  std::size_t listed_divisions = 0;
};

EmployerNameSet GenerateEmployerNames(std::size_t n_names, const SynthConfig &config, const NameDictionary &dictionary,
                                      std::uint64_t seed);

// "job_id,region,off_industry,planted_jsts,planted_title,employer_name,
//  employer_company,cross_region_group"; planted_jsts joined with ';'.
std::string TruthToCsv(const GroundTruth &truth);

// Writes la.jsonl, sb.jsonl, sd.jsonl and truth.csv under |dir| and returns
// the posting file paths.
std::vector<std::filesystem::path> WriteSynth(const SynthOutput &output, const std::filesystem::path &dir);

}  // namespace jobpulse

#endif  // JOBPULSE_SYNTH_HPP_
