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

#include <random>

#include "jobpulse/error.hpp"
#include "jobpulse/matcher.hpp"
#include "test_support.hpp"

namespace jobpulse {
namespace {

using testing::DefaultTaxonomy;

Posting Make(const std::string &title, const std::string &desc, const std::string &employer_desc = "") {
  Posting p;
  p.job_id = "1";
  p.title = title;
  p.job_description = desc;
  p.employer_name = "Acme";
  p.employer_description = employer_desc;
  return p;
}

std::vector<std::string> Phrases(const std::vector<JstMatch> &matches, const Taxonomy &t) {
  std::vector<std::string> out;
  for (const auto &m : matches) out.push_back(t.jsts()[m.jst].phrase);
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("Search phrases render and parse") {
  const Taxonomy &t = DefaultTaxonomy();
  const SearchPhrase sp = BuildSearchPhrase(*t.Lookup("product engineer"), "Semiconductor");
  CHECK(sp.Render() == "semiconductor \"product engineer\"");
  CHECK(ParseSearchPhrase(sp.Render()) == sp);
  CHECK_THROWS_AS(BuildSearchPhrase(*t.Lookup("product engineer"), ""), ValidationError);
  CHECK_THROWS_AS(BuildSearchPhrase(*t.Lookup("product engineer"), "semi conductor"), ValidationError);
  CHECK_THROWS_AS(ParseSearchPhrase("semiconductor product engineer"), ValidationError);
}

TEST_CASE("Matcher finds nested terms in title and description") {
  const Taxonomy &t = DefaultTaxonomy();
  const JstMatcher m(t);
  const auto matches = m.Match("Senior ASIC Design Engineer", "Works with the test engineer and yield team.");
  CHECK(Phrases(matches, t) == std::vector<std::string>{"asic design engineer", "design engineer", "test engineer"});
  for (const auto &x : matches) CHECK(x.in_title == (t.jsts()[x.jst].phrase != "test engineer"));
  CHECK(m.Match("Barista", "Coffee and pastries").empty());
  CHECK_FALSE(m.MatchPosting(Make("Barista", "coffee")).has_value());
}

TEST_CASE("Hyphenated text also matches the split spelling") {
  const Taxonomy t = ParseTaxonomy("function,family,title\nEngineer,rf engineer,\nEngineer,rf engineer,rf-engineer\n",
                                   "h.csv");
  const JstMatcher m(t);
  CHECK(Phrases(m.Match("RF-Engineer", ""), t) == std::vector<std::string>{"rf engineer", "rf-engineer"});
  CHECK(Phrases(m.Match("RF Engineer", ""), t) == std::vector<std::string>{"rf engineer"});
}

TEST_CASE("Matcher agrees with the all-pairs oracle on random corpora") {
  std::mt19937_64 rng(2024);
  std::size_t compared = 0;
  for (int round = 0; round < 20; ++round) {
    const Taxonomy t = testing::RandomTaxonomy(rng, 10 + rng() % 60);
    const JstMatcher m(t);
    for (int i = 0; i < 100; ++i) {
      const Posting p = Make(testing::RandomText(rng, t, rng() % 6), testing::RandomText(rng, t, rng() % 40));
      const auto got = m.Match(p.title, p.job_description);
      REQUIRE_MESSAGE(got == testing::OracleMatch(p, t), "title: " << p.title << " desc: " << p.job_description);
      ++compared;
    }
  }
  CHECK(compared == 2000);
}

TEST_CASE("Industry filter modes") {
  const Posting both = Make("x", "A semiconductor role", "Semiconductor maker");
  const Posting job_only = Make("x", "A semiconductor role", "Maker of things");
  const Posting employer_only = Make("x", "A role", "semiconductor-equipment maker");
  const Posting neither = Make("x", "semiconductors are plural", "no");
  CHECK(IndustryFilter(both, "semiconductor", FilterMode::kAllFields));
  CHECK(IndustryFilter(job_only, "semiconductor", FilterMode::kAnyField));
  CHECK_FALSE(IndustryFilter(job_only, "semiconductor", FilterMode::kAllFields));
  CHECK(IndustryFilter(employer_only, "semiconductor"));
  CHECK_FALSE(IndustryFilter(neither, "semiconductor"));
  CHECK_THROWS_AS(IndustryFilter(both, ""), ValidationError);
  CHECK(ParseFilterMode("all_fields") == FilterMode::kAllFields);
  CHECK_FALSE(ParseFilterMode("both").has_value());
}

TEST_CASE("Discovery proposes uncovered role n-grams with exact counts") {
  const Taxonomy &t = DefaultTaxonomy();
  std::vector<Posting> postings;
  for (int i = 0; i < 5; ++i) postings.push_back(Make("RF Engineer", ""));
  for (int i = 0; i < 3; ++i) postings.push_back(Make("Senior RF-Engineer", ""));
  for (int i = 0; i < 4; ++i) postings.push_back(Make("Microelectronics Technician II", ""));
  for (int i = 0; i < 9; ++i) postings.push_back(Make("Senior Product Engineer", ""));
  for (int i = 0; i < 9; ++i) postings.push_back(Make("Supply Chain Analyst", ""));
  for (int i = 0; i < 2; ++i) postings.push_back(Make("Radar Engineer", ""));
  const auto found = DiscoverCandidateTitles(postings, t);
  CHECK(found == std::vector<CandidateTitle>{{"rf engineer", 8}, {"microelectronics technician", 4},
                                             {"senior rf engineer", 3}});
  DiscoveryOptions loose;
  loose.min_count = 1;
  const auto all = DiscoverCandidateTitles(postings, t, loose);
  CHECK(std::find(all.begin(), all.end(), CandidateTitle{"radar engineer", 2}) != all.end());
}

TEST_CASE("Discovery on titles that are all taxonomy terms is empty") {
  const Taxonomy &t = DefaultTaxonomy();
  std::vector<Posting> postings;
  for (const auto &jst : t.jsts()) {
    for (int i = 0; i < 4; ++i) postings.push_back(Make(TitleCase(jst.phrase), ""));
    postings.push_back(Make("Lead " + TitleCase(jst.phrase), ""));
  }
  DiscoveryOptions options;
  options.min_count = 1;
  CHECK(DiscoverCandidateTitles(postings, t, options).empty());
}

}  // namespace
}  // namespace jobpulse
