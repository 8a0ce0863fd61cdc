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

#include "jobpulse/corpus.hpp"
#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"
#include "test_support.hpp"

namespace jobpulse {
namespace {

Posting Sample(const std::string &id, Region region = Region::kLA) {
  Posting p;
  p.job_id = id;
  p.title = "Product Engineer";
  p.job_description = "Join our semiconductor team.";
  p.employer_name = "Acme Devices";
  p.employer_description = "We make chips.";
  p.region = region;
  p.retrieved_at = Date{2025, 4, 1};
  return p;
}

TEST_CASE("Region and date parsing") {
  CHECK(ParseRegion("LA") == Region::kLA);
  CHECK(ParseRegion("SD") == Region::kSD);
  CHECK_FALSE(ParseRegion("la").has_value());
  CHECK_FALSE(ParseRegion("NYC").has_value());
  CHECK(Date::Parse("2025-03-15") == Date{2025, 3, 15});
  CHECK_FALSE(Date::Parse("2025-02-30").has_value());
  CHECK_FALSE(Date::Parse("2025-3-15").has_value());
  CHECK(Date{2025, 6, 4}.ToString() == "2025-06-04");
  CollectionWindow w;
  CHECK(w.Contains(Date{2025, 3, 15}));
  CHECK(w.Contains(Date{2025, 6, 4}));
  CHECK_FALSE(w.Contains(Date{2025, 6, 5}));
}

TEST_CASE("Posting JSON round-trips") {
  Posting p = Sample("42");
  p.job_description = "Line \"quoted\"\nnext \xC3\xA9";
  const std::string line = PostingToJsonLine(p);
  CHECK(line.find('\n') == std::string::npos);
  const IngestResult r = ParsePostings(line + "\n", "rt.jsonl");
  REQUIRE(r.corpus.postings.size() == 1);
  CHECK(r.corpus.postings[0] == p);
  CHECK(r.rejected.empty());
}

TEST_CASE("Record-level problems are rejected with line numbers, others kept") {
  std::string text;
  text += PostingToJsonLine(Sample("1")) + "\n";
  text += "{not json\n";
  text += "\n";
  text += "[1, 2]\n";
  text += R"({"job_id":"","title":"","job_description":"","employer_name":"A","employer_description":"","region":"LA","retrieved_at":"2025-04-01"})" "\n";
  text += R"({"job_id":"7","title":"","job_description":"","employer_name":"A","employer_description":"","region":"NYC","retrieved_at":"2025-04-01"})" "\n";
  text += R"({"job_id":"8","title":"","job_description":"","employer_name":"A","employer_description":"","region":"LA","retrieved_at":"2024-01-01"})" "\n";
  text += R"({"job_id":"9","title":"","job_description":"","employer_name":"A","employer_description":"","region":"LA"})" "\n";
  text += R"({"job_id":"10","title":"","job_description":"","employer_name":" -- ","employer_description":"","region":"LA","retrieved_at":"2025-04-01"})" "\n";
  text += PostingToJsonLine(Sample("11", Region::kSB)) + "\n";
  const IngestResult r = ParsePostings(text, "mixed.jsonl");
  CHECK(r.record_lines == 9);
  REQUIRE(r.corpus.postings.size() == 2);
  CHECK(r.corpus.postings[1].job_id == "11");
  REQUIRE(r.rejected.size() == 7);
  CHECK(r.rejected[0].line == 2);
  CHECK(r.rejected[1].line == 4);
  CHECK(r.rejected[2].reason == "empty job_id");
  CHECK(r.rejected[3].reason.find("unknown region") != std::string::npos);
  CHECK(r.rejected[4].reason.find("outside collection window") != std::string::npos);
  CHECK(r.rejected[5].reason.find("missing field 'retrieved_at'") != std::string::npos);
  CHECK(r.rejected[6].reason.find("employer_name") != std::string::npos);
  CHECK(r.duplicate_count == 0);
}

TEST_CASE("Duplicate (job_id, region) pairs are counted; same id in another region is distinct") {
  const auto dir = testing::ScratchDir("corpus_dup");
  WriteFileAtomic(dir / "la.jsonl", PostingToJsonLine(Sample("1")) + "\n" + PostingToJsonLine(Sample("2")) + "\n");
  WriteFileAtomic(dir / "sb.jsonl",
                  PostingToJsonLine(Sample("1", Region::kSB)) + "\n" + PostingToJsonLine(Sample("2")) + "\n");
  const std::vector<std::filesystem::path> paths{dir / "la.jsonl", dir / "sb.jsonl"};
  const IngestResult r = LoadPostings(paths);
  CHECK(r.corpus.postings.size() == 3);
  CHECK(r.duplicate_count == 1);
  REQUIRE(r.rejected.size() == 1);
  CHECK(r.rejected[0].reason.find("first seen at") != std::string::npos);
  CHECK(r.corpus.provenance.sources.size() == 2);
}

TEST_CASE("Region selection and window come from options") {
  IngestOptions options;
  options.regions = {Region::kSD};
  const IngestResult r = ParsePostings(PostingToJsonLine(Sample("1")) + "\n", "x", options);
  CHECK(r.corpus.postings.empty());
  CHECK(r.rejected.size() == 1);
}

TEST_CASE("Missing file is an IoError") {
  const std::vector<std::filesystem::path> paths{"/nonexistent/la.jsonl"};
  CHECK_THROWS_AS(LoadPostings(paths), IoError);
}

TEST_CASE("Loading is independent of thread scheduling") {
  const auto dir = testing::ScratchDir("corpus_order");
  std::vector<std::filesystem::path> paths;
  for (int f = 0; f < 6; ++f) {
    std::string text;
    for (int i = 0; i < 200; ++i) text += PostingToJsonLine(Sample(std::to_string(f * 1000 + i))) + "\n";
    paths.push_back(dir / ("f" + std::to_string(f) + ".jsonl"));
    WriteFileAtomic(paths.back(), text);
  }
  const IngestResult a = LoadPostings(paths);
  const IngestResult b = LoadPostings(paths);
  REQUIRE(a.corpus.postings.size() == 1200);
  CHECK(a.corpus.postings == b.corpus.postings);
  CHECK(a.corpus.postings.front().job_id == "0");
  CHECK(a.corpus.postings.back().job_id == "5199");
}

}  // namespace
}  // namespace jobpulse
