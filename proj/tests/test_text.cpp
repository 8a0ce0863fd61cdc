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
#include "jobpulse/io.hpp"
#include "jobpulse/rational.hpp"
#include "jobpulse/text.hpp"
#include "test_support.hpp"

namespace jobpulse {
namespace {

using testing::OracleTokens;

TEST_CASE("NormalizeText lowercases and splits on punctuation") {
  CHECK(NormalizeText("Senior RF Engineer, Fab 3") == TokenSeq{"senior", "rf", "engineer", "fab", "3"});
  CHECK(NormalizeText("RF-Engineer") == TokenSeq{"rf-engineer"});
  CHECK(NormalizeText("  --  ").empty());
  CHECK(NormalizeText("").empty());
  CHECK(NormalizeText("a--b -c d- e-f-g") == TokenSeq{"a", "b", "c", "d", "e-f-g"});
  CHECK(NormalizeText("Caf\xC3\xA9 Ing\xC3\xA9nieur") == TokenSeq{"caf\xC3\xA9", "ing\xC3\xA9nieur"});
}

TEST_CASE("NormalizeText agrees with the regex tokenizer on random text") {
  std::mt19937_64 rng(7);
  const std::string alphabet = "aZ9-- ,.;\t\n\"'()/\xC3\xA9_x";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    const std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    REQUIRE_MESSAGE(NormalizeText(s) == OracleTokens(s), "input: " << s);
  }
}

TEST_CASE("NormalizeText is idempotent on rendered tokens") {
  std::mt19937_64 rng(11);
  const std::string alphabet = "abAB1-- ,.";
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    for (std::size_t i = 0; i < rng() % 30; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    const TokenSeq once = NormalizeText(s);
    CHECK(NormalizeText(RenderTokens(once)) == once);
  }
}

TEST_CASE("BridgeHyphens splits hyphenated tokens only when present") {
  CHECK(BridgeHyphens(TokenSeq{"senior", "rf-engineer"}) == TokenSeq{"senior", "rf", "engineer"});
  CHECK(BridgeHyphens(TokenSeq{"rf", "engineer"}).empty());
  CHECK(BridgeHyphens(TokenSeq{"a-b-c"}) == TokenSeq{"a", "b", "c"});
}

TEST_CASE("ContainsRun finds contiguous token runs") {
  const TokenSeq hay{"senior", "product", "engineer"};
  CHECK(ContainsRun(hay, TokenSeq{"product", "engineer"}));
  CHECK_FALSE(ContainsRun(hay, TokenSeq{"senior", "engineer"}));
  CHECK_FALSE(ContainsRun(hay, TokenSeq{}));
  CHECK_FALSE(ContainsRun(TokenSeq{"a"}, TokenSeq{"a", "b"}));
}

TEST_CASE("TitleCase capitalizes word starts") {
  CHECK(TitleCase("post-silicon validation engineer") == "Post-Silicon Validation Engineer");
}

TEST_CASE("FormatDecimal rounds half away from zero exactly") {
  CHECK(FormatDecimal(Rational(4044, 1135), 1) == "3.6");
  CHECK(FormatDecimal(Rational(1, 20), 1) == "0.1");
  CHECK(FormatDecimal(Rational(-1, 20), 1) == "-0.1");
  CHECK(FormatDecimal(Rational(1, 3), 2) == "0.33");
  CHECK(FormatDecimal(Rational(7), 0) == "7");
  CHECK(FormatDecimal(Rational(-1, 100), 1) == "0.0");
  CHECK(FormatPercent(Rational(433, 4044)) == "10.7%");
  CHECK(FormatFraction(Rational(6, 4)) == "3/2");
}

TEST_CASE("FormatDecimal matches a long-division oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const long long num = static_cast<long long>(rng() % 200000);
    const long long den = 1 + static_cast<long long>(rng() % 997);
    // Round half up on non-negative values: floor((num * 100 + den / 2) / den) with exact halves.
    const long long scaled = (num * 200 + den) / (2 * den);
    std::string expected = std::to_string(scaled / 100) + "." + (scaled % 100 < 10 ? "0" : "") +
                           std::to_string(scaled % 100);
    CHECK(FormatDecimal(Rational(num, den), 2) == expected);
  }
}

TEST_CASE("ParseRational is exact") {
  CHECK(ParseRational("3/4") == Rational(3, 4));
  CHECK(ParseRational("0.75") == Rational(3, 4));
  CHECK(ParseRational(" 1e-2 ") == Rational(1, 100));
  CHECK(ParseRational("-2.5e1") == Rational(-25));
  CHECK(ParseRational("0.1") + ParseRational("0.2") == ParseRational("0.3"));
  CHECK_THROWS_AS(ParseRational("1/0"), ValidationError);
  CHECK_THROWS_AS(ParseRational("abc"), ValidationError);
  CHECK_THROWS_AS(ParseRational(""), ValidationError);
}

TEST_CASE("CSV escaping round-trips through SplitCsvLine") {
  const std::vector<std::string> fields{"plain", "with,comma", "with \"quote\"", "", "x"};
  CsvWriter csv(fields);
  std::string line = csv.str();
  line.pop_back();
  REQUIRE(SplitCsvLine(line).has_value());
  CHECK(*SplitCsvLine(line) == fields);
  CHECK_FALSE(SplitCsvLine("\"open").has_value());
}

TEST_CASE("Sha256Hex matches known digests") {
  CHECK(Sha256Hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(Sha256Hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("WriteFileAtomic replaces content and ReadFile reports missing files") {
  const auto dir = testing::ScratchDir("io");
  WriteFileAtomic(dir / "a.txt", "one");
  WriteFileAtomic(dir / "a.txt", "two");
  CHECK(ReadFile(dir / "a.txt") == "two");
  CHECK_FALSE(std::filesystem::exists(dir / "a.txt.tmp"));
  CHECK_THROWS_AS(ReadFile(dir / "missing.txt"), IoError);
}

TEST_CASE("RenderTextTable aligns columns") {
  const std::string t = RenderTextTable({"name", "n"}, {{"alpha", "1"}, {"b", "100"}});
  CHECK(t == "name     n\n----------\nalpha    1\nb      100\n");
}

}  // namespace
}  // namespace jobpulse
