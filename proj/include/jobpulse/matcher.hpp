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

#ifndef JOBPULSE_MATCHER_HPP_
#define JOBPULSE_MATCHER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jobpulse/corpus.hpp"
#include "jobpulse/taxonomy.hpp"

namespace jobpulse {

// An industry token plus a quoted term, rendered as
//   semiconductor "product engineer"
struct SearchPhrase {
  std::string industry_token;
  std::string jst_phrase;

  std::string Render() const;

  friend bool operator==(const SearchPhrase &, const SearchPhrase &) = default;
};

// Normalizes an industry token and checks it is exactly one token.
// Throws ValidationError otherwise (including for the empty string).
std::string NormalizeIndustryToken(std::string_view token);

SearchPhrase BuildSearchPhrase(const Jst &jst, std::string_view industry_token);

// Inverse of SearchPhrase::Render. Throws ValidationError when |text| is not
// `<token> "<phrase>"`.
SearchPhrase ParseSearchPhrase(std::string_view text);

struct JstMatch {
  JstId jst = 0;
  bool in_title = false;

  friend bool operator==(const JstMatch &, const JstMatch &) = default;
};

// Which terms hit one posting. |matches| is non-empty and sorted by id.
struct MatchRecord {
  std::string job_id;
  Region region = Region::kLA;
  std::string employer_name;
  std::vector<JstMatch> matches;
};

// Exact, contiguous-token matching of every term in a taxonomy against
// posting text. A hyphenated token also matches as its parts, so the text
// "rf-engineer" contains the term "rf engineer". Immutable after
// construction and safe to share across threads.
class JstMatcher {
 public:
  explicit JstMatcher(const Taxonomy &taxonomy);

  // All terms occurring in |title| or |description|, sorted by id.
  std::vector<JstMatch> Match(std::string_view title, std::string_view description) const;

  // Terms occurring in an already normalized token sequence (and its
  // hyphen-bridged form), appended to |out| as ids; may contain repeats.
  void Scan(std::span<const std::string> tokens, std::vector<JstId> &out) const;

  std::optional<MatchRecord> MatchPosting(const Posting &posting) const;

  const Taxonomy &taxonomy() const { return taxonomy_; }

 private:
  struct Node {
    std::unordered_map<std::string, std::uint32_t> children;
    std::int64_t jst = -1;
  };

  void ScanStream(std::span<const std::string> tokens, std::vector<JstId> &out) const;

  const Taxonomy &taxonomy_;
  std::vector<Node> nodes_;
};

std::optional<MatchRecord> MatchPosting(const Posting &posting, const Taxonomy &taxonomy);

enum class FilterMode { kAnyField, kAllFields };

// "any_field" / "all_fields".
std::optional<FilterMode> ParseFilterMode(std::string_view text);
std::string_view FilterModeName(FilterMode mode);

// Keeps a posting when the industry token occurs as a token of the job
// description or the employer description (kAnyField), or of both
// (kAllFields). An empty field never matches.
bool IndustryFilter(const Posting &posting, std::string_view industry_token, FilterMode mode = FilterMode::kAnyField);

struct DiscoveryOptions {
  std::size_t min_count = 3;
  std::vector<std::string> role_words{"engineer", "technician", "scientist", "analyst", "administrator"};
  std::size_t min_length = 2;
  std::size_t max_length = 4;
};

struct CandidateTitle {
  std::string phrase;
  std::size_t count = 0;

  friend bool operator==(const CandidateTitle &, const CandidateTitle &) = default;
};

// Title n-grams ending in a role word that overlap no taxonomy term occurrence, counted
// once per posting. Only candidates seen in at least min_count postings are
// returned, by count descending then phrase ascending.
std::vector<CandidateTitle> DiscoverCandidateTitles(std::span<const Posting> postings, const Taxonomy &taxonomy,
                                                    const DiscoveryOptions &options = {});

}  // namespace jobpulse

#endif  // JOBPULSE_MATCHER_HPP_
