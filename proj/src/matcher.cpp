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

#include "jobpulse/matcher.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "jobpulse/error.hpp"

namespace jobpulse {

std::string SearchPhrase::Render() const { return industry_token + " \"" + jst_phrase + "\""; }

std::string NormalizeIndustryToken(std::string_view token) {
  const TokenSeq tokens = NormalizeText(token);
  if (tokens.size() != 1) {
    throw ValidationError("industry token must be exactly one word, got '" + std::string(token) + "'");
  }
  return tokens.front();
}

SearchPhrase BuildSearchPhrase(const Jst &jst, std::string_view industry_token) {
  return {NormalizeIndustryToken(industry_token), jst.phrase};
}

SearchPhrase ParseSearchPhrase(std::string_view text) {
  const auto open = text.find(" \"");
  if (open == std::string_view::npos || text.size() < open + 3 || text.back() != '"') {
    throw ValidationError("malformed search phrase '" + std::string(text) + "'");
  }
  SearchPhrase out;
  out.industry_token = NormalizeIndustryToken(text.substr(0, open));
  if (RenderTokens(NormalizeText(text.substr(0, open))) != text.substr(0, open)) {
    throw ValidationError("search phrase token is not normalized: '" + std::string(text) + "'");
  }
  const std::string_view quoted = text.substr(open + 2, text.size() - open - 3);
  out.jst_phrase = RenderTokens(NormalizeText(quoted));
  if (out.jst_phrase.empty() || out.jst_phrase != quoted) {
    throw ValidationError("malformed quoted term in '" + std::string(text) + "'");
  }
  return out;
}

JstMatcher::JstMatcher(const Taxonomy &taxonomy) : taxonomy_(taxonomy) {
  nodes_.emplace_back();
  for (const auto &jst : taxonomy.jsts()) {
    std::uint32_t node = 0;
    for (const auto &token : jst.tokens) {
      auto it = nodes_[node].children.find(token);
      if (it == nodes_[node].children.end()) {
        const auto child = static_cast<std::uint32_t>(nodes_.size());
        nodes_[node].children.emplace(token, child);
        nodes_.emplace_back();
        node = child;
      } else {
        node = it->second;
      }
    }
    nodes_[node].jst = static_cast<std::int64_t>(jst.id);
  }
}

void JstMatcher::ScanStream(std::span<const std::string> tokens, std::vector<JstId> &out) const {
  for (std::size_t start = 0; start < tokens.size(); ++start) {
    std::uint32_t node = 0;
    for (std::size_t i = start; i < tokens.size(); ++i) {
      const auto &children = nodes_[node].children;
      auto it = children.find(tokens[i]);
      if (it == children.end()) break;
      node = it->second;
      if (nodes_[node].jst >= 0) out.push_back(static_cast<JstId>(nodes_[node].jst));
    }
  }
}

void JstMatcher::Scan(std::span<const std::string> tokens, std::vector<JstId> &out) const {
  ScanStream(tokens, out);
  const TokenSeq bridged = BridgeHyphens(tokens);
  if (!bridged.empty()) ScanStream(bridged, out);
}

std::vector<JstMatch> JstMatcher::Match(std::string_view title, std::string_view description) const {
  std::vector<JstId> in_title;
  std::vector<JstId> in_description;
  Scan(NormalizeText(title), in_title);
  Scan(NormalizeText(description), in_description);

  std::map<JstId, bool> merged;
  for (JstId id : in_title) merged[id] = true;
  for (JstId id : in_description) merged.emplace(id, false);
  std::vector<JstMatch> out;
  out.reserve(merged.size());
  for (const auto &[id, title_hit] : merged) out.push_back({id, title_hit});
  return out;
}

std::optional<MatchRecord> JstMatcher::MatchPosting(const Posting &posting) const {
  auto matches = Match(posting.title, posting.job_description);
  if (matches.empty()) return std::nullopt;
  return MatchRecord{posting.job_id, posting.region, posting.employer_name, std::move(matches)};
}

std::optional<MatchRecord> MatchPosting(const Posting &posting, const Taxonomy &taxonomy) {
  return JstMatcher(taxonomy).MatchPosting(posting);
}

std::optional<FilterMode> ParseFilterMode(std::string_view text) {
  if (text == "any_field") return FilterMode::kAnyField;
  if (text == "all_fields") return FilterMode::kAllFields;
  return std::nullopt;
}

std::string_view FilterModeName(FilterMode mode) {
  return mode == FilterMode::kAnyField ? "any_field" : "all_fields";
}

namespace {

bool HasToken(std::string_view text, const std::string &token) {
  const TokenSeq tokens = NormalizeText(text);
  if (std::find(tokens.begin(), tokens.end(), token) != tokens.end()) return true;
  const TokenSeq bridged = BridgeHyphens(tokens);
  return std::find(bridged.begin(), bridged.end(), token) != bridged.end();
}

}  // namespace

bool IndustryFilter(const Posting &posting, std::string_view industry_token, FilterMode mode) {
  const std::string token = NormalizeIndustryToken(industry_token);
  const bool in_job = HasToken(posting.job_description, token);
  if (mode == FilterMode::kAnyField && in_job) return true;
  const bool in_employer = HasToken(posting.employer_description, token);
  return mode == FilterMode::kAnyField ? in_employer : (in_job && in_employer);
}

std::vector<CandidateTitle> DiscoverCandidateTitles(std::span<const Posting> postings, const Taxonomy &taxonomy,
                                                    const DiscoveryOptions &options) {
  // Both spellings of every term, so "post silicon validation engineer" is
  // recognized as covered by "post-silicon validation engineer".
  std::unordered_set<std::string> known;
  std::size_t longest = 0;
  for (const auto &jst : taxonomy.jsts()) {
    known.insert(jst.phrase);
    longest = std::max(longest, jst.tokens.size());
    const TokenSeq bridged = BridgeHyphens(jst.tokens);
    if (!bridged.empty()) {
      known.insert(RenderTokens(bridged));
      longest = std::max(longest, bridged.size());
    }
  }
  const std::unordered_set<std::string> roles(options.role_words.begin(), options.role_words.end());

  std::map<std::string, std::size_t> counts;
  for (const auto &posting : postings) {
    TokenSeq tokens = NormalizeText(posting.title);
    TokenSeq bridged = BridgeHyphens(tokens);
    if (!bridged.empty()) tokens = std::move(bridged);
    // A candidate may not overlap any known term occurrence, so neither
    // "senior product engineer" nor the "chain analyst" tail of "supply chain
    // analyst" is proposed.
    std::vector<bool> covered(tokens.size(), false);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      for (std::size_t len = 1; len <= longest && i + len <= tokens.size(); ++len) {
        if (known.count(RenderTokens(std::span<const std::string>(tokens.data() + i, len))) == 0) continue;
        for (std::size_t j = i; j < i + len; ++j) covered[j] = true;
      }
    }
    std::set<std::string> seen;
    for (std::size_t end = 0; end < tokens.size(); ++end) {
      if (roles.count(tokens[end]) == 0) continue;
      for (std::size_t len = options.min_length; len <= options.max_length && len <= end + 1; ++len) {
        const std::size_t begin = end + 1 - len;
        if (std::any_of(covered.begin() + static_cast<std::ptrdiff_t>(begin),
                        covered.begin() + static_cast<std::ptrdiff_t>(end + 1), [](bool c) { return c; })) {
          continue;
        }
        seen.insert(RenderTokens(std::span<const std::string>(tokens.data() + begin, len)));
      }
    }
    for (const auto &g : seen) ++counts[g];
  }

  std::vector<CandidateTitle> out;
  for (const auto &[phrase, count] : counts) {
    if (count >= options.min_count) out.push_back({phrase, count});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CandidateTitle &a, const CandidateTitle &b) { return a.count > b.count; });
  return out;
}

}  // namespace jobpulse
