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

#ifndef JOBPULSE_EMPLOYERS_HPP_
#define JOBPULSE_EMPLOYERS_HPP_

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jobpulse/dedup.hpp"
#include "jobpulse/error.hpp"
#include "jobpulse/rational.hpp"
#include "jobpulse/text.hpp"

namespace jobpulse {

// Words that are common in company names for organizational reasons
// ("university", "of") or by branding ("advanced", "american"). A name made
// only of such words never absorbs a longer name.
class NameDictionary {
 public:
  NameDictionary() = default;
  explicit NameDictionary(std::set<std::string> tokens);

  // One token per line, '#' comments. Tokens are normalized on read.
  static NameDictionary Parse(std::string_view text, const std::string &source);
  static NameDictionary Load(const std::filesystem::path &path);

  bool Contains(const std::string &token) const { return tokens_.count(token) != 0; }
  bool AllContained(std::span<const std::string> tokens) const;
  const std::set<std::string> &tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }

 private:
  std::set<std::string> tokens_;
};

struct CanonicalizeOptions {
  // Trailing tokens dropped before comparison; never distinguishing.
  std::vector<std::string> legal_suffixes{"inc", "llc", "corp", "co", "ltd", "corporation",
                                          "incorporated", "limited", "lp", "llp", "plc"};
};

// Normalized tokens with trailing legal suffixes removed. A name consisting
// only of a suffix keeps it.
TokenSeq NormalizeEmployerName(std::string_view raw, const CanonicalizeOptions &options = {});

struct CanonicalEmployer {
  std::string canonical_name;  // shortest member, ties broken lexicographically
  TokenSeq canonical_tokens;
  std::vector<std::string> members;  // raw names, sorted
  Rational posting_count;            // filled by EmployerStats
};

class EmployerMapping {
 public:
  const std::vector<CanonicalEmployer> &employers() const { return employers_; }
  const std::vector<Diagnostic> &rejected() const { return rejected_; }

  // The employer a raw name maps to, or nullptr when unknown or rejected.
  const CanonicalEmployer *Find(std::string_view raw) const;
  std::size_t raw_name_count() const { return by_raw_.size(); }

  // "raw_name,canonical_name", sorted by raw name.
  std::string ToCsv() const;

 private:
  friend EmployerMapping Canonicalize(std::span<const std::string>, const NameDictionary &,
                                      const CanonicalizeOptions &);

  std::vector<CanonicalEmployer> employers_;
  std::unordered_map<std::string, std::size_t> by_raw_;
  std::vector<Diagnostic> rejected_;
};

// Groups raw employer names into employers:
//   1. names are grouped by first token;
//   2. groups whose names diverge are split on the next token, repeatedly,
//      until every group agrees on all compared tokens;
//   3. a name whose tokens are a proper prefix of other names in its group
//      absorbs them as divisions ("amazon" <- "amazon web services") unless
//      every one of its tokens is a dictionary word.
// Names with different first tokens are never merged. Deterministic and
// independent of input order.
EmployerMapping Canonicalize(std::span<const std::string> names, const NameDictionary &dictionary,
                             const CanonicalizeOptions &options = {});

// First tokens ranked by how many distinct employers start with them; the
// head of this list is where dictionary candidates come from.
std::vector<std::pair<std::string, std::size_t>> FirstTokenCounts(const EmployerMapping &mapping);

struct EmployerReport {
  std::size_t raw_names = 0;
  std::size_t unique_employers = 0;
  Rational total_units;
  Rational mean_units;
  std::size_t top_k = 0;
  Rational top_units;
  Rational top_share;
  // Employers with demand, by units descending then name.
  std::vector<CanonicalEmployer> employers;

  std::string MeanText() const { return FormatDecimal(mean_units, 1); }
  std::string TopShareText() const { return FormatPercent(top_share, 1); }
  std::string ToText() const;
  std::string ToCsv() const;
};

// Demand per canonical employer. Throws ContractError if a unit's employer
// name is missing from |mapping|.
EmployerReport EmployerStats(const DemandLedger &ledger, const EmployerMapping &mapping, std::size_t top_k = 3);

}  // namespace jobpulse

#endif  // JOBPULSE_EMPLOYERS_HPP_
