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

#ifndef JOBPULSE_TAXONOMY_HPP_
#define JOBPULSE_TAXONOMY_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jobpulse/text.hpp"

namespace jobpulse {

// The coarsest level of the job-term hierarchy. Exactly four exist.
enum class JobFunction { kScientist, kEngineer, kTechnician, kOperationalSupport };

inline constexpr std::array<JobFunction, 4> kAllFunctions = {
    JobFunction::kScientist, JobFunction::kEngineer, JobFunction::kTechnician,
    JobFunction::kOperationalSupport};

// "Scientist", "Engineer", "Technician", "OperationalSupport".
std::string_view FunctionName(JobFunction function);

// Accepts the canonical labels case-insensitively, ignoring spaces, plus the
// "Organizational Support" spelling used interchangeably for the fourth one.
std::optional<JobFunction> ParseFunction(std::string_view label);

enum class JstLevel { kFamily, kTitle };

using FamilyId = std::size_t;
using TitleId = std::size_t;
using JstId = std::size_t;

struct JobFamily {
  std::string name;
  JobFunction function;
};

struct JobTitle {
  std::string name;
  FamilyId family;
};

// A job-specific term: a family name or a job title used as a match keyword.
struct Jst {
  JstId id = 0;
  TokenSeq tokens;
  std::string phrase;  // RenderTokens(tokens)
  JstLevel level = JstLevel::kFamily;
  FamilyId family = 0;
  std::optional<TitleId> title;  // set iff level == kTitle
};

// One row of taxonomy input after normalization, before precedence.
struct RawTaxonomyEntry {
  std::string phrase;
  JstLevel level = JstLevel::kFamily;
  std::string family;
  JobFunction function = JobFunction::kEngineer;
  std::size_t line = 0;

  friend bool operator==(const RawTaxonomyEntry &, const RawTaxonomyEntry &) = default;
};

// A phrase dropped because it collided with an entry that took precedence.
struct CollisionWarning {
  std::string phrase;
  std::string kept_family;
  std::string dropped_family;
  std::size_t line = 0;

  std::string Message() const;
};

struct PrecedenceResult {
  std::vector<RawTaxonomyEntry> entries;
  std::vector<CollisionWarning> warnings;
};

// Applies the hierarchy precedence rules:
//   * a phrase declared as a family survives only at family level; the same
//     phrase used as a title (in any family) is dropped with a warning;
//   * exact duplicates collapse with a warning;
//   * a family declared under two functions, or a title claimed by two
//     families, is ambiguous and throws ValidationError;
//   * every title must reference a declared family of the same function.
// Survivors keep their input order. Idempotent.
PrecedenceResult ResolvePrecedence(std::vector<RawTaxonomyEntry> entries);

// The validated, immutable job-term hierarchy.
class Taxonomy {
 public:
  // Builds from entries that already passed ResolvePrecedence.
  static Taxonomy FromResolved(const PrecedenceResult &resolved, std::string source_version);

  const std::vector<JobFamily> &families() const { return families_; }
  const std::vector<JobTitle> &titles() const { return titles_; }
  const std::vector<Jst> &jsts() const { return jsts_; }
  const std::vector<CollisionWarning> &warnings() const { return warnings_; }
  const std::string &source_version() const { return source_version_; }

  // Exact-phrase lookup on normalized tokens.
  const Jst *Lookup(std::span<const std::string> tokens) const;
  // Normalizes |phrase| first.
  const Jst *Lookup(std::string_view phrase) const;

  const JobFamily &FamilyOf(const Jst &jst) const { return families_[jst.family]; }
  JobFunction FunctionOf(const Jst &jst) const { return families_[jst.family].function; }
  // The title name for title-level entries, empty for family-level ones.
  std::string_view TitleOf(const Jst &jst) const;

 private:
  std::vector<JobFamily> families_;
  std::vector<JobTitle> titles_;
  std::vector<Jst> jsts_;
  std::vector<CollisionWarning> warnings_;
  std::unordered_map<std::string, JstId> by_phrase_;
  std::string source_version_;
};

// Parses taxonomy CSV text (header "function,family,title", '#' comments,
// empty title declares the family-level term). Throws ParseError with the
// line number for malformed rows, ValidationError for unknown functions,
// ambiguous collisions or an empty taxonomy.
Taxonomy ParseTaxonomy(std::string_view csv_text, const std::string &source_name);

Taxonomy LoadTaxonomy(const std::filesystem::path &path);

}  // namespace jobpulse

#endif  // JOBPULSE_TAXONOMY_HPP_
