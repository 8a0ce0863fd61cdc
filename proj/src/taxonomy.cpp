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

#include "jobpulse/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"

namespace jobpulse {

std::string_view FunctionName(JobFunction function) {
  switch (function) {
    case JobFunction::kScientist: return "Scientist";
    case JobFunction::kEngineer: return "Engineer";
    case JobFunction::kTechnician: return "Technician";
    case JobFunction::kOperationalSupport: return "OperationalSupport";
  }
  return "?";
}

std::optional<JobFunction> ParseFunction(std::string_view label) {
  std::string key;
  for (char c : label) {
    if (c == ' ' || c == '_' || c == '-' || c == '\t') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (!key.empty() && key.back() == 's' && key != "operationalsupport" && key != "organizationalsupport") key.pop_back();
  if (key == "scientist") return JobFunction::kScientist;
  if (key == "engineer") return JobFunction::kEngineer;
  if (key == "technician") return JobFunction::kTechnician;
  if (key == "operationalsupport" || key == "organizationalsupport") return JobFunction::kOperationalSupport;
  return std::nullopt;
}

std::string CollisionWarning::Message() const {
  std::string out = "line " + std::to_string(line) + ": '" + phrase + "'";
  if (kept_family == phrase) {
    if (dropped_family == phrase) return out + " declared as family more than once; duplicate ignored";
    return out + " is a job family; dropped as a title of family '" + dropped_family + "'";
  }
  return out + " listed more than once in family '" + kept_family + "'; duplicate ignored";
}

PrecedenceResult ResolvePrecedence(std::vector<RawTaxonomyEntry> entries) {
  PrecedenceResult result;
  std::map<std::string, JobFunction> family_function;
  std::vector<bool> keep(entries.size(), true);

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto &e = entries[i];
    if (e.level != JstLevel::kFamily) continue;
    if (e.phrase.empty()) throw ValidationError("line " + std::to_string(e.line) + ": empty family name");
    if (e.phrase != e.family) {
      throw ValidationError("line " + std::to_string(e.line) + ": family entry '" + e.phrase +
                            "' names a different family '" + e.family + "'");
    }
    auto [it, inserted] = family_function.emplace(e.phrase, e.function);
    if (inserted) continue;
    if (it->second != e.function) {
      throw ValidationError("line " + std::to_string(e.line) + ": family '" + e.phrase + "' declared under both " +
                            std::string(FunctionName(it->second)) + " and " + std::string(FunctionName(e.function)));
    }
    keep[i] = false;
    result.warnings.push_back({e.phrase, e.phrase, e.phrase, e.line});
  }

  std::map<std::string, std::string> title_family;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto &e = entries[i];
    if (e.level != JstLevel::kTitle) continue;
    if (e.phrase.empty()) throw ValidationError("line " + std::to_string(e.line) + ": empty job title");
    auto fam = family_function.find(e.family);
    if (fam == family_function.end()) {
      throw ValidationError("line " + std::to_string(e.line) + ": title '" + e.phrase +
                            "' references undeclared family '" + e.family + "'");
    }
    if (fam->second != e.function) {
      throw ValidationError("line " + std::to_string(e.line) + ": title '" + e.phrase + "' is listed under " +
                            std::string(FunctionName(e.function)) + " but family '" + e.family + "' is " +
                            std::string(FunctionName(fam->second)));
    }
    if (family_function.count(e.phrase) != 0) {
      keep[i] = false;
      result.warnings.push_back({e.phrase, e.phrase, e.family, e.line});
      continue;
    }
    auto [it, inserted] = title_family.emplace(e.phrase, e.family);
    if (inserted) continue;
    if (it->second != e.family) {
      throw ValidationError("line " + std::to_string(e.line) + ": title '" + e.phrase + "' claimed by families '" +
                            it->second + "' and '" + e.family + "'");
    }
    keep[i] = false;
    result.warnings.push_back({e.phrase, e.family, e.family, e.line});
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (keep[i]) result.entries.push_back(std::move(entries[i]));
  }
  return result;
}

Taxonomy Taxonomy::FromResolved(const PrecedenceResult &resolved, std::string source_version) {
  Taxonomy t;
  t.source_version_ = std::move(source_version);
  t.warnings_ = resolved.warnings;
  std::map<std::string, FamilyId> family_ids;
  for (const auto &e : resolved.entries) {
    if (e.level != JstLevel::kFamily) continue;
    family_ids.emplace(e.phrase, t.families_.size());
    t.families_.push_back({e.phrase, e.function});
  }
  if (t.families_.empty()) throw ValidationError("taxonomy declares no job families");

  for (const auto &e : resolved.entries) {
    Jst jst;
    jst.id = t.jsts_.size();
    jst.tokens = NormalizeText(e.phrase);
    jst.phrase = RenderTokens(jst.tokens);
    jst.level = e.level;
    auto fam = family_ids.find(e.family);
    if (fam == family_ids.end()) throw ValidationError("title '" + e.phrase + "' references undeclared family");
    jst.family = fam->second;
    if (e.level == JstLevel::kTitle) {
      jst.title = t.titles_.size();
      t.titles_.push_back({e.phrase, fam->second});
    }
    if (!t.by_phrase_.emplace(jst.phrase, jst.id).second) {
      throw ValidationError("duplicate job-specific term '" + jst.phrase + "'");
    }
    t.jsts_.push_back(std::move(jst));
  }
  return t;
}

const Jst *Taxonomy::Lookup(std::span<const std::string> tokens) const {
  if (tokens.empty()) return nullptr;
  auto it = by_phrase_.find(RenderTokens(tokens));
  return it == by_phrase_.end() ? nullptr : &jsts_[it->second];
}

const Jst *Taxonomy::Lookup(std::string_view phrase) const {
  const TokenSeq tokens = NormalizeText(phrase);
  return Lookup(tokens);
}

std::string_view Taxonomy::TitleOf(const Jst &jst) const {
  if (!jst.title) return {};
  return titles_[*jst.title].name;
}

Taxonomy ParseTaxonomy(std::string_view csv_text, const std::string &source_name) {
  std::vector<RawTaxonomyEntry> entries;
  // family -> explicitly declared?
  std::map<std::string, bool> emitted;
  bool seen_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= csv_text.size()) {
    std::size_t end = csv_text.find('\n', pos);
    if (end == std::string_view::npos) end = csv_text.size();
    const std::string_view line = TrimLine(csv_text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto fields = SplitCsvLine(line);
    if (!fields) throw ParseError(source_name, line_no, "unterminated quoted field");
    if (!seen_header) {
      if (*fields != std::vector<std::string>{"function", "family", "title"}) {
        throw ParseError(source_name, line_no, "expected header 'function,family,title'");
      }
      seen_header = true;
      continue;
    }
    if (fields->size() != 3) {
      throw ParseError(source_name, line_no, "expected 3 fields, found " + std::to_string(fields->size()));
    }
    const auto function = ParseFunction((*fields)[0]);
    if (!function) {
      throw ValidationError(source_name + ":" + std::to_string(line_no) + ": unknown job function '" +
                            (*fields)[0] + "'");
    }
    const std::string family = RenderTokens(NormalizeText((*fields)[1]));
    if (family.empty()) throw ParseError(source_name, line_no, "empty family");
    const std::string title = RenderTokens(NormalizeText((*fields)[2]));
    const bool has_title_text = TrimLine((*fields)[2]).size() > 0;
    if (has_title_text && title.empty()) throw ParseError(source_name, line_no, "title has no word characters");

    auto it = emitted.find(family);
    if (title.empty()) {
      if (it != emitted.end() && !it->second) {
        // Implicitly declared by an earlier title row; this row just confirms it.
        // A conflicting function is passed through so precedence rejects it.
        it->second = true;
        const bool conflict = std::any_of(entries.begin(), entries.end(), [&](const RawTaxonomyEntry &e) {
          return e.level == JstLevel::kFamily && e.phrase == family && e.function != *function;
        });
        if (conflict) entries.push_back({family, JstLevel::kFamily, family, *function, line_no});
        continue;
      }
      emitted[family] = true;
      entries.push_back({family, JstLevel::kFamily, family, *function, line_no});
    } else {
      if (it == emitted.end()) {
        emitted[family] = false;
        entries.push_back({family, JstLevel::kFamily, family, *function, line_no});
      }
      entries.push_back({title, JstLevel::kTitle, family, *function, line_no});
    }
  }
  if (!seen_header) throw ParseError(source_name, line_no == 0 ? 1 : line_no, "missing header 'function,family,title'");
  if (entries.empty()) throw ValidationError(source_name + ": taxonomy declares no job families");

  auto resolved = ResolvePrecedence(std::move(entries));
  return Taxonomy::FromResolved(resolved, source_name + " sha256:" + Sha256Hex(csv_text).substr(0, 16));
}

Taxonomy LoadTaxonomy(const std::filesystem::path &path) {
  return ParseTaxonomy(ReadFile(path), path.filename().string());
}

}  // namespace jobpulse
