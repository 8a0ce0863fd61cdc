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

// Independent reference implementations used as test oracles. They favor
// obviousness over speed and share no code with the library beyond the data
// types.

#ifndef JOBPULSE_TESTS_TEST_SUPPORT_HPP_
#define JOBPULSE_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "jobpulse/corpus.hpp"
#include "jobpulse/employers.hpp"
#include "jobpulse/matcher.hpp"
#include "jobpulse/taxonomy.hpp"

namespace jobpulse::testing {

inline std::filesystem::path DataDir() { return JOBPULSE_DATA_DIR; }

inline const Taxonomy &DefaultTaxonomy() {
  static const Taxonomy taxonomy = LoadTaxonomy(DataDir() / "taxonomy.csv");
  return taxonomy;
}

inline const NameDictionary &DefaultDictionary() {
  static const NameDictionary dictionary = NameDictionary::Load(DataDir() / "name_dictionary.txt");
  return dictionary;
}

inline std::filesystem::path ScratchDir(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("jobpulse_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Tokenizer by regular expression. High bytes are masked to 'a' so the
// ASCII-only regex engine sees them as letters; tokens are cut from the
// lowercased original at the match offsets.
inline std::vector<std::string> OracleTokens(const std::string &text) {
  std::string lower = text;
  std::string masked = text;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c >= 'A' && c <= 'Z') lower[i] = static_cast<char>(c - 'A' + 'a');
    masked[i] = c >= 0x80 ? 'a' : lower[i];
  }
  static const std::regex kToken("[a-z0-9]+(?:-[a-z0-9]+)*");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(masked.begin(), masked.end(), kToken); it != std::sregex_iterator(); ++it) {
    out.push_back(lower.substr(static_cast<std::size_t>(it->position()), static_cast<std::size_t>(it->length())));
  }
  return out;
}

inline std::vector<std::string> OracleSplitHyphens(const std::vector<std::string> &tokens) {
  std::vector<std::string> out;
  for (const auto &t : tokens) {
    std::string part;
    for (char c : t) {
      if (c == '-') {
        out.push_back(part);
        part.clear();
      } else {
        part.push_back(c);
      }
    }
    out.push_back(part);
  }
  return out;
}

inline bool OracleOccurs(const std::vector<std::string> &hay, const std::vector<std::string> &needle) {
  if (needle.empty()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool all = true;
    for (std::size_t j = 0; j < needle.size() && all; ++j) all = hay[i + j] == needle[j];
    if (all) return true;
  }
  return false;
}

// All-pairs scan: every term against every token stream of the posting.
inline std::vector<JstMatch> OracleMatch(const Posting &posting, const Taxonomy &taxonomy) {
  const auto title = OracleTokens(posting.title);
  const auto title_split = OracleSplitHyphens(title);
  const auto desc = OracleTokens(posting.job_description);
  const auto desc_split = OracleSplitHyphens(desc);
  std::vector<JstMatch> out;
  for (const auto &jst : taxonomy.jsts()) {
    const auto needle = OracleTokens(jst.phrase);
    const bool in_title = OracleOccurs(title, needle) || OracleOccurs(title_split, needle);
    const bool in_desc = OracleOccurs(desc, needle) || OracleOccurs(desc_split, needle);
    if (in_title || in_desc) out.push_back({jst.id, in_title});
  }
  return out;
}

// Random taxonomy over a small vocabulary so terms overlap and nest often.
inline Taxonomy RandomTaxonomy(std::mt19937_64 &rng, std::size_t n_terms) {
  static const std::vector<std::string> kVocab = {"rf",     "test",    "design",  "process", "yield", "fab",
                                                  "device", "quality", "product", "thin",    "film",  "post-silicon",
                                                  "etch",   "senior",  "lead",    "chip"};
  static const std::vector<std::string> kRoles = {"engineer", "technician", "scientist", "analyst"};
  static const char *kFunctions[] = {"Engineer", "Technician", "Scientist", "Operational Support"};
  std::set<std::string> used;
  std::string csv = "function,family,title\n";
  std::vector<std::pair<std::string, std::string>> families;  // (function, family)
  auto phrase = [&](std::size_t max_words) {
    std::string p;
    const std::size_t words = 1 + rng() % max_words;
    for (std::size_t i = 0; i < words; ++i) p += kVocab[rng() % kVocab.size()] + " ";
    return p + kRoles[rng() % kRoles.size()];
  };
  const std::size_t n_families = std::max<std::size_t>(1, n_terms / 4);
  for (std::size_t attempts = 0; families.size() < n_families && attempts < 50 * n_terms; ++attempts) {
    std::string p = phrase(2);
    if (!used.insert(p).second) continue;
    families.emplace_back(kFunctions[rng() % 4], p);
    csv += families.back().first + "," + p + ",\n";
  }
  for (std::size_t attempts = 0; used.size() < n_terms && attempts < 50 * n_terms; ++attempts) {
    std::string p = phrase(3);
    if (!used.insert(p).second) continue;
    const auto &fam = families[rng() % families.size()];
    csv += fam.first + "," + fam.second + "," + p + "\n";
  }
  return ParseTaxonomy(csv, "random");
}

inline std::string TitleCaseLikely(std::mt19937_64 &rng, std::string phrase) {
  if (rng() % 2 == 0) return phrase;
  bool start = true;
  for (char &c : phrase) {
    if (start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    start = c == ' ' || c == '-';
  }
  return phrase;
}

inline std::string RandomText(std::mt19937_64 &rng, const Taxonomy &taxonomy, std::size_t words) {
  static const std::vector<std::string> kNoise = {"we",   "seek", "a",     "Senior", "RF-Engineer", "test-",
                                                  "--",   "(",    "Fab.",  "chip",   "ÉTCH",        "design,",
                                                  "lead", "x86",  "yield", "post",   "silicon",     "-film"};
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (!taxonomy.jsts().empty() && rng() % 4 == 0) {
      out += TitleCaseLikely(rng, taxonomy.jsts()[rng() % taxonomy.jsts().size()].phrase);
    } else {
      out += kNoise[rng() % kNoise.size()];
    }
    static const char *kSeps[] = {" ", ", ", "-", " / ", "\t", "."};
    out += kSeps[rng() % 6];
  }
  return out;
}

}  // namespace jobpulse::testing

#endif  // JOBPULSE_TESTS_TEST_SUPPORT_HPP_
