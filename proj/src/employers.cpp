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

#include "jobpulse/employers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "jobpulse/io.hpp"

namespace jobpulse {

NameDictionary::NameDictionary(std::set<std::string> tokens) {
  for (const auto &t : tokens) {
    for (auto &n : NormalizeText(t)) tokens_.insert(std::move(n));
  }
}

NameDictionary NameDictionary::Parse(std::string_view text, const std::string &source) {
  std::set<std::string> tokens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = TrimLine(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const TokenSeq parsed = NormalizeText(line);
    if (parsed.size() != 1) throw ParseError(source, line_no, "expected one token per line");
    tokens.insert(parsed.front());
  }
  return NameDictionary(std::move(tokens));
}

NameDictionary NameDictionary::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path), path.filename().string());
}

bool NameDictionary::AllContained(std::span<const std::string> tokens) const {
  return std::all_of(tokens.begin(), tokens.end(), [&](const std::string &t) { return Contains(t); });
}

TokenSeq NormalizeEmployerName(std::string_view raw, const CanonicalizeOptions &options) {
  TokenSeq tokens = NormalizeText(raw);
  auto is_suffix = [&](const std::string &t) {
    return std::find(options.legal_suffixes.begin(), options.legal_suffixes.end(), t) != options.legal_suffixes.end();
  };
  while (tokens.size() > 1 && is_suffix(tokens.back())) tokens.pop_back();
  return tokens;
}

const CanonicalEmployer *EmployerMapping::Find(std::string_view raw) const {
  auto it = by_raw_.find(std::string(raw));
  return it == by_raw_.end() ? nullptr : &employers_[it->second];
}

std::string EmployerMapping::ToCsv() const {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(by_raw_.size());
  for (const auto &[raw, idx] : by_raw_) rows.emplace_back(raw, employers_[idx].canonical_name);
  std::sort(rows.begin(), rows.end());
  CsvWriter csv({"raw_name", "canonical_name"});
  for (const auto &[raw, canonical] : rows) csv.Row({raw, canonical});
  return csv.str();
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Distinct normalized names, sorted by token sequence.
struct Identity {
  TokenSeq tokens;
  std::vector<std::string> raw;
};

constexpr std::size_t kNoAnchor = static_cast<std::size_t>(-1);

// |ids| is a sorted range of identities agreeing on their first |depth|
// tokens. |anchor| is the nearest shorter identity on this path that may
// absorb longer names, if any.
void Refine(const std::vector<Identity> &identities, std::span<const std::size_t> ids, std::size_t depth,
            std::size_t anchor, const NameDictionary &dictionary, DisjointSets &sets) {
  std::size_t begin = 0;
  // Sorted order puts the one identity exhausted at this depth first.
  if (identities[ids[0]].tokens.size() == depth) {
    const std::size_t here = ids[0];
    if (anchor != kNoAnchor) {
      sets.Union(anchor, here);
    } else if (!dictionary.AllContained(identities[here].tokens)) {
      anchor = here;
    }
    begin = 1;
  }
  if (begin == ids.size()) return;
  if (ids.size() - begin == 1) {
    // No divergence left to resolve; only the prefix relation matters.
    if (anchor != kNoAnchor) sets.Union(anchor, ids[begin]);
    return;
  }
  // Diverging names: compare the next token.
  std::size_t i = begin;
  while (i < ids.size()) {
    std::size_t j = i + 1;
    const std::string &token = identities[ids[i]].tokens[depth];
    while (j < ids.size() && identities[ids[j]].tokens[depth] == token) ++j;
    Refine(identities, ids.subspan(i, j - i), depth + 1, anchor, dictionary, sets);
    i = j;
  }
}

}  // namespace

EmployerMapping Canonicalize(std::span<const std::string> names, const NameDictionary &dictionary,
                             const CanonicalizeOptions &options) {
  EmployerMapping mapping;
  std::map<TokenSeq, std::vector<std::string>> grouped;
  std::set<std::string> distinct(names.begin(), names.end());
  for (const auto &raw : distinct) {
    TokenSeq tokens = NormalizeEmployerName(raw, options);
    if (tokens.empty()) {
      mapping.rejected_.push_back({"employer_name", 0, "empty employer name '" + raw + "'"});
      continue;
    }
    grouped[std::move(tokens)].push_back(raw);
  }

  std::vector<Identity> identities;
  identities.reserve(grouped.size());
  for (auto &[tokens, raw] : grouped) identities.push_back({tokens, std::move(raw)});
  if (identities.empty()) return mapping;

  DisjointSets sets(identities.size());
  std::vector<std::size_t> order(identities.size());
  std::iota(order.begin(), order.end(), 0);
  // First-word extraction: each first-token group is refined independently.
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && identities[order[j]].tokens[0] == identities[order[i]].tokens[0]) ++j;
    Refine(identities, std::span<const std::size_t>(order).subspan(i, j - i), 1, kNoAnchor, dictionary, sets);
    i = j;
  }

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t id = 0; id < identities.size(); ++id) components[sets.Find(id)].push_back(id);

  for (const auto &[root, members] : components) {
    CanonicalEmployer employer;
    std::size_t shortest = members.front();
    for (std::size_t id : members) {
      const auto &t = identities[id].tokens;
      const auto &best = identities[shortest].tokens;
      if (t.size() < best.size() || (t.size() == best.size() && t < best)) shortest = id;
      for (const auto &raw : identities[id].raw) employer.members.push_back(raw);
    }
    employer.canonical_tokens = identities[shortest].tokens;
    employer.canonical_name = RenderTokens(employer.canonical_tokens);
    std::sort(employer.members.begin(), employer.members.end());
    mapping.employers_.push_back(std::move(employer));
  }
  std::sort(mapping.employers_.begin(), mapping.employers_.end(),
            [](const CanonicalEmployer &a, const CanonicalEmployer &b) { return a.canonical_name < b.canonical_name; });
  for (std::size_t e = 0; e < mapping.employers_.size(); ++e) {
    for (const auto &raw : mapping.employers_[e].members) mapping.by_raw_.emplace(raw, e);
  }
  return mapping;
}

std::vector<std::pair<std::string, std::size_t>> FirstTokenCounts(const EmployerMapping &mapping) {
  std::map<std::string, std::size_t> counts;
  for (const auto &e : mapping.employers()) ++counts[e.canonical_tokens.front()];
  std::vector<std::pair<std::string, std::size_t>> out(counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.second > b.second; });
  return out;
}

EmployerReport EmployerStats(const DemandLedger &ledger, const EmployerMapping &mapping, std::size_t top_k) {
  std::vector<const CanonicalEmployer *> unit_employer(ledger.units.size());
  for (std::size_t u = 0; u < ledger.units.size(); ++u) {
    unit_employer[u] = mapping.Find(ledger.units[u].employer_name);
    if (unit_employer[u] == nullptr) {
      throw ContractError("employer name '" + ledger.units[u].employer_name + "' of job_id '" +
                          ledger.units[u].job_id + "' is not in the canonical mapping");
    }
  }
  std::map<const CanonicalEmployer *, Rational> totals;
  std::set<std::string> raw_names;
  for (std::size_t u = 0; u < ledger.units.size(); ++u) raw_names.insert(ledger.units[u].employer_name);
  for (const auto &a : ledger.assignments) totals[unit_employer[a.unit]] += a.weight;

  EmployerReport report;
  report.raw_names = raw_names.size();
  report.unique_employers = totals.size();
  report.total_units = 0;
  for (const auto &[employer, units] : totals) {
    CanonicalEmployer copy = *employer;
    copy.posting_count = units;
    report.total_units += units;
    report.employers.push_back(std::move(copy));
  }
  std::sort(report.employers.begin(), report.employers.end(),
            [](const CanonicalEmployer &a, const CanonicalEmployer &b) {
              if (a.posting_count != b.posting_count) return a.posting_count > b.posting_count;
              return a.canonical_name < b.canonical_name;
            });
  report.mean_units = report.unique_employers == 0 ? Rational(0)
                                                   : report.total_units / static_cast<long long>(report.unique_employers);
  report.top_k = std::min(top_k, report.employers.size());
  report.top_units = 0;
  for (std::size_t i = 0; i < report.top_k; ++i) report.top_units += report.employers[i].posting_count;
  report.top_share = report.total_units == 0 ? Rational(0) : report.top_units / report.total_units;
  return report;
}

std::string EmployerReport::ToText() const {
  std::string out = "Employer base\n";
  out += RenderTextTable({"statistic", "value"},
                         {{"raw employer names", std::to_string(raw_names)},
                          {"unique employers", std::to_string(unique_employers)},
                          {"demand units", FormatDecimal(total_units, 1)},
                          {"mean units per employer", MeanText()},
                          {"top " + std::to_string(top_k) + " units", FormatDecimal(top_units, 1)},
                          {"top " + std::to_string(top_k) + " share", TopShareText()}});
  out += "\nTop employers\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < top_k; ++i) {
    const auto &e = employers[i];
    rows.push_back({e.canonical_name, std::to_string(e.members.size()), FormatDecimal(e.posting_count, 1),
                    total_units == 0 ? "0.0%" : FormatPercent(e.posting_count / total_units, 1)});
  }
  out += RenderTextTable({"employer", "names", "units", "share"}, rows);
  return out;
}

std::string EmployerReport::ToCsv() const {
  CsvWriter csv({"rank", "canonical_name", "member_names", "units", "units_num", "units_den", "share"});
  for (std::size_t i = 0; i < employers.size(); ++i) {
    const auto &e = employers[i];
    csv.Row({std::to_string(i + 1), e.canonical_name, std::to_string(e.members.size()),
             FormatDecimal(e.posting_count, 1), boost::multiprecision::numerator(e.posting_count).str(),
             boost::multiprecision::denominator(e.posting_count).str(),
             total_units == 0 ? "0.0%" : FormatPercent(e.posting_count / total_units, 1)});
  }
  return csv.str();
}

}  // namespace jobpulse
