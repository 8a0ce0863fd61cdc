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

#include "jobpulse/dedup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"
#include "jobpulse/text.hpp"

namespace jobpulse {

Rational DemandLedger::Total() const {
  Rational total = 0;
  for (const auto &a : assignments) total += a.weight;
  return total;
}

DemandLedger WeightAssignments(std::vector<MatchRecord> records) {
  std::sort(records.begin(), records.end(), [](const MatchRecord &a, const MatchRecord &b) {
    return std::tie(a.region, a.job_id) < std::tie(b.region, b.job_id);
  });
  DemandLedger ledger;
  ledger.units.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto &r = records[i];
    if (!ledger.units.empty() && ledger.units.back().region == r.region && ledger.units.back().job_id == r.job_id) {
      throw ContractError("duplicate match record for job_id '" + r.job_id + "' in region " +
                          std::string(RegionCode(r.region)));
    }
    if (r.matches.empty()) throw ContractError("match record for job_id '" + r.job_id + "' has no matches");
    std::sort(r.matches.begin(), r.matches.end(),
              [](const JstMatch &a, const JstMatch &b) { return a.jst < b.jst; });
    const Rational weight(1, static_cast<long long>(r.matches.size()));
    const std::size_t unit = ledger.units.size();
    for (const auto &m : r.matches) ledger.assignments.push_back({unit, r.job_id, r.region, m.jst, weight});
    ledger.units.push_back({std::move(r.job_id), r.region, std::move(r.employer_name)});
  }
  return ledger;
}

std::string LedgerToCsv(const DemandLedger &ledger, const Taxonomy &taxonomy) {
  CsvWriter csv({"job_id", "region", "function", "family", "title", "weight_num", "weight_den"});
  for (const auto &a : ledger.assignments) {
    const Jst &jst = taxonomy.jsts()[a.jst];
    csv.Row({a.job_id, std::string(RegionCode(a.region)), std::string(FunctionName(taxonomy.FunctionOf(jst))),
             taxonomy.FamilyOf(jst).name, std::string(taxonomy.TitleOf(jst)),
             boost::multiprecision::numerator(a.weight).str(), boost::multiprecision::denominator(a.weight).str()});
  }
  return csv.str();
}

CrossRegionReport CrossRegionExpand(std::span<const Posting> postings) {
  std::map<std::string, std::vector<const Posting *>> by_content;
  for (const auto &p : postings) {
    std::string key = RenderTokens(NormalizeText(p.title));
    key.push_back('\x1f');
    key += RenderTokens(NormalizeText(p.job_description));
    by_content[key].push_back(&p);
  }
  CrossRegionReport report;
  report.unit_count = postings.size();
  for (const auto &[key, members] : by_content) {
    std::set<Region> regions;
    for (const Posting *p : members) regions.insert(p->region);
    if (regions.size() < 2) continue;
    CrossRegionGroup group;
    group.content_key = Sha256Hex(key).substr(0, 16);
    for (const Posting *p : members) group.members.emplace_back(p->job_id, p->region);
    std::sort(group.members.begin(), group.members.end());
    report.groups.push_back(std::move(group));
  }
  std::sort(report.groups.begin(), report.groups.end(),
            [](const CrossRegionGroup &a, const CrossRegionGroup &b) { return a.members < b.members; });
  return report;
}

std::string CrossRegionToCsv(const CrossRegionReport &report) {
  CsvWriter csv({"group", "content_key", "job_id", "region"});
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    for (const auto &[job_id, region] : report.groups[g].members) {
      csv.Row({std::to_string(g + 1), report.groups[g].content_key, job_id, std::string(RegionCode(region))});
    }
  }
  return csv.str();
}

}  // namespace jobpulse
