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

#ifndef JOBPULSE_DEDUP_HPP_
#define JOBPULSE_DEDUP_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jobpulse/corpus.hpp"
#include "jobpulse/matcher.hpp"
#include "jobpulse/rational.hpp"
#include "jobpulse/taxonomy.hpp"

namespace jobpulse {

// One unit of hiring demand: a distinct (job_id, region).
struct DemandUnit {
  std::string job_id;
  Region region = Region::kLA;
  std::string employer_name;
};

// The share of one demand unit credited to one term. For a unit matching k
// terms every share is exactly 1/k.
struct WeightedAssignment {
  std::size_t unit = 0;  // index into DemandLedger::units
  std::string job_id;
  Region region = Region::kLA;
  JstId jst = 0;
  Rational weight;
};

struct DemandLedger {
  std::vector<DemandUnit> units;
  std::vector<WeightedAssignment> assignments;

  std::size_t unit_count() const { return units.size(); }
  // Exact sum of all weights; equals unit_count().
  Rational Total() const;
};

// Splits each record's unit mass equally over its matched terms. The ledger
// is ordered by (region, job_id, term id) whatever the input order. Throws
// ContractError when two records share a (job_id, region) or a record has
// no matches.
DemandLedger WeightAssignments(std::vector<MatchRecord> records);

// CSV "job_id,region,function,family,title,weight_num,weight_den"; title is
// empty for family-level terms.
std::string LedgerToCsv(const DemandLedger &ledger, const Taxonomy &taxonomy);

// Postings with identical normalized title and description that appear in
// more than one region under different job ids.
struct CrossRegionGroup {
  std::string content_key;  // sha256 of the normalized content, 16 hex chars
  std::vector<std::pair<std::string, Region>> members;  // (job_id, region), sorted
};

struct CrossRegionReport {
  std::vector<CrossRegionGroup> groups;
  // Demand units are unaffected: every member stays its own unit.
  std::size_t unit_count = 0;
};

// Reports cross-region repeats among |postings| (the demand units). Nothing
// is merged: a repeat is counted independently in each region.
CrossRegionReport CrossRegionExpand(std::span<const Posting> postings);

std::string CrossRegionToCsv(const CrossRegionReport &report);

}  // namespace jobpulse

#endif  // JOBPULSE_DEDUP_HPP_
