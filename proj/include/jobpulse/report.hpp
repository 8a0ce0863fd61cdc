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

#ifndef JOBPULSE_REPORT_HPP_
#define JOBPULSE_REPORT_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jobpulse/corpus.hpp"
#include "jobpulse/dedup.hpp"
#include "jobpulse/rational.hpp"
#include "jobpulse/taxonomy.hpp"

namespace jobpulse {

struct FunnelStage {
  std::string name;
  std::size_t count = 0;
};

// Staged reduction of the data set. reductions[i] is the fraction removed
// between stages[i] and stages[i + 1].
struct FunnelReport {
  std::vector<FunnelStage> stages;
  std::vector<Rational> reductions;

  std::string ToText() const;
  std::string ToCsv() const;
};

// Throws ContractError if a stage count exceeds the one before it.
FunnelReport BuildFunnel(std::vector<FunnelStage> stages);

enum class DemandLevel { kFunction, kFamily, kTitle, kRegion };

std::string_view DemandLevelName(DemandLevel level);

struct DemandRow {
  std::string name;
  std::string function;
  std::string family;
  std::string title;
  std::array<Rational, 3> by_region{};  // indexed by Region
  Rational total;
};

// Exact demand grouped at one level of the hierarchy (or by region). Every
// entry of the taxonomy at that level gets a row, including zero rows.
struct DemandTable {
  DemandLevel level = DemandLevel::kFunction;
  std::optional<JobFunction> scope;
  std::vector<Region> regions;
  std::vector<DemandRow> rows;  // total descending, then name ascending
  std::array<Rational, 3> region_totals{};
  Rational grand_total;

  const DemandRow *Find(std::string_view name) const;
  // Share of the grand total; zero for an empty table.
  Rational Share(std::string_view name) const;

  std::string ToText() const;
  std::string ToCsv() const;
};

// Sums ledger weights by |level|. |scope| restricts rows and totals to one
// job function (the per-function keyword tables). |regions| selects the
// region columns; assignments in other regions are still counted in totals.
DemandTable DemandBy(DemandLevel level, const DemandLedger &ledger, const Taxonomy &taxonomy,
                     std::optional<JobFunction> scope = std::nullopt,
                     std::vector<Region> regions = {kAllRegions.begin(), kAllRegions.end()});

// a : b expressed three ways.
struct RatioReport {
  Rational value;        // a / b, exact
  std::string decimal;   // two places
  int nearest_left = 1;  // closest p:q with 1 <= p, q <= max_term
  int nearest_right = 1;
  int unit_left = 1;  // closest 1:n or n:1 with n <= max_term
  int unit_right = 1;

  std::string NearestText() const;
  std::string UnitText() const;
};

// Closeness is multiplicative (max(x/c, c/x)), so ratio(a, b) and
// ratio(b, a) give mirrored answers. Ties go to the smaller terms. Throws
// ValidationError unless both totals are positive.
RatioReport Ratio(const Rational &a, const Rational &b, int max_term = 10);

}  // namespace jobpulse

#endif  // JOBPULSE_REPORT_HPP_
