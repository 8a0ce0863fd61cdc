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

#include "jobpulse/report.hpp"

#include <algorithm>
#include <map>

#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"

namespace jobpulse {

FunnelReport BuildFunnel(std::vector<FunnelStage> stages) {
  FunnelReport report;
  for (std::size_t i = 1; i < stages.size(); ++i) {
    const auto prev = stages[i - 1].count;
    const auto cur = stages[i].count;
    if (cur > prev) {
      throw ContractError("funnel stage '" + stages[i].name + "' (" + std::to_string(cur) + ") exceeds '" +
                          stages[i - 1].name + "' (" + std::to_string(prev) + ")");
    }
    report.reductions.push_back(prev == 0 ? Rational(0)
                                          : Rational(static_cast<long long>(prev - cur), static_cast<long long>(prev)));
  }
  report.stages = std::move(stages);
  return report;
}

std::string FunnelReport::ToText() const {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    rows.push_back({stages[i].name, std::to_string(stages[i].count), i == 0 ? "" : FormatPercent(reductions[i - 1])});
  }
  return "Processing funnel\n" + RenderTextTable({"stage", "count", "reduction"}, rows);
}

std::string FunnelReport::ToCsv() const {
  CsvWriter csv({"stage", "count", "reduction", "reduction_num", "reduction_den"});
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (i == 0) {
      csv.Row({stages[i].name, std::to_string(stages[i].count), "", "", ""});
      continue;
    }
    const Rational &r = reductions[i - 1];
    csv.Row({stages[i].name, std::to_string(stages[i].count), FormatPercent(r),
             boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()});
  }
  return csv.str();
}

std::string_view DemandLevelName(DemandLevel level) {
  switch (level) {
    case DemandLevel::kFunction: return "function";
    case DemandLevel::kFamily: return "family";
    case DemandLevel::kTitle: return "title";
    case DemandLevel::kRegion: return "region";
  }
  return "?";
}

namespace {

std::size_t RegionIndex(Region r) { return static_cast<std::size_t>(r); }

DemandRow MakeRow(std::string name, std::string function = {}, std::string family = {}, std::string title = {}) {
  DemandRow row;
  row.name = std::move(name);
  row.function = std::move(function);
  row.family = std::move(family);
  row.title = std::move(title);
  return row;
}

}  // namespace

DemandTable DemandBy(DemandLevel level, const DemandLedger &ledger, const Taxonomy &taxonomy,
                     std::optional<JobFunction> scope, std::vector<Region> regions) {
  DemandTable table;
  table.level = level;
  table.scope = scope;
  table.regions = std::move(regions);

  // Row skeleton: every taxonomy entry at this level, in scope.
  std::map<std::string, DemandRow> rows;
  auto in_scope = [&](JobFunction f) { return !scope || *scope == f; };
  switch (level) {
    case DemandLevel::kFunction:
      for (JobFunction f : kAllFunctions) {
        if (in_scope(f)) rows[std::string(FunctionName(f))] = MakeRow(std::string(FunctionName(f)), std::string(FunctionName(f)));
      }
      break;
    case DemandLevel::kFamily:
      for (const auto &fam : taxonomy.families()) {
        if (in_scope(fam.function)) rows[fam.name] = MakeRow(fam.name, std::string(FunctionName(fam.function)), fam.name);
      }
      break;
    case DemandLevel::kTitle:
      for (const auto &jst : taxonomy.jsts()) {
        if (!in_scope(taxonomy.FunctionOf(jst))) continue;
        rows[jst.phrase] = MakeRow(jst.phrase, std::string(FunctionName(taxonomy.FunctionOf(jst))),
                                   taxonomy.FamilyOf(jst).name, std::string(taxonomy.TitleOf(jst)));
      }
      break;
    case DemandLevel::kRegion:
      for (Region r : table.regions) rows[std::string(RegionCode(r))] = MakeRow(std::string(RegionCode(r)));
      break;
  }

  for (const auto &a : ledger.assignments) {
    const Jst &jst = taxonomy.jsts()[a.jst];
    const JobFunction function = taxonomy.FunctionOf(jst);
    if (!in_scope(function)) continue;
    std::string key;
    switch (level) {
      case DemandLevel::kFunction: key = std::string(FunctionName(function)); break;
      case DemandLevel::kFamily: key = taxonomy.FamilyOf(jst).name; break;
      case DemandLevel::kTitle: key = jst.phrase; break;
      case DemandLevel::kRegion: key = std::string(RegionCode(a.region)); break;
    }
    auto it = rows.find(key);
    if (it == rows.end()) it = rows.emplace(key, MakeRow(key)).first;  // region outside the selection
    it->second.by_region[RegionIndex(a.region)] += a.weight;
    it->second.total += a.weight;
    table.region_totals[RegionIndex(a.region)] += a.weight;
    table.grand_total += a.weight;
  }

  for (auto &[name, row] : rows) table.rows.push_back(std::move(row));
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const DemandRow &a, const DemandRow &b) { return a.total > b.total; });
  return table;
}

const DemandRow *DemandTable::Find(std::string_view name) const {
  for (const auto &row : rows) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

Rational DemandTable::Share(std::string_view name) const {
  const DemandRow *row = Find(name);
  if (row == nullptr || grand_total == 0) return 0;
  return row->total / grand_total;
}

std::string DemandTable::ToText() const {
  const bool region_columns = level != DemandLevel::kRegion;
  std::vector<std::string> header{std::string(DemandLevelName(level))};
  if (region_columns) {
    for (Region r : regions) header.emplace_back(RegionCode(r));
  }
  header.insert(header.end(), {"total", "share"});

  std::vector<std::vector<std::string>> rows_text;
  auto share = [&](const Rational &v) { return grand_total == 0 ? std::string("0.0%") : FormatPercent(v / grand_total); };
  for (const auto &row : rows) {
    std::vector<std::string> cells{row.name};
    if (region_columns) {
      for (Region r : regions) cells.push_back(FormatDecimal(row.by_region[RegionIndex(r)], 1));
    }
    cells.push_back(FormatDecimal(row.total, 1));
    cells.push_back(share(row.total));
    rows_text.push_back(std::move(cells));
  }
  std::vector<std::string> total_row{"Total"};
  if (region_columns) {
    for (Region r : regions) total_row.push_back(FormatDecimal(region_totals[RegionIndex(r)], 1));
  }
  total_row.push_back(FormatDecimal(grand_total, 1));
  total_row.push_back(grand_total == 0 ? "0.0%" : "100.0%");
  rows_text.push_back(std::move(total_row));

  std::string title = "Demand by " + std::string(DemandLevelName(level));
  if (scope) title += " (" + std::string(FunctionName(*scope)) + ")";
  return title + "\n" + RenderTextTable(header, rows_text);
}

std::string DemandTable::ToCsv() const {
  std::vector<std::string> header{"level", "name", "function", "family", "title"};
  for (Region r : regions) header.emplace_back(RegionCode(r));
  header.insert(header.end(), {"total", "share", "total_num", "total_den"});
  CsvWriter csv(header);
  const std::string level_name(DemandLevelName(level));
  auto emit = [&](const std::string &name, const std::string &function, const std::string &family,
                  const std::string &title, const std::array<Rational, 3> &by_region, const Rational &total) {
    std::vector<std::string> cells{level_name, name, function, family, title};
    for (Region r : regions) cells.push_back(FormatDecimal(by_region[RegionIndex(r)], 1));
    cells.push_back(FormatDecimal(total, 1));
    cells.push_back(grand_total == 0 ? "0.0%" : FormatPercent(total / grand_total));
    cells.push_back(boost::multiprecision::numerator(total).str());
    cells.push_back(boost::multiprecision::denominator(total).str());
    csv.Row(cells);
  };
  for (const auto &row : rows) emit(row.name, row.function, row.family, row.title, row.by_region, row.total);
  emit("Total", "", "", "", region_totals, grand_total);
  return csv.str();
}

namespace {

// max(x / c, c / x): 1 at equality, grows with the multiplicative gap.
Rational Gap(const Rational &x, const Rational &c) {
  const Rational up = x / c;
  const Rational down = c / x;
  return up > down ? up : down;
}

}  // namespace

RatioReport Ratio(const Rational &a, const Rational &b, int max_term) {
  if (b == 0) throw ValidationError("ratio with a zero denominator");
  if (a <= 0 || b < 0) throw ValidationError("ratio requires positive totals");
  if (max_term < 1) throw ValidationError("ratio max_term must be positive");
  RatioReport report;
  report.value = a / b;
  report.decimal = FormatDecimal(report.value, 2);

  Rational best_gap = -1;
  for (int q = 1; q <= max_term; ++q) {
    for (int p = 1; p <= max_term; ++p) {
      const Rational gap = Gap(report.value, Rational(p, q));
      // Strict improvement keeps the first (smallest q, then p) of any tie,
      // which is also the reduced form.
      if (best_gap < 0 || gap < best_gap) {
        best_gap = gap;
        report.nearest_left = p;
        report.nearest_right = q;
      }
    }
  }

  best_gap = -1;
  for (int n = 1; n <= max_term; ++n) {
    for (const auto &[p, q] : {std::pair{1, n}, std::pair{n, 1}}) {
      const Rational gap = Gap(report.value, Rational(p, q));
      if (best_gap < 0 || gap < best_gap) {
        best_gap = gap;
        report.unit_left = p;
        report.unit_right = q;
      }
    }
  }
  return report;
}

std::string RatioReport::NearestText() const {
  return std::to_string(nearest_left) + ":" + std::to_string(nearest_right);
}

std::string RatioReport::UnitText() const { return std::to_string(unit_left) + ":" + std::to_string(unit_right); }

}  // namespace jobpulse
