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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "jobpulse/config.hpp"
#include "jobpulse/corpus.hpp"
#include "jobpulse/dedup.hpp"
#include "jobpulse/employers.hpp"
#include "jobpulse/error.hpp"
#include "jobpulse/matcher.hpp"
#include "jobpulse/pipeline.hpp"
#include "jobpulse/rational.hpp"
#include "jobpulse/report.hpp"
#include "jobpulse/synth.hpp"
#include "jobpulse/taxonomy.hpp"
#include "jobpulse/text.hpp"

namespace py = pybind11;

namespace jobpulse {
namespace {

py::object ToFraction(const Rational &r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object int_type = py::module_::import("builtins").attr("int");
  return fraction(int_type(boost::multiprecision::numerator(r).str()),
                  int_type(boost::multiprecision::denominator(r).str()));
}

Region RegionArg(const std::string &code) {
  auto r = ParseRegion(code);
  if (!r) throw ValidationError("unknown region '" + code + "'");
  return *r;
}

FilterMode FilterArg(const std::string &mode) {
  auto m = ParseFilterMode(mode);
  if (!m) throw ValidationError("filter mode must be any_field or all_fields, got '" + mode + "'");
  return *m;
}

py::dict JstDict(const Taxonomy &taxonomy, const Jst &jst) {
  py::dict d;
  d["phrase"] = jst.phrase;
  d["level"] = jst.level == JstLevel::kFamily ? "family" : "title";
  d["family"] = taxonomy.FamilyOf(jst).name;
  d["function"] = std::string(FunctionName(taxonomy.FunctionOf(jst)));
  return d;
}

py::list TableRows(const DemandTable &table) {
  py::list rows;
  for (const auto &row : table.rows) {
    py::dict d;
    d["name"] = row.name;
    d["function"] = row.function;
    d["family"] = row.family;
    d["title"] = row.title;
    py::dict by_region;
    for (Region r : table.regions) by_region[py::str(std::string(RegionCode(r)))] = ToFraction(row.by_region[static_cast<std::size_t>(r)]);
    d["by_region"] = by_region;
    d["total"] = ToFraction(row.total);
    rows.append(d);
  }
  return rows;
}

PipelineConfig MakeConfig(const std::string &industry_token, const std::string &filter_mode, std::size_t min_count,
                          std::size_t top_k) {
  PipelineConfig config;
  config.industry_token = NormalizeIndustryToken(industry_token);
  config.filter_mode = FilterArg(filter_mode);
  config.discovery.min_count = min_count;
  config.top_k = top_k;
  return config;
}

}  // namespace
}  // namespace jobpulse

PYBIND11_MODULE(_core, m) {
  using namespace jobpulse;
  m.doc() = "JobPulse job-posting demand pipeline";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", error.ptr());
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("normalize_text", [](const std::string &s) { return NormalizeText(s); }, py::arg("text"));

  py::class_<Taxonomy>(m, "Taxonomy")
      .def_static("parse", &ParseTaxonomy, py::arg("csv_text"), py::arg("source") = "<string>")
      .def_static("load", &LoadTaxonomy, py::arg("path"))
      .def("__len__", [](const Taxonomy &t) { return t.jsts().size(); })
      .def_property_readonly("source_version", &Taxonomy::source_version)
      .def_property_readonly("jsts",
                             [](const Taxonomy &t) {
                               py::list out;
                               for (const auto &j : t.jsts()) out.append(JstDict(t, j));
                               return out;
                             })
      .def_property_readonly("warnings",
                             [](const Taxonomy &t) {
                               std::vector<std::string> out;
                               for (const auto &w : t.warnings()) out.push_back(w.Message());
                               return out;
                             })
      .def("lookup", [](const Taxonomy &t, const std::string &phrase) -> py::object {
        const Jst *jst = t.Lookup(std::string_view(phrase));
        if (jst == nullptr) return py::none();
        return JstDict(t, *jst);
      });

  py::class_<NameDictionary>(m, "NameDictionary")
      .def(py::init([](const std::vector<std::string> &tokens) {
             return NameDictionary(std::set<std::string>(tokens.begin(), tokens.end()));
           }),
           py::arg("tokens"))
      .def_static("parse", &NameDictionary::Parse, py::arg("text"), py::arg("source") = "<string>")
      .def_static("load", &NameDictionary::Load, py::arg("path"))
      .def("__contains__", &NameDictionary::Contains)
      .def_property_readonly("tokens", &NameDictionary::tokens);

  py::class_<Posting>(m, "Posting")
      .def(py::init([](std::string job_id, std::string title, std::string job_description, std::string employer_name,
                       std::string employer_description, const std::string &region, const std::string &retrieved_at) {
             Posting p;
             p.job_id = std::move(job_id);
             p.title = std::move(title);
             p.job_description = std::move(job_description);
             p.employer_name = std::move(employer_name);
             p.employer_description = std::move(employer_description);
             p.region = RegionArg(region);
             auto d = Date::Parse(retrieved_at);
             if (!d) throw ValidationError("malformed date '" + retrieved_at + "'");
             p.retrieved_at = *d;
             return p;
           }),
           py::arg("job_id"), py::arg("title"), py::arg("job_description"), py::arg("employer_name"),
           py::arg("employer_description") = "", py::arg("region") = "LA", py::arg("retrieved_at") = "2025-04-01")
      .def_readwrite("job_id", &Posting::job_id)
      .def_readwrite("title", &Posting::title)
      .def_readwrite("job_description", &Posting::job_description)
      .def_readwrite("employer_name", &Posting::employer_name)
      .def_readwrite("employer_description", &Posting::employer_description)
      .def_property_readonly("region", [](const Posting &p) { return std::string(RegionCode(p.region)); })
      .def_property_readonly("retrieved_at", [](const Posting &p) { return p.retrieved_at.ToString(); })
      .def("to_json", &PostingToJsonLine)
      .def("__eq__", [](const Posting &a, const Posting &b) { return a == b; });

  m.def(
      "load_postings",
      [](const std::vector<std::filesystem::path> &paths) {
        IngestResult r = LoadPostings(paths);
        std::vector<std::tuple<std::string, std::size_t, std::string>> rejected;
        for (const auto &d : r.rejected) rejected.emplace_back(d.source, d.line, d.reason);
        return std::make_pair(std::move(r.corpus.postings), std::move(rejected));
      },
      py::arg("paths"), "Returns (postings, rejected) where rejected holds (source, line, reason).");

  m.def(
      "search_phrase",
      [](const Taxonomy &t, const std::string &phrase, const std::string &industry) {
        const Jst *jst = t.Lookup(std::string_view(phrase));
        if (jst == nullptr) throw ValidationError("'" + phrase + "' is not a taxonomy term");
        return BuildSearchPhrase(*jst, industry).Render();
      },
      py::arg("taxonomy"), py::arg("phrase"), py::arg("industry_token") = "semiconductor");

  m.def(
      "match",
      [](const Posting &p, const Taxonomy &t) {
        std::vector<std::pair<std::string, bool>> out;
        const auto record = MatchPosting(p, t);
        if (record) {
          for (const auto &mt : record->matches) out.emplace_back(t.jsts()[mt.jst].phrase, mt.in_title);
        }
        return out;
      },
      py::arg("posting"), py::arg("taxonomy"), "Matched (term, in_title) pairs.");

  m.def(
      "industry_filter",
      [](const Posting &p, const std::string &token, const std::string &mode) {
        return IndustryFilter(p, NormalizeIndustryToken(token), FilterArg(mode));
      },
      py::arg("posting"), py::arg("industry_token") = "semiconductor", py::arg("mode") = "any_field");

  m.def(
      "weight_assignments",
      [](const std::vector<std::tuple<std::string, std::string, std::vector<std::string>>> &records,
         const Taxonomy &t) {
        std::vector<MatchRecord> in;
        for (const auto &[job_id, region, phrases] : records) {
          MatchRecord r;
          r.job_id = job_id;
          r.region = RegionArg(region);
          for (const auto &phrase : phrases) {
            const Jst *jst = t.Lookup(std::string_view(phrase));
            if (jst == nullptr) throw ValidationError("'" + phrase + "' is not a taxonomy term");
            r.matches.push_back({jst->id, false});
          }
          std::sort(r.matches.begin(), r.matches.end(),
                    [](const JstMatch &a, const JstMatch &b) { return a.jst < b.jst; });
          r.matches.erase(std::unique(r.matches.begin(), r.matches.end()), r.matches.end());
          in.push_back(std::move(r));
        }
        const DemandLedger ledger = WeightAssignments(std::move(in));
        py::list out;
        for (const auto &a : ledger.assignments) {
          out.append(py::make_tuple(a.job_id, std::string(RegionCode(a.region)), t.jsts()[a.jst].phrase,
                                    ToFraction(a.weight)));
        }
        return out;
      },
      py::arg("records"), py::arg("taxonomy"),
      "records: (job_id, region, [terms]); returns (job_id, region, term, Fraction weight).");

  m.def(
      "canonicalize",
      [](const std::vector<std::string> &names, const NameDictionary &dict) {
        const EmployerMapping mapping = Canonicalize(names, dict);
        std::map<std::string, std::string> out;
        for (const auto &e : mapping.employers()) {
          for (const auto &raw : e.members) out[raw] = e.canonical_name;
        }
        return out;
      },
      py::arg("names"), py::arg("dictionary"), "Maps each raw employer name to its canonical name.");

  m.def(
      "build_funnel",
      [](const std::vector<std::pair<std::string, std::size_t>> &stages) {
        std::vector<FunnelStage> in;
        for (const auto &[name, count] : stages) in.push_back({name, count});
        const FunnelReport report = BuildFunnel(std::move(in));
        py::list out;
        for (std::size_t i = 0; i < report.stages.size(); ++i) {
          out.append(py::make_tuple(report.stages[i].name, report.stages[i].count,
                                    i == 0 ? py::object(py::none()) : ToFraction(report.reductions[i - 1])));
        }
        return out;
      },
      py::arg("stages"));

  m.def(
      "ratio",
      [](py::object a, py::object b, int max_term) {
        const RatioReport r = Ratio(ParseRational(py::str(a).cast<std::string>()),
                                    ParseRational(py::str(b).cast<std::string>()), max_term);
        py::dict d;
        d["value"] = ToFraction(r.value);
        d["decimal"] = r.decimal;
        d["nearest"] = r.NearestText();
        d["unit"] = r.UnitText();
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("max_term") = 10);

  m.def(
      "generate",
      [](const Taxonomy &t, const NameDictionary &dict, std::uint64_t seed, std::size_t n_postings,
         std::size_t cross_region_repeat_count, std::optional<std::vector<std::pair<std::string, std::size_t>>> plants) {
        SynthConfig config;
        config.seed = seed;
        config.n_postings = n_postings;
        config.cross_region_repeat_count = cross_region_repeat_count;
        if (plants) {
          config.unknown_title_plants.clear();
          for (const auto &[phrase, count] : *plants) config.unknown_title_plants.push_back({phrase, count});
        }
        SynthOutput output = Generate(config, t, dict);
        return std::make_pair(std::move(output.postings), TruthToCsv(output.truth));
      },
      py::arg("taxonomy"), py::arg("dictionary"), py::arg("seed") = 42, py::arg("n_postings") = 6066,
      py::arg("cross_region_repeat_count") = 7, py::arg("plants") = py::none(),
      "Returns (postings, truth_csv).");

  m.def(
      "run_pipeline",
      [](const std::vector<Posting> &postings, const Taxonomy &t, const NameDictionary &dict,
         const std::string &industry_token, const std::string &filter_mode, std::size_t min_count, std::size_t top_k) {
        const PipelineConfig config = MakeConfig(industry_token, filter_mode, min_count, top_k);
        PipelineResult result;
        {
          py::gil_scoped_release release;
          result = RunPipeline(postings, t, dict, config);
        }
        py::dict out;
        py::list funnel;
        for (const auto &s : result.funnel.stages) funnel.append(py::make_tuple(s.name, s.count));
        out["funnel"] = funnel;
        out["demand_units"] = result.ledger.unit_count();
        py::dict tables;
        for (const auto &nt : result.tables) tables[py::str(nt.name)] = TableRows(nt.table);
        out["tables"] = tables;
        py::dict employers;
        employers["raw_names"] = result.employers.raw_names;
        employers["unique_employers"] = result.employers.unique_employers;
        employers["mean"] = result.employers.MeanText();
        employers["top_share"] = result.employers.TopShareText();
        out["employers"] = employers;
        if (result.technician_engineer) {
          out["technician_engineer"] = result.technician_engineer->UnitText();
        } else {
          out["technician_engineer"] = py::none();
        }
        std::vector<std::pair<std::string, std::size_t>> candidates;
        for (const auto &c : result.candidates) candidates.emplace_back(c.phrase, c.count);
        out["candidates"] = candidates;
        return out;
      },
      py::arg("postings"), py::arg("taxonomy"), py::arg("dictionary"), py::arg("industry_token") = "semiconductor",
      py::arg("filter_mode") = "any_field", py::arg("min_count") = 3, py::arg("top_k") = 3);
}
