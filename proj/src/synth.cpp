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

#include "jobpulse/synth.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "jobpulse/error.hpp"
#include "jobpulse/io.hpp"
#include "jobpulse/matcher.hpp"
#include "jobpulse/text.hpp"

namespace jobpulse {

namespace {

// Portable across standard libraries, unlike std::uniform_int_distribution
// and std::shuffle, so a seed names the same corpus everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x < threshold);
    return x % n;
  }

  std::size_t Range(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(Below(hi - lo + 1)); }

  bool Chance(std::uint64_t num, std::uint64_t den) { return Below(den) < num; }

  template <typename T>
  void Shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[Below(i)]);
  }

  template <typename T>
  const T &Pick(const std::vector<T> &v) {
    return v[Below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::size_t FloorOf(const Rational &x) {
  return static_cast<std::size_t>(BigInt(boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x)));
}

std::size_t RoundHalfUp(const Rational &x) { return FloorOf(x + Rational(1, 2)); }

// Largest-remainder apportionment of |n| slots by |weights| (summing to 1).
std::vector<std::size_t> Apportion(std::size_t n, std::span<const Rational> weights) {
  std::vector<std::size_t> counts(weights.size());
  std::vector<Rational> remainders(weights.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Rational exact = weights[i] * static_cast<long long>(n);
    counts[i] = FloorOf(exact);
    remainders[i] = exact - static_cast<long long>(counts[i]);
    assigned += counts[i];
  }
  std::vector<std::size_t> order(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t i = 0; assigned < n && i < order.size(); ++i, ++assigned) ++counts[order[i]];
  return counts;
}

// A shuffled label per slot with exact quota counts.
std::vector<std::size_t> Quota(std::size_t n, std::span<const Rational> weights, Rng &rng) {
  const auto counts = Apportion(n, weights);
  std::vector<std::size_t> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < counts.size(); ++i) labels.insert(labels.end(), counts[i], i);
  rng.Shuffle(labels);
  return labels;
}

void CheckRate(const Rational &r, const std::string &name) {
  if (r < 0 || r > 1) throw ValidationError("synth: " + name + " must be in [0, 1], got " + FormatFraction(r));
}

template <std::size_t N>
void CheckMix(const std::array<Rational, N> &mix, const std::string &name) {
  Rational sum = 0;
  for (const auto &r : mix) {
    CheckRate(r, name);
    sum += r;
  }
  if (sum != 1) throw ValidationError("synth: " + name + " must sum to exactly 1, got " + FormatFraction(sum));
}

const std::vector<std::string> kFillerWords = {
    "responsible", "for",      "the",     "and",       "with",      "our",       "team",       "develop",
    "support",     "across",   "we",      "are",       "seeking",   "join",      "growing",    "will",
    "work",        "closely",  "customers", "including", "ensure",  "strong",    "skills",     "years",
    "required",    "preferred", "bachelor", "degree",   "excellent", "communication", "fast",  "paced",
    "environment", "benefits", "competitive", "salary", "onsite",   "collaborate", "partners", "deliver",
    "results",     "new",      "products", "customer", "driven",    "innovative", "mission",   "critical",
    "programs",    "on",       "site",    "full",      "time",      "opportunity", "apply",    "today",
    "hands",       "knowledge", "ability", "minimum",  "plus",      "world",     "class",      "leader"};

const std::vector<std::string> kSeniority = {"senior", "staff", "lead", "principal", "junior", "associate"};

const std::vector<std::string> kTailWords = {"systems",     "technologies", "devices",   "labs",
                                             "instruments", "solutions",    "electronics", "dynamics",
                                             "industries",  "photonics",    "microsystems", "networks"};

const std::vector<std::vector<std::string>> kDivisionWords = {
    {"web", "services"}, {"defense"},         {"space", "systems"}, {"robotics"},
    {"research"},        {"federal"},         {"aerospace"},        {"mission", "systems"},
    {"government", "solutions"}, {"health"},  {"energy"},           {"test", "and", "measurement"},
    {"ventures"},        {"international"}};

const std::vector<std::string> kLegalSuffixes = {" Inc.", ", Inc.", " LLC", " Corp.", " Ltd."};

const std::vector<std::string> kOffIndustryTails = {"foods", "health", "logistics", "retail", "bank", "motors"};

std::string RenderName(const TokenSeq &tokens) {
  std::string out;
  for (const auto &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += (t == "of" || t == "and") ? t : TitleCase(t);
  }
  return out;
}

class StemFactory {
 public:
  StemFactory(Rng &rng, std::set<std::string> forbidden) : rng_(rng), used_(std::move(forbidden)) {}

  std::string Next() {
    static const std::string kConsonants = "bdfgklmnprstvz";
    static const std::string kVowels = "aeiou";
    static const std::string kFinals = "nrxsl";
    while (true) {
      std::string s;
      const std::size_t syllables = rng_.Range(2, 3);
      for (std::size_t i = 0; i < syllables; ++i) {
        s.push_back(kConsonants[rng_.Below(kConsonants.size())]);
        s.push_back(kVowels[rng_.Below(kVowels.size())]);
      }
      if (rng_.Chance(1, 2)) s.push_back(kFinals[rng_.Below(kFinals.size())]);
      if (used_.insert(s).second) return s;
    }
  }

 private:
  Rng &rng_;
  std::set<std::string> used_;
};

EmployerNameSet MakeEmployerNames(std::size_t n, const SynthConfig &config, const NameDictionary &dictionary,
                                  Rng &rng, StemFactory &stems) {
  EmployerNameSet set;
  if (n == 0) return set;
  std::size_t n_div = RoundHalfUp(config.division_rate * static_cast<long long>(n));
  std::size_t n_listed = RoundHalfUp(config.listed_parent_rate * static_cast<long long>(n_div));
  const std::size_t n_parents = n - n_div;
  if (n_parents == 0) n_listed = 0;
  const std::size_t n_unlisted = n_div - n_listed;
  const std::size_t companies = n_parents + n_unlisted;

  std::vector<std::string> prefixes;
  for (const auto &t : dictionary.tokens()) {
    if (t != "of" && t != "and") prefixes.push_back(t);
  }
  const std::array<Rational, 2> collision_mix{config.onomastic_collision_rate, 1 - config.onomastic_collision_rate};
  const auto collides = Quota(companies, collision_mix, rng);

  std::vector<TokenSeq> bases(companies);
  for (std::size_t c = 0; c < companies; ++c) {
    TokenSeq &base = bases[c];
    if (collides[c] == 0 && !prefixes.empty()) {
      const std::string &p = rng.Pick(prefixes);
      base.push_back(p);
      if (p == "university" && dictionary.Contains("of")) base.push_back("of");
    }
    base.push_back(stems.Next());
    if (rng.Chance(1, 2)) base.push_back(rng.Pick(kTailWords));
  }

  struct Entry {
    TokenSeq tokens;
    std::size_t company;
  };
  std::vector<Entry> entries;
  for (std::size_t c = 0; c < n_parents; ++c) entries.push_back({bases[c], c});
  for (std::size_t c = n_parents; c < companies; ++c) {
    TokenSeq tokens = bases[c];
    for (const auto &w : rng.Pick(kDivisionWords)) tokens.push_back(w);
    entries.push_back({std::move(tokens), c});
  }
  std::vector<std::vector<std::size_t>> used_divisions(n_parents);
  for (std::size_t i = 0; i < n_listed; ++i) {
    std::size_t parent;
    do {
      parent = rng.Below(n_parents);
    } while (used_divisions[parent].size() == kDivisionWords.size());
    std::size_t word;
    do {
      word = rng.Below(kDivisionWords.size());
    } while (std::find(used_divisions[parent].begin(), used_divisions[parent].end(), word) !=
             used_divisions[parent].end());
    used_divisions[parent].push_back(word);
    TokenSeq tokens = bases[parent];
    for (const auto &w : kDivisionWords[word]) tokens.push_back(w);
    entries.push_back({std::move(tokens), parent});
  }
  rng.Shuffle(entries);

  set.divisions = n_listed + n_unlisted;
  set.listed_divisions = n_listed;
  for (const auto &e : entries) {
    std::string name = RenderName(e.tokens);
    if (rng.Chance(1, 5)) name += rng.Pick(kLegalSuffixes);
    set.names.push_back(std::move(name));
    set.company.push_back(RenderTokens(bases[e.company]));
  }
  return set;
}

std::vector<Date> DaysIn(const CollectionWindow &window) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  std::vector<Date> out;
  Date d = window.first;
  while (d <= window.last && out.size() < 100000) {
    out.push_back(d);
    const bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
    const int limit = kDays[d.month - 1] + ((d.month == 2 && leap) ? 1 : 0);
    if (++d.day > limit) {
      d.day = 1;
      if (++d.month > 12) {
        d.month = 1;
        ++d.year;
      }
    }
  }
  return out;
}

bool ContainsEither(const TokenSeq &haystack, const TokenSeq &needle) {
  if (ContainsRun(haystack, needle)) return true;
  const TokenSeq bridged = BridgeHyphens(haystack);
  return !bridged.empty() && ContainsRun(bridged, needle);
}

}  // namespace

void SynthConfig::Validate() const {
  CheckMix(region_mix, "region_mix");
  CheckMix(function_mix, "function_mix");
  CheckMix(multi_jst_rate_by_k, "multi_jst_rate_by_k");
  CheckRate(off_industry_rate, "off_industry_rate");
  CheckRate(division_rate, "division_rate");
  CheckRate(listed_parent_rate, "listed_parent_rate");
  CheckRate(onomastic_collision_rate, "onomastic_collision_rate");
  if (employer_name_ratio <= 0 || employer_name_ratio > 1) {
    throw ValidationError("synth: employer_name_ratio must be in (0, 1]");
  }
  NormalizeIndustryToken(industry_token);
  if (window.last < window.first) throw ValidationError("synth: collection window is empty");
  for (const auto &plant : unknown_title_plants) {
    if (NormalizeText(plant.phrase).empty()) throw ValidationError("synth: empty title plant");
  }
}

EmployerNameSet GenerateEmployerNames(std::size_t n_names, const SynthConfig &config, const NameDictionary &dictionary,
                                      std::uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  std::set<std::string> forbidden = dictionary.tokens();
  StemFactory stems(rng, std::move(forbidden));
  return MakeEmployerNames(n_names, config, dictionary, rng, stems);
}

SynthOutput Generate(const SynthConfig &config, const Taxonomy &taxonomy, const NameDictionary &dictionary) {
  config.Validate();
  SynthOutput out;
  if (config.n_postings == 0) return out;
  Rng rng(config.seed);
  const std::string industry = NormalizeIndustryToken(config.industry_token);
  const std::size_t n = config.n_postings;

  // Every token used anywhere in the taxonomy, hyphen parts included.
  std::set<std::string> taxonomy_tokens;
  for (const auto &jst : taxonomy.jsts()) {
    for (const auto &t : jst.tokens) taxonomy_tokens.insert(t);
    for (const auto &t : BridgeHyphens(jst.tokens)) taxonomy_tokens.insert(t);
  }
  if (taxonomy.Lookup(industry) != nullptr) {
    throw ValidationError("synth: industry token '" + industry + "' is itself a taxonomy term");
  }

  std::vector<std::string> filler;
  for (const auto &w : kFillerWords) {
    if (taxonomy_tokens.count(w) == 0 && w != industry) filler.push_back(w);
  }
  std::vector<std::string> seniority;
  for (const auto &w : kSeniority) {
    if (taxonomy_tokens.count(w) == 0 && w != industry) seniority.push_back(w);
  }
  if (filler.size() < 8) throw ValidationError("synth: taxonomy leaves too few filler words");

  // Plantable terms contain no other term, so planting one yields exactly one
  // match. Off-industry postings additionally avoid terms containing the
  // industry token.
  const TokenSeq industry_seq{industry};
  std::array<std::vector<JstId>, 4> pool;
  std::array<std::vector<JstId>, 4> clean_pool;
  for (const auto &p : taxonomy.jsts()) {
    bool atomic = true;
    for (const auto &q : taxonomy.jsts()) {
      if (q.id != p.id && ContainsEither(p.tokens, q.tokens)) {
        atomic = false;
        break;
      }
    }
    if (!atomic) continue;
    const auto f = static_cast<std::size_t>(taxonomy.FunctionOf(p));
    pool[f].push_back(p.id);
    if (!ContainsEither(p.tokens, industry_seq)) clean_pool[f].push_back(p.id);
  }
  for (std::size_t f = 0; f < 4; ++f) {
    if (config.function_mix[f] > 0 && (pool[f].empty() || (config.off_industry_rate > 0 && clean_pool[f].empty()))) {
      throw ValidationError("synth: no plantable term for function " +
                            std::string(FunctionName(static_cast<JobFunction>(f))));
    }
  }
  for (const auto &plant : config.unknown_title_plants) {
    const TokenSeq tokens = NormalizeText(plant.phrase);
    for (const auto &jst : taxonomy.jsts()) {
      if (ContainsEither(tokens, jst.tokens) || ContainsEither(jst.tokens, tokens)) {
        throw ValidationError("synth: title plant '" + plant.phrase + "' overlaps taxonomy term '" + jst.phrase + "'");
      }
    }
  }

  // Quotas: k, then off-industry within each k stratum, then function and
  // region within the on- and off-industry sets.
  const auto k_labels = Quota(n, config.multi_jst_rate_by_k, rng);
  std::vector<bool> off(n, false);
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<std::size_t> stratum;
    for (std::size_t i = 0; i < n; ++i) {
      if (k_labels[i] == k) stratum.push_back(i);
    }
    const std::array<Rational, 2> off_mix{config.off_industry_rate, 1 - config.off_industry_rate};
    const auto labels = Quota(stratum.size(), off_mix, rng);
    for (std::size_t j = 0; j < stratum.size(); ++j) off[stratum[j]] = labels[j] == 0;
  }
  std::vector<std::size_t> function_of(n), region_of(n);
  std::vector<std::size_t> on_idx, off_idx;
  for (std::size_t i = 0; i < n; ++i) (off[i] ? off_idx : on_idx).push_back(i);
  for (const auto *group : {&on_idx, &off_idx}) {
    const auto functions = Quota(group->size(), config.function_mix, rng);
    const auto regions = Quota(group->size(), config.region_mix, rng);
    for (std::size_t j = 0; j < group->size(); ++j) {
      function_of[(*group)[j]] = functions[j];
      region_of[(*group)[j]] = regions[j];
    }
  }

  // Employers.
  std::set<std::string> forbidden_stems = dictionary.tokens();
  forbidden_stems.insert(industry);
  StemFactory stems(rng, forbidden_stems);
  const std::size_t n_names =
      std::clamp<std::size_t>(RoundHalfUp(config.employer_name_ratio * static_cast<long long>(on_idx.size())), 1,
                              std::max<std::size_t>(on_idx.size(), 1));
  EmployerNameSet names = MakeEmployerNames(on_idx.empty() ? 0 : n_names, config, dictionary, rng, stems);
  std::vector<std::size_t> employer_of(n, 0);
  {
    std::vector<std::size_t> order = on_idx;
    rng.Shuffle(order);
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (j < names.names.size()) {
        employer_of[order[j]] = j;
      } else {
        // Skewed: a few employers recruit heavily, most list a handful.
        const std::size_t r = rng.Below(names.names.size());
        employer_of[order[j]] = rng.Below(rng.Below(r + 1) + 1);
      }
    }
  }
  std::vector<std::string> off_names;
  for (std::size_t j = 0; j < std::max<std::size_t>(1, off_idx.size() / 3); ++j) {
    off_names.push_back(RenderName({stems.Next(), rng.Pick(kOffIndustryTails)}));
  }

  // Out-of-taxonomy titles go to on-industry postings.
  std::size_t plant_total = 0;
  for (const auto &p : config.unknown_title_plants) plant_total += p.count;
  if (plant_total + config.cross_region_repeat_count > on_idx.size()) {
    throw ValidationError("synth: " + std::to_string(plant_total) + " title plants and " +
                          std::to_string(config.cross_region_repeat_count) +
                          " cross-region repeats need more on-industry postings than " +
                          std::to_string(on_idx.size()));
  }
  std::vector<std::string> plant_title(n);
  std::vector<std::size_t> candidates = on_idx;
  rng.Shuffle(candidates);
  {
    std::size_t c = 0;
    for (const auto &p : config.unknown_title_plants) {
      for (std::size_t j = 0; j < p.count; ++j) plant_title[candidates[c++]] = RenderTokens(NormalizeText(p.phrase));
      out.truth.title_plants[RenderTokens(NormalizeText(p.phrase))] += p.count;
    }
    candidates.erase(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(c));
  }

  const std::vector<Date> days = DaysIn(config.window);
  std::unordered_set<std::string> job_ids;
  auto new_job_id = [&] {
    while (true) {
      std::string id = std::to_string(1000000000ULL + rng.Below(9000000000ULL));
      if (job_ids.insert(id).second) return id;
    }
  };
  auto filler_run = [&](std::size_t lo, std::size_t hi) {
    std::string s;
    const std::size_t count = rng.Range(lo, hi);
    for (std::size_t i = 0; i < count; ++i) {
      if (!s.empty()) s.push_back(' ');
      s += rng.Pick(filler);
    }
    return s;
  };
  static const std::vector<std::string> kSeparators = {" ", ", ", ". ", "; "};

  out.postings.reserve(n + config.cross_region_repeat_count);
  out.truth.postings.reserve(n + config.cross_region_repeat_count);
  for (std::size_t i = 0; i < n; ++i) {
    const auto &source_pool = off[i] ? clean_pool[function_of[i]] : pool[function_of[i]];
    std::vector<JstId> picks = source_pool;
    const std::size_t k = std::min(k_labels[i] + 1, picks.size());
    for (std::size_t j = 0; j < k; ++j) std::swap(picks[j], picks[j + rng.Below(picks.size() - j)]);
    picks.resize(k);

    // 0: job description only, 1: employer description only, 2: both.
    const std::size_t placement = off[i] ? 3 : rng.Below(3);
    std::vector<std::string> parts{filler_run(2, 5)};
    for (JstId id : picks) {
      const std::string &phrase = taxonomy.jsts()[id].phrase;
      parts.push_back(rng.Chance(1, 2) ? TitleCase(phrase) : phrase);
      parts.push_back(filler_run(1, 4));
    }
    if (placement == 0 || placement == 2) {
      const std::size_t at = 1 + rng.Below(parts.size());
      parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(at),
                   filler_run(1, 2) + " " + (rng.Chance(1, 2) ? TitleCase(industry) : industry) + " " +
                       filler_run(1, 2));
    }
    char code[32];
    std::snprintf(code, sizeof(code), "R%07zu", i);
    parts.push_back(code);
    std::string description;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j > 0) description += rng.Pick(kSeparators);
      description += parts[j];
    }
    description.push_back('.');

    std::string employer_description = TitleCase(filler_run(3, 6));
    if (placement == 1 || placement == 2) employer_description += " " + industry + " " + filler_run(1, 3);
    employer_description.push_back('.');

    Posting posting;
    posting.job_id = new_job_id();
    if (!plant_title[i].empty()) {
      posting.title = TitleCase(plant_title[i]);
    } else {
      const std::string &primary = taxonomy.jsts()[picks.front()].phrase;
      posting.title = (!seniority.empty() && rng.Chance(1, 2)) ? TitleCase(rng.Pick(seniority) + " " + primary)
                                                                : TitleCase(primary);
    }
    posting.job_description = std::move(description);
    posting.employer_name = off[i] ? rng.Pick(off_names) : names.names[employer_of[i]];
    posting.employer_description = std::move(employer_description);
    posting.region = static_cast<Region>(region_of[i]);
    posting.retrieved_at = rng.Pick(days);

    PostingTruth truth;
    truth.job_id = posting.job_id;
    truth.region = posting.region;
    truth.off_industry = off[i];
    for (JstId id : picks) truth.planted_jsts.push_back(taxonomy.jsts()[id].phrase);
    std::sort(truth.planted_jsts.begin(), truth.planted_jsts.end());
    truth.planted_title = plant_title[i];
    truth.employer_name = posting.employer_name;
    truth.employer_company = off[i] ? RenderTokens(NormalizeEmployerName(posting.employer_name))
                                    : names.company[employer_of[i]];
    out.postings.push_back(std::move(posting));
    out.truth.postings.push_back(std::move(truth));
  }

  // Cross-region repeats: the same advertisement under a new job id in
  // another region.
  for (std::size_t g = 0; g < config.cross_region_repeat_count; ++g) {
    const std::size_t src = candidates[g];
    Posting copy = out.postings[src];
    PostingTruth truth = out.truth.postings[src];
    const auto other = (static_cast<std::size_t>(copy.region) + 1 + rng.Below(2)) % 3;
    copy.region = static_cast<Region>(other);
    copy.job_id = new_job_id();
    copy.retrieved_at = rng.Pick(days);
    truth.job_id = copy.job_id;
    truth.region = copy.region;
    truth.cross_region_group = g;
    out.truth.postings[src].cross_region_group = g;
    out.postings.push_back(std::move(copy));
    out.truth.postings.push_back(std::move(truth));
  }
  out.truth.cross_region_groups = config.cross_region_repeat_count;
  return out;
}

std::string TruthToCsv(const GroundTruth &truth) {
  CsvWriter csv({"job_id", "region", "off_industry", "planted_jsts", "planted_title", "employer_name",
                 "employer_company", "cross_region_group"});
  for (const auto &t : truth.postings) {
    std::string jsts;
    for (const auto &p : t.planted_jsts) {
      if (!jsts.empty()) jsts.push_back(';');
      jsts += p;
    }
    csv.Row({t.job_id, std::string(RegionCode(t.region)), t.off_industry ? "1" : "0", jsts, t.planted_title,
             t.employer_name, t.employer_company,
             t.cross_region_group ? std::to_string(*t.cross_region_group + 1) : ""});
  }
  return csv.str();
}

std::vector<std::filesystem::path> WriteSynth(const SynthOutput &output, const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  std::array<std::string, 3> files;
  for (const auto &p : output.postings) {
    auto &text = files[static_cast<std::size_t>(p.region)];
    text += PostingToJsonLine(p);
    text.push_back('\n');
  }
  std::vector<std::filesystem::path> paths;
  for (Region r : kAllRegions) {
    std::string name(RegionCode(r));
    for (char &c : name) c = static_cast<char>(c - 'A' + 'a');
    const auto path = dir / (name + ".jsonl");
    WriteFileAtomic(path, files[static_cast<std::size_t>(r)]);
    paths.push_back(path);
  }
  WriteFileAtomic(dir / "truth.csv", TruthToCsv(output.truth));
  return paths;
}

}  // namespace jobpulse
