# Copyright 2026 The JobPulse Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib
from fractions import Fraction

import pytest

import jobpulse

DATA = pathlib.Path(os.environ.get("JOBPULSE_DATA", pathlib.Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="module")
def taxonomy():
    return jobpulse.Taxonomy.load(DATA / "taxonomy.csv")


@pytest.fixture(scope="module")
def dictionary():
    return jobpulse.NameDictionary.load(DATA / "name_dictionary.txt")


def test_normalize_text():
    assert jobpulse.normalize_text("Post-Silicon  Validation, Engineer!") == [
        "post-silicon",
        "validation",
        "engineer",
    ]


def test_taxonomy_lookup(taxonomy):
    jst = taxonomy.lookup("Layout Engineer")
    assert jst == {"phrase": "layout engineer", "level": "title", "family": "design engineer", "function": "Engineer"}
    assert taxonomy.lookup("astronaut") is None
    assert any("semiconductor packaging engineer" in w for w in taxonomy.warnings)


def test_search_phrase(taxonomy):
    assert jobpulse.search_phrase(taxonomy, "product engineer") == 'semiconductor "product engineer"'


def test_match_and_filter(taxonomy):
    p = jobpulse.Posting(
        "1", "Senior Product Engineer", "Join our semiconductor team as a test engineer.", "Acme Inc."
    )
    assert jobpulse.match(p, taxonomy) == [("product engineer", True), ("test engineer", False)]
    assert jobpulse.industry_filter(p)
    assert not jobpulse.industry_filter(p, mode="all_fields")


def test_weights_are_exact_fractions(taxonomy):
    rows = jobpulse.weight_assignments(
        [("1", "LA", ["product engineer", "test engineer", "yield engineer"]), ("2", "SD", ["fab technician"])],
        taxonomy,
    )
    assert sum(r[3] for r in rows if r[0] == "1") == 1
    assert {r[3] for r in rows if r[0] == "1"} == {Fraction(1, 3)}
    assert sum(r[3] for r in rows) == 2


def test_canonicalize(dictionary):
    mapping = jobpulse.canonicalize(
        ["Amazon", "Amazon Web Services", "Advanced Micro Devices", "Advanced Systems Inc."], dictionary
    )
    assert mapping["Amazon Web Services"] == "amazon"
    assert mapping["Advanced Micro Devices"] != mapping["Advanced Systems Inc."]


def test_funnel_and_ratio():
    funnel = jobpulse.build_funnel([("raw", 300), ("filtered", 200), ("units", 90)])
    assert funnel[1][2] == Fraction(1, 3)
    r = jobpulse.ratio(Fraction(1, 5), Fraction(2, 3))
    assert r["unit"] == "1:3"
    with pytest.raises(jobpulse.ValidationError):
        jobpulse.ratio(1, 0)


def test_generate_and_pipeline(taxonomy, dictionary):
    postings, truth = jobpulse.generate(taxonomy, dictionary, seed=7, n_postings=600, cross_region_repeat_count=2,
                                        plants=[("rf engineer", 5)])
    assert len(postings) == 602
    assert truth.startswith("job_id,region,off_industry")
    again, _ = jobpulse.generate(taxonomy, dictionary, seed=7, n_postings=600, cross_region_repeat_count=2,
                                 plants=[("rf engineer", 5)])
    assert [p.to_json() for p in postings] == [p.to_json() for p in again]
    result = jobpulse.run_pipeline(postings, taxonomy, dictionary)
    assert result["candidates"] == [("rf engineer", 5)]
    total = sum(row["total"] for row in result["tables"]["demand_function"])
    assert total == result["demand_units"]


def test_load_postings_reports_rejects(tmp_path):
    path = tmp_path / "la.jsonl"
    good = jobpulse.Posting("9", "Fab Technician", "semiconductor fab", "Acme").to_json()
    path.write_text(good + "\nnot json\n")
    postings, rejected = jobpulse.load_postings([path])
    assert len(postings) == 1
    assert rejected[0][1] == 2
