"""JobPulse: classify job postings against a job-term taxonomy and report demand."""

from ._core import (
    ContractError,
    Error,
    IoError,
    NameDictionary,
    ParseError,
    Posting,
    Taxonomy,
    ValidationError,
    build_funnel,
    canonicalize,
    generate,
    industry_filter,
    load_postings,
    match,
    normalize_text,
    ratio,
    run_pipeline,
    search_phrase,
    weight_assignments,
)

__all__ = [
    "ContractError",
    "Error",
    "IoError",
    "NameDictionary",
    "ParseError",
    "Posting",
    "Taxonomy",
    "ValidationError",
    "build_funnel",
    "canonicalize",
    "generate",
    "industry_filter",
    "load_postings",
    "match",
    "normalize_text",
    "ratio",
    "run_pipeline",
    "search_phrase",
    "weight_assignments",
]
