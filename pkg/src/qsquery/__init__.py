"""Natural-language query interface for quantified-self data.

Parses free-text questions like "How much did I sleep last week?" into a
machine-actionable tuple (question word, tense, times, subjects,
aggregations), diagnoses missing elements, and suggests words to fix
them.  Designed to stay fast enough for wearable-grade hardware: no
models, no network, one lexicon lookup per word.
"""

from .diagnose import ParseDiagnostics, diagnose
from .lexicon import (
    Category,
    Lexicon,
    LexiconError,
    MalformedLexicon,
    MissingMandatoryEntry,
    Tense,
    load_lexicon,
)
from .qparse import (
    ComparisonArm,
    EmptyQuery,
    Mode,
    QueryTuple,
    TemporalRef,
    TimeSource,
    parse,
)
from .textnorm import Token, stem, tokenize

__all__ = [
    "Category",
    "ComparisonArm",
    "EmptyQuery",
    "Lexicon",
    "LexiconError",
    "MalformedLexicon",
    "MissingMandatoryEntry",
    "Mode",
    "ParseDiagnostics",
    "QueryTuple",
    "TemporalRef",
    "Tense",
    "TimeSource",
    "Token",
    "analyze",
    "diagnose",
    "load_lexicon",
    "parse",
    "stem",
    "tokenize",
]

__version__ = "0.1.0"


def analyze(lex: Lexicon, text: str, mode: Mode | str = Mode.IVT) -> dict:
    """Parse a query and diagnose it; the shared payload both the CLI
    and the HTTP service emit."""
    tuple_ = parse(lex, text, mode)
    diagnostics = diagnose(tuple_, lex)
    return {"tuple": tuple_.to_dict(), "diagnostics": diagnostics.to_dict()}
