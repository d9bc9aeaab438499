"""Missing-element diagnostics for parsed queries.

Drives the UI's three indicator buttons: question word, time, subject.
A time the parser substituted itself (defaulted "now" or inferred last
occurrence) still counts as present; time_defaulted tells the UI to show
an informational hint instead of an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import Lexicon
from .qparse import QueryTuple

QUESTION_WORD_SUGGESTIONS = ("what", "when", "how-much", "how-many", "how-often")
TEMPORAL_SUGGESTIONS = ("today", "yesterday", "week", "month", "year")
SUGGESTION_LIMIT = 5


@dataclass(frozen=True)
class ParseDiagnostics:
    flags: dict[str, bool]
    time_defaulted: bool
    suggestions: dict[str, list[str]]
    overall_ok: bool

    def to_dict(self) -> dict:
        return {
            "flags": dict(self.flags),
            "time_defaulted": self.time_defaulted,
            "suggestions": {k: list(v) for k, v in self.suggestions.items()},
            "overall_ok": self.overall_ok,
        }


def diagnose(tuple_: QueryTuple, lex: Lexicon) -> ParseDiagnostics:
    """Flag each checked category and suggest words for the missing ones."""
    has_question_word = tuple_.question_word is not None
    has_explicit_time = any(not ref.is_synthetic for ref in tuple_.times)
    has_time = bool(tuple_.times)
    has_subject = bool(tuple_.subjects)

    suggestions = {
        "question_word": [] if has_question_word else list(QUESTION_WORD_SUGGESTIONS[:SUGGESTION_LIMIT]),
        "time": [] if has_time else list(TEMPORAL_SUGGESTIONS[:SUGGESTION_LIMIT]),
        "subject": [] if has_subject else lex.ranked_subject_words()[:SUGGESTION_LIMIT],
    }

    return ParseDiagnostics(
        flags={
            "question_word": has_question_word,
            "time": has_time,
            "subject": has_subject,
        },
        time_defaulted=has_time and not has_explicit_time,
        suggestions=suggestions,
        overall_ok=has_question_word and has_time and has_subject,
    )
