"""Five-tuple query extraction from a token bag.

A parsed query is <question word, tense, times, subjects, aggregations>.
Word order is irrelevant for everything except binding an aggregation
word to the nearest time mention when a comparison is detected.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lexicon import MONTH_STEMS, WEEKDAY_STEMS, Category, Lexicon, Tense
from .textnorm import Token, tokenize

__all__ = [
    "ComparisonArm",
    "EmptyQuery",
    "Mode",
    "QueryTuple",
    "TemporalRef",
    "Tense",
    "TimeSource",
    "detect_tense",
    "extract_tuple",
    "parse",
]


class EmptyQuery(ValueError):
    """Raised when a query normalizes to zero tokens."""


class Mode(Enum):
    """Parser ablation modes: bag of words, plus tense, plus comparison."""

    BL = "bl"
    IV = "iv"
    IVT = "ivt"


class TimeSource(Enum):
    EXPLICIT_TERM = "explicit_term"
    MONTH_NAME = "month_name"
    WEEKDAY_NAME = "weekday_name"
    DEFAULTED_NOW = "defaulted_now"
    INFERRED_LAST_OCCURRENCE = "inferred_last_occurrence"


_SYNTHETIC_SOURCES = frozenset(
    {TimeSource.DEFAULTED_NOW, TimeSource.INFERRED_LAST_OCCURRENCE}
)


@dataclass(frozen=True)
class TemporalRef:
    """One notion of time; synthetic refs carry no term and position -1."""

    source: TimeSource
    term: str
    position: int

    @property
    def is_synthetic(self) -> bool:
        return self.source in _SYNTHETIC_SOURCES

    def to_dict(self) -> dict:
        return {"source": self.source.value, "term": self.term, "position": self.position}


_NOW = TemporalRef(TimeSource.DEFAULTED_NOW, "", -1)
_LAST_OCCURRENCE = TemporalRef(TimeSource.INFERRED_LAST_OCCURRENCE, "", -1)


@dataclass(frozen=True)
class ComparisonArm:
    time: TemporalRef
    aggregation: str | None

    def to_dict(self) -> dict:
        return {"time": self.time.to_dict(), "aggregation": self.aggregation}


@dataclass(frozen=True)
class QueryTuple:
    question_word: str | None
    tense: Tense
    times: tuple[TemporalRef, ...]
    subjects: tuple[str, ...]
    qualifiers: tuple[str, ...]
    aggregations: tuple[str, ...]
    is_comparison: bool
    comparison_arms: tuple[ComparisonArm, ...]
    mode: Mode

    def to_dict(self) -> dict:
        """Wire format; key order is part of the contract."""
        return {
            "question_word": self.question_word,
            "tense": self.tense.value,
            "times": [ref.to_dict() for ref in self.times],
            "subjects": list(self.subjects),
            "qualifiers": list(self.qualifiers),
            "aggregations": list(self.aggregations),
            "is_comparison": self.is_comparison,
            "comparison_arms": [arm.to_dict() for arm in self.comparison_arms],
            "mode": self.mode.value,
        }


def detect_tense(tokens: list[Token], lex: Lexicon) -> Tense:
    """Verb tense of a token bag.

    Past markers win over future markers, which win over the present
    default.  Unknown words ending in "-ed" count as past; words the
    lexicon knows are exempt so that subjects like "speed" never read as
    past tense.
    """
    future = False
    for token in tokens:
        if Category.TENSE_MARKER in token.kinds:
            marked = lex.tense_markers.get(token.stem)
            if marked is Tense.PAST:
                return Tense.PAST
            if marked is Tense.FUTURE:
                future = True
        elif not token.kinds and token.surface.endswith("ed"):
            return Tense.PAST
    return Tense.FUTURE if future else Tense.PRESENT


def _classify_time(token: Token) -> TimeSource:
    if token.stem in MONTH_STEMS:
        return TimeSource.MONTH_NAME
    if token.stem in WEEKDAY_STEMS:
        return TimeSource.WEEKDAY_NAME
    return TimeSource.EXPLICIT_TERM


def _build_arms(
    explicit: tuple[TemporalRef, ...], agg_tokens: list[Token]
) -> tuple[ComparisonArm, ...]:
    """One arm per explicit time, each bound to the nearest aggregation.

    Two times may share one aggregation word.  When an aggregation sits
    exactly between two times, the earlier time takes it and the later
    arm stays empty.
    """
    picks: list[tuple[int, int, str] | None] = []
    for ref in explicit:
        best = None
        for token in agg_tokens:
            candidate = (abs(token.position - ref.position), token.position, token.stem)
            if best is None or candidate[:2] < best[:2]:
                best = candidate
        picks.append(best)
    arms = []
    for j, (ref, pick) in enumerate(zip(explicit, picks)):
        if pick is None:
            arms.append(ComparisonArm(ref, None))
            continue
        distance, agg_position, agg_stem = pick
        taken_by_earlier = any(
            picks[i] is not None
            and picks[i][1] == agg_position
            and picks[i][0] == distance
            for i in range(j)
        )
        arms.append(ComparisonArm(ref, None if taken_by_earlier else agg_stem))
    return tuple(arms)


def extract_tuple(tokens: list[Token], lex: Lexicon, mode: Mode | str = Mode.IVT) -> QueryTuple:
    """Build the query tuple from tokens produced with the same lexicon."""
    mode = Mode(mode)
    if not tokens:
        raise EmptyQuery("query contains no usable words")

    question_word = None
    for token in tokens:
        if Category.QUESTION_WORD in token.kinds:
            question_word = token.stem
            break

    subjects = tuple(t.stem for t in tokens if Category.SUBJECT in t.kinds)
    qualifiers = tuple(t.stem for t in tokens if not t.kinds)
    agg_tokens = [t for t in tokens if Category.AGGREGATION in t.kinds]
    aggregations = tuple(t.stem for t in agg_tokens)

    explicit = tuple(
        TemporalRef(_classify_time(t), t.stem, t.position)
        for t in tokens
        if Category.TEMPORAL in t.kinds
    )

    tense = Tense.PRESENT if mode is Mode.BL else detect_tense(tokens, lex)
    if explicit:
        times = explicit
    elif tense is Tense.PAST:
        times = (_LAST_OCCURRENCE,)
    else:
        times = (_NOW,)

    is_comparison = mode is Mode.IVT and len(explicit) >= 2
    arms = _build_arms(explicit, agg_tokens) if is_comparison else ()

    return QueryTuple(
        question_word=question_word,
        tense=tense,
        times=times,
        subjects=subjects,
        qualifiers=qualifiers,
        aggregations=aggregations,
        is_comparison=is_comparison,
        comparison_arms=arms,
        mode=mode,
    )


def parse(lex: Lexicon, text: str, mode: Mode | str = Mode.IVT) -> QueryTuple:
    """Tokenize and extract in one step."""
    return extract_tuple(tokenize(lex, text), lex, mode)
