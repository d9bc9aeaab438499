"""Categorized word store backing the query parser.

A lexicon is loaded once from a JSON file and treated as immutable from
then on; the tokenizer, parser and diagnostics all read it concurrently
without locks.  Entries are stored pre-stemmed so that classifying an
incoming word is a single dictionary probe.  Multi-word entries (for
example "last month" or "check up") are kept under their hyphen-joined
surface form, which is exactly what the tokenizer produces when it
merges the phrase.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .porter import stem


class Category(Enum):
    """Word category kinds. A stem may carry several of them."""

    QUESTION_WORD = "question_word"
    TEMPORAL = "temporal"
    SUBJECT = "subject"
    AGGREGATION = "aggregation"
    COMMAND = "command"
    STOP_WORD = "stop_word"
    TENSE_MARKER = "tense_marker"


class Tense(Enum):
    PAST = "past"
    PRESENT = "present"
    FUTURE = "future"


class LexiconError(Exception):
    """Base class for lexicon loading failures."""


class MalformedLexicon(LexiconError):
    """The lexicon file is not valid JSON or violates the file format."""


class MissingMandatoryEntry(LexiconError):
    """A required seed word is absent from the lexicon file."""

    def __init__(self, word: str, category: Category):
        self.word = word
        self.category = category
        super().__init__(f"mandatory {category.value} entry missing: {word!r}")


MONTH_NAMES = (
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december",
)
WEEKDAY_NAMES = (
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
)

MONTH_STEMS = frozenset(stem(name) for name in MONTH_NAMES)
WEEKDAY_STEMS = frozenset(stem(name) for name in WEEKDAY_NAMES)

# Words every usable lexicon file must provide, per category.
_MANDATORY = (
    (Category.TEMPORAL, MONTH_NAMES + WEEKDAY_NAMES),
    (Category.AGGREGATION, ("average", "miles", "amount", "next", "last", "more", "often", "daily")),
    (Category.COMMAND, ("find", "tell", "give", "show")),
)

# Category names accepted under "categories" in the file. Tense markers
# are deliberately not among them: they need a tense value, so they are
# declared in the separate "tense_markers" object.
_FILE_CATEGORIES = (
    Category.QUESTION_WORD,
    Category.TEMPORAL,
    Category.SUBJECT,
    Category.AGGREGATION,
    Category.COMMAND,
    Category.STOP_WORD,
)

_TOP_LEVEL_KEYS = {"version", "categories", "tense_markers", "subject_ranks"}


def entry_key(raw: str) -> tuple[tuple[str, ...], str]:
    """Normalize a raw lexicon entry or query word.

    Returns the constituent lowercase words and the lookup key: a plain
    stem for single words, the hyphen-joined surface for phrases.
    """
    words = tuple(raw.lower().replace("-", " ").split())
    if not words:
        raise ValueError("empty lexicon entry")
    if len(words) == 1:
        return words, stem(words[0])
    return words, "-".join(words)


@dataclass(frozen=True)
class Lexicon:
    """Immutable categorized word store."""

    version: str
    entries: dict[str, frozenset[Category]]
    tense_markers: dict[str, Tense]
    subject_frequency: dict[str, int]
    # Raw file content, preserved for serialization and display.
    raw_words: dict[Category, tuple[str, ...]]
    raw_tense_markers: dict[str, str]
    raw_subject_ranks: dict[str, int]
    # Derived lookup helpers.
    display_forms: dict[str, str]
    phrases: dict[tuple[str, ...], str]
    max_phrase_len: int

    def categories_of(self, word: str) -> frozenset[Category]:
        """Category kinds of a stem or raw word; empty set when unknown."""
        found = self.entries.get(word)
        if found is not None:
            return found
        return self.entries.get(stem(word), frozenset())

    def tense_of(self, word: str) -> Tense | None:
        return self.tense_markers.get(word) or self.tense_markers.get(stem(word))

    def ranked_subject_words(self) -> list[str]:
        """Subject display words ordered by frequency rank."""
        ranked = sorted(self.subject_frequency.items(), key=lambda kv: (kv[1], kv[0]))
        return [self.display_forms[s] for s, _ in ranked]

    def to_file_dict(self) -> dict:
        """Rebuild the lexicon file structure this lexicon was loaded from."""
        out: dict = {
            "version": self.version,
            "categories": {
                cat.value: list(self.raw_words[cat]) for cat in _FILE_CATEGORIES
            },
        }
        if self.raw_tense_markers:
            out["tense_markers"] = dict(self.raw_tense_markers)
        if self.raw_subject_ranks:
            out["subject_ranks"] = dict(self.raw_subject_ranks)
        return out


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise MalformedLexicon(message)


def lexicon_from_dict(data: dict) -> Lexicon:
    """Validate a parsed lexicon file and build the Lexicon."""
    _require(isinstance(data, dict), "lexicon file must be a JSON object")
    unknown = set(data) - _TOP_LEVEL_KEYS
    _require(not unknown, f"unknown top-level keys: {sorted(unknown)}")
    version = data.get("version")
    _require(isinstance(version, str) and version != "", "'version' must be a non-empty string")
    categories = data.get("categories")
    _require(isinstance(categories, dict), "'categories' must be an object")

    known_names = {cat.value: cat for cat in _FILE_CATEGORIES}
    entries: dict[str, set[Category]] = {}
    raw_words: dict[Category, tuple[str, ...]] = {cat: () for cat in _FILE_CATEGORIES}
    display_forms: dict[str, str] = {}
    phrases: dict[tuple[str, ...], str] = {}

    for name, words in categories.items():
        if name not in known_names:
            if name == Category.TENSE_MARKER.value:
                raise MalformedLexicon(
                    "tense markers belong in the top-level 'tense_markers' object"
                )
            raise MalformedLexicon(f"unknown category: {name!r}")
        cat = known_names[name]
        _require(isinstance(words, list), f"category {name!r} must be an array")
        raw_words[cat] = tuple(words)
        for raw in words:
            _require(isinstance(raw, str) and raw.strip() != "", f"bad word in {name!r}: {raw!r}")
            parts, key = entry_key(raw)
            entries.setdefault(key, set()).add(cat)
            display_forms.setdefault(key, raw)
            if len(parts) > 1:
                phrases[parts] = key

    tense_markers: dict[str, Tense] = {}
    raw_tense_markers = data.get("tense_markers", {})
    _require(isinstance(raw_tense_markers, dict), "'tense_markers' must be an object")
    for raw, value in raw_tense_markers.items():
        try:
            tense = Tense(value)
        except ValueError:
            raise MalformedLexicon(f"bad tense for {raw!r}: {value!r}") from None
        parts, key = entry_key(raw)
        _require(len(parts) == 1, f"tense marker must be a single word: {raw!r}")
        tense_markers[key] = tense
        entries.setdefault(key, set()).add(Category.TENSE_MARKER)
        display_forms.setdefault(key, raw)

    frozen = {key: frozenset(kinds) for key, kinds in entries.items()}

    for cat, required in _MANDATORY:
        for word in required:
            _, key = entry_key(word)
            if cat not in frozen.get(key, frozenset()):
                raise MissingMandatoryEntry(word, cat)

    # Frequency ranks default to file order; explicit ranks override.
    subject_frequency: dict[str, int] = {}
    for raw in raw_words[Category.SUBJECT]:
        _, key = entry_key(raw)
        subject_frequency.setdefault(key, len(subject_frequency) + 1)
    raw_subject_ranks = data.get("subject_ranks", {})
    _require(isinstance(raw_subject_ranks, dict), "'subject_ranks' must be an object")
    for raw, rank in raw_subject_ranks.items():
        _, key = entry_key(raw)
        _require(
            key in subject_frequency,
            f"subject_ranks names a word not listed under subjects: {raw!r}",
        )
        _require(
            isinstance(rank, int) and not isinstance(rank, bool) and rank >= 1,
            f"rank for {raw!r} must be an integer >= 1",
        )
        subject_frequency[key] = rank

    return Lexicon(
        version=version,
        entries=frozen,
        tense_markers=tense_markers,
        subject_frequency=subject_frequency,
        raw_words=raw_words,
        raw_tense_markers=dict(raw_tense_markers),
        raw_subject_ranks=dict(raw_subject_ranks),
        display_forms=display_forms,
        phrases=phrases,
        max_phrase_len=max((len(p) for p in phrases), default=1),
    )


def load_lexicon(path: str | Path | None = None) -> Lexicon:
    """Load and validate a lexicon file; None loads the bundled default."""
    if path is None:
        text = resources.files("qsquery.data").joinpath("lexicon.json").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedLexicon(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return lexicon_from_dict(data)


def categories_of(lex: Lexicon, word: str) -> frozenset[Category]:
    """Module-level alias for Lexicon.categories_of."""
    return lex.categories_of(word)
