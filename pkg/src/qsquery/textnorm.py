"""Raw query text to normalized, categorized tokens.

Pipeline: lowercase, split on whitespace (hyphens count as separators),
strip surrounding punctuation, drop intra-word apostrophes, merge
multi-word lexicon phrases ("last month", "how often"), stem, attach
category kinds, and finally remove pure stop words.  Token positions are
assigned after phrase merging and before stop-word removal, so gaps in
the output betray where stop words sat.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .lexicon import Category, Lexicon
from .porter import stem

__all__ = ["Token", "tokenize", "stem"]

_STRIP_CHARS = string.punctuation + "“”‘’«»…¿¡"
_APOSTROPHES = ("'", "’")
_HYPHENS = ("-", "‐", "–", "—")


@dataclass(frozen=True)
class Token:
    """One normalized word (or merged phrase) of a query.

    surface keeps the lowercased, punctuation-stripped word before
    stemming; merged phrases keep their words space-separated.
    """

    surface: str
    stem: str
    position: int
    kinds: frozenset[Category]


def _clean(raw: str) -> str:
    word = raw.lower().strip(_STRIP_CHARS)
    for ch in _APOSTROPHES:
        word = word.replace(ch, "")
    return word


def _split(text: str) -> list[str]:
    for ch in _HYPHENS:
        text = text.replace(ch, " ")
    return [cleaned for cleaned in (_clean(part) for part in text.split()) if cleaned]


def tokenize(lex: Lexicon, text: str) -> list[Token]:
    """Tokenize query text against a lexicon.

    Empty or all-punctuation input yields an empty list; whether that is
    an error is the caller's concern.
    """
    words = _split(text)
    tokens: list[Token] = []
    position = 0
    i = 0
    while i < len(words):
        merged = None
        for length in range(min(lex.max_phrase_len, len(words) - i), 1, -1):
            candidate = tuple(words[i : i + length])
            if candidate in lex.phrases:
                merged = candidate
                break
        if merged is not None:
            surface = " ".join(merged)
            word_stem = lex.phrases[merged]
            i += len(merged)
        else:
            surface = words[i]
            word_stem = stem(surface)
            i += 1
        kinds = lex.categories_of(word_stem)
        if kinds != {Category.STOP_WORD}:
            tokens.append(Token(surface=surface, stem=word_stem, position=position, kinds=kinds))
        position += 1
    return tokens
