"""Tokenization and whole-word keyword matching shared by the pipeline."""
from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def tokenize(text: str) -> list[str]:
    """Lowercase tokens split on any non-alphanumeric character."""
    return _TOKEN_RE.findall(text.lower())


def has_alpha_token(text: str) -> bool:
    return any(re.search(r"[a-z]", tok) for tok in tokenize(text))


def contains_term(tokens: list[str], term: str) -> bool:
    """Whole-word match; multi-word terms must appear as a contiguous run."""
    term_tokens = tokenize(term)
    if not term_tokens:
        return False
    if len(term_tokens) == 1:
        return term_tokens[0] in tokens
    n = len(term_tokens)
    return any(tokens[i:i + n] == term_tokens for i in range(len(tokens) - n + 1))


def contains_any(text: str, terms) -> bool:
    tokens = tokenize(text)
    return any(contains_term(tokens, term) for term in terms)


def canonical_text(text: str) -> str:
    """Whitespace/punctuation-normalized lowercase form used for hashing."""
    return " ".join(tokenize(text))
