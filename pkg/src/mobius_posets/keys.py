"""Canonical element keys and their textual form.

A key is a ``(family, payload)`` pair. Payload types are fixed per family, so
keys of one family compare among themselves and keys of different families
are ordered by family tag first. The order is only for deterministic output
and has nothing to do with the poset order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, NamedTuple


class ElementKey(NamedTuple):
    family: str
    payload: Any


class FamilyMismatchError(ValueError):
    """A key was handed to a poset of a different family."""


class KeyParseError(ValueError):
    pass


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside of any (), [] or {} nesting."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
            if depth < 0:
                raise KeyParseError(f"unbalanced brackets in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise KeyParseError(f"unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def strip_prefix(text: str, *prefixes: str) -> str:
    for prefix in prefixes:
        if text.startswith(prefix + ":"):
            return text[len(prefix) + 1 :]
    return text


def parse_int(text: str, what: str = "integer") -> int:
    try:
        return int(text)
    except ValueError:
        raise KeyParseError(f"expected {what}, got {text!r}") from None


def parse_pair(text: str) -> tuple[str, str]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise KeyParseError(f"expected '(a,b)', got {text!r}")
    parts = split_top_level(text[1:-1])
    if len(parts) != 2:
        raise KeyParseError(f"expected exactly two components in {text!r}")
    return parts[0], parts[1]


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def format_rational(x: Fraction | int) -> str:
    """``"p/q"`` with q > 0 and gcd 1, also for integers (``"-8/1"``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
