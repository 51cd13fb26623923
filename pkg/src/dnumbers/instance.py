"""JSON instance files.

Example::

    {
      "frame": ["a", "b", "c"],
      "masses": {"a": 0.5, "b|c": 0.3},
      "nonexclusivity": {
        "strategy": "element_derived",
        "element_pairs": [["a", "b", 0.3]]
      }
    }

Subset expressions join labels with ``|``; whitespace around labels is
ignored and ``∅`` names the empty set.  ``subset_pairs`` (for the
``explicit_table`` strategy) holds ``[expr, expr, p]`` triples.  An optional
``"classical": true`` requires the masses to form a BPA over an exclusive
frame.  A missing ``nonexclusivity`` block means ``exclusive``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .classic import MassFunction, make_bpa
from .dnumber import DNumber, from_bpa, make_dnumber
from .errors import ConflictingSymmetricEntries, ParseError, ValidationError
from .frame import EMPTY_SYMBOL, Frame, encode_subset, make_frame
from .nonexclusivity import (
    NonExclusivity,
    Strategy,
    make_element_derived,
    make_exclusive,
    make_explicit_table,
)


@dataclass(frozen=True)
class Instance:
    frame: Frame
    dnumber: DNumber
    nonexclusivity: NonExclusivity
    bpa: MassFunction | None = None

    @property
    def classical(self) -> bool:
        return self.bpa is not None


def parse_subset(frame: Frame, expr: str) -> int:
    if not isinstance(expr, str):
        raise ParseError(f"subset expression must be a string, got {expr!r}")
    text = expr.strip()
    if not text:
        raise ParseError("subset expression must not be empty; use '∅' for the empty set")
    if text == EMPTY_SYMBOL:
        return 0
    tokens = [tok.strip() for tok in text.split("|")]
    if any(not tok for tok in tokens):
        raise ParseError(f"subset expression {expr!r} has an empty label between '|' separators")
    return encode_subset(frame, tokens)


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def _number(value: Any, where: str) -> float:
    _expect(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        f"{where} must be a number, got {value!r}",
    )
    return float(value)


def parse_instance(data: Any) -> Instance:
    _expect(isinstance(data, dict), "instance must be a JSON object")
    unknown = set(data) - {"frame", "masses", "nonexclusivity", "classical"}
    _expect(not unknown, f"unknown top-level keys: {sorted(unknown)}")

    labels = data.get("frame")
    _expect(isinstance(labels, list), "'frame' must be a list of labels")
    _expect(all(isinstance(x, str) for x in labels), "frame labels must be strings")
    for label in labels:
        if "|" in label or label.strip() != label or label == EMPTY_SYMBOL:
            raise ValidationError(
                f"frame labels must not contain '|', surrounding whitespace or be '∅': {label!r}"
            )
    frame = make_frame(labels)

    masses = data.get("masses")
    _expect(isinstance(masses, dict), "'masses' must be an object mapping subset expressions to numbers")
    assignments: dict[int, float] = {}
    for expr, value in masses.items():
        subset = parse_subset(frame, expr)
        if subset in assignments:
            raise ValidationError(f"subset {frame.format_subset(subset)} is assigned mass twice")
        assignments[subset] = _number(value, f"mass of {expr!r}")

    classical = data.get("classical", False)
    _expect(isinstance(classical, bool), "'classical' must be true or false")

    spec = data.get("nonexclusivity", {"strategy": "exclusive"})
    ne = _parse_nonexclusivity(frame, spec)

    if classical:
        if ne.strategy is not Strategy.EXCLUSIVE:
            raise ValidationError("classical instances require the 'exclusive' strategy")
        bpa = make_bpa(frame, assignments)
        return Instance(frame, from_bpa(bpa), ne, bpa)
    return Instance(frame, make_dnumber(frame, assignments), ne)


def _parse_nonexclusivity(frame: Frame, spec: Any) -> NonExclusivity:
    _expect(isinstance(spec, dict), "'nonexclusivity' must be an object")
    name = spec.get("strategy")
    try:
        strategy = Strategy(name)
    except ValueError:
        raise ParseError(
            f"unknown strategy {name!r}; expected one of {[s.value for s in Strategy]}"
        ) from None
    allowed = {
        Strategy.EXCLUSIVE: set(),
        Strategy.ELEMENT_DERIVED: {"element_pairs"},
        Strategy.EXPLICIT_TABLE: {"subset_pairs"},
    }[strategy]
    extra = set(spec) - {"strategy"} - allowed
    _expect(not extra, f"strategy {name!r} does not take keys {sorted(extra)}")

    if strategy is Strategy.EXCLUSIVE:
        return make_exclusive(frame)

    key = next(iter(allowed))
    triples = spec.get(key, [])
    _expect(isinstance(triples, list), f"'{key}' must be a list of [x, y, p] triples")
    entries: dict = {}
    for t in triples:
        _expect(
            isinstance(t, list) and len(t) == 3 and isinstance(t[0], str) and isinstance(t[1], str),
            f"each entry of '{key}' must be [x, y, p], got {t!r}",
        )
        p = _number(t[2], f"degree in {t!r}")
        if strategy is Strategy.ELEMENT_DERIVED:
            pair = (t[0].strip(), t[1].strip())
        else:
            pair = (parse_subset(frame, t[0]), parse_subset(frame, t[1]))
        rev = pair[::-1]
        for k in (pair, rev):
            if k in entries and entries[k] != p:
                raise ConflictingSymmetricEntries(
                    f"degree must be symmetric: {t[0]!r}/{t[1]!r} given as {entries[k]!r} and {p!r}"
                )
        entries[pair] = p
    if strategy is Strategy.ELEMENT_DERIVED:
        return make_element_derived(frame, entries)
    return make_explicit_table(frame, entries)


def loads(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return parse_instance(data)


def load(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
