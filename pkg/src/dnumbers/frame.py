"""Frames of discernment and the bitmask subset encoding.

A subset of a frame with labels ``q1 .. qN`` is a plain ``int`` in
``[0, 2**N)`` where bit ``i - 1`` is set iff ``qi`` is a member.  Index 0 is
the empty set and ``2**N - 1`` is the whole frame.  Ascending integer order is
the canonical order for every vector and matrix in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DuplicateLabel, EmptyFrame, FrameTooLarge, InvalidSubset, UnknownLabel

MAX_FRAME_SIZE = 24

EMPTY_SYMBOL = "∅"


@dataclass(frozen=True)
class Frame:
    labels: tuple[str, ...]
    _positions: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)
    full: int = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        if not labels:
            raise EmptyFrame("frame must contain at least one label")
        for label in labels:
            if not isinstance(label, str) or not label.strip():
                raise EmptyFrame("frame labels must be non-empty strings")
        seen: dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in seen:
                raise DuplicateLabel(f"frame labels must be distinct: {label!r} repeated")
            seen[label] = i
        if len(labels) > MAX_FRAME_SIZE:
            raise FrameTooLarge(
                f"frame size must be <= {MAX_FRAME_SIZE}, got {len(labels)}"
            )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_positions", seen)
        # index of the whole frame
        object.__setattr__(self, "full", (1 << len(labels)) - 1)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def n_subsets(self) -> int:
        return 1 << len(self.labels)

    def position(self, label: str) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise UnknownLabel(f"{label!r} is not a label of frame {list(self.labels)}") from None

    def check(self, subset: int) -> int:
        """Return ``subset`` unchanged if it is a valid index for this frame."""
        if type(subset) is not int or not 0 <= subset <= self.full:
            raise InvalidSubset(
                f"subset index must be an integer in [0, 2^{self.size}), got {subset!r}"
            )
        return subset

    def members(self, subset: int) -> list[str]:
        self.check(subset)
        return [label for i, label in enumerate(self.labels) if subset >> i & 1]

    def format_subset(self, subset: int) -> str:
        """Render as a ``|``-joined label expression; the empty set is ``∅``."""
        names = self.members(subset)
        return "|".join(names) if names else EMPTY_SYMBOL


def make_frame(labels: Iterable[str]) -> Frame:
    return Frame(tuple(labels))


def encode_subset(frame: Frame, members: Sequence[str]) -> int:
    bits = 0
    for label in members:
        bits |= 1 << frame.position(label)
    return bits


def complement(frame: Frame, subset: int) -> int:
    return frame.full ^ frame.check(subset)


def enumerate_subsets(frame: Frame) -> range:
    return range(frame.n_subsets)


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0


@lru_cache(maxsize=1 << 16)
def element_bits(subset: int) -> tuple[int, ...]:
    """Positions of the set bits of ``subset``, ascending."""
    return tuple(i for i in range(subset.bit_length()) if subset >> i & 1)
