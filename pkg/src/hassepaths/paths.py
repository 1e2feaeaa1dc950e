"""Steps, path words, the eight path classes and their factor statistics.

A path is stored as a letter string over ``U``, ``D`` and ``H`` together with
the width of its flat step: ``H`` is a unit flat ``(1,0)`` in the Motzkin and
Fibonacci families and a double flat ``(2,0)`` in the Schröder families.  No
class mixes the two flat kinds, so the pair is unambiguous.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Optional, Union

__all__ = [
    "Step",
    "PathWord",
    "ClassSpec",
    "CLASSES",
    "get_class",
    "parse_path",
    "iter_class",
    "enumerate_class",
    "validate",
    "occurrences",
    "occurrences_off_axis",
    "occurrences_on_axis",
    "is_level_balanced",
    "reflect",
    "heights",
]


class Step(enum.Enum):
    """A lattice step: ``(letter, width, height delta)``."""

    UP = ("U", 1, 1)
    DOWN = ("D", 1, -1)
    FLAT = ("H", 1, 0)
    FLAT2 = ("H", 2, 0)

    @property
    def letter(self) -> str:
        return self.value[0]

    @property
    def width(self) -> int:
        return self.value[1]

    @property
    def delta(self) -> int:
        return self.value[2]


_DELTA = {"U": 1, "D": -1, "H": 0}
_SWAP = str.maketrans("UD", "DU")


@dataclass(frozen=True, slots=True)
class PathWord:
    """An immutable path word.

    ``word`` holds the step letters, ``flat`` the width (1 or 2) that an ``H``
    stands for.  ``str(path)`` gives the serialized form (``"-"`` when empty).
    """

    word: str
    flat: int = 1

    def __post_init__(self):
        if self.flat not in (1, 2):
            raise ValueError(f"flat width must be 1 or 2, got {self.flat}")
        bad = set(self.word) - set("UDH")
        if bad:
            raise ValueError(f"illegal step letters {sorted(bad)} in {self.word!r}")

    def __str__(self) -> str:
        return self.word or "-"

    def __len__(self) -> int:
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def width(self) -> int:
        return len(self.word) + (self.flat - 1) * self.word.count("H")

    @property
    def steps(self) -> tuple[Step, ...]:
        flat = Step.FLAT if self.flat == 1 else Step.FLAT2
        table = {"U": Step.UP, "D": Step.DOWN, "H": flat}
        return tuple(table[c] for c in self.word)

    @property
    def levels(self) -> list[int]:
        """Height before each step, plus the final height (length + 1 values)."""
        return list(accumulate((_DELTA[c] for c in self.word), initial=0))

    @property
    def heights(self) -> list[int]:
        return heights(self)


@dataclass(frozen=True)
class ClassSpec:
    """Declarative description of a path family."""

    name: str
    steps: frozenset
    min_height: Optional[int]
    max_height: Optional[int]
    flats_on_axis_only: bool
    size_semantics: str  # "semilength" or "length"
    grand: bool
    label: str

    @property
    def flat(self) -> int:
        return 2 if Step.FLAT2 in self.steps else 1

    @property
    def has_flats(self) -> bool:
        return Step.FLAT in self.steps or Step.FLAT2 in self.steps

    @property
    def is_lattice(self) -> bool:
        """Whether pointwise meet/join is offered (not for the Fibonacci families)."""
        return self.name not in ("FF", "GF")

    def width_for(self, n: int) -> int:
        return 2 * n if self.size_semantics == "semilength" else n

    def size_of(self, path: PathWord) -> int:
        return path.width // 2 if self.size_semantics == "semilength" else path.width

    def __str__(self) -> str:
        return self.name


_UD = frozenset({Step.UP, Step.DOWN})

CLASSES: dict[str, ClassSpec] = {
    "DD": ClassSpec("DD", _UD, 0, None, False, "semilength", False, "Dyck"),
    "GD": ClassSpec("GD", _UD, None, None, False, "semilength", True, "Grand Dyck"),
    "MM": ClassSpec("MM", _UD | {Step.FLAT}, 0, None, False, "length", False, "Motzkin"),
    "GM": ClassSpec("GM", _UD | {Step.FLAT}, None, None, False, "length", True, "Grand Motzkin"),
    "SS": ClassSpec("SS", _UD | {Step.FLAT2}, 0, None, False, "semilength", False, "Schröder"),
    "GS": ClassSpec("GS", _UD | {Step.FLAT2}, None, None, False, "semilength", True, "Grand Schröder"),
    "FF": ClassSpec("FF", _UD | {Step.FLAT}, 0, 1, True, "length", False, "Fibonacci"),
    "GF": ClassSpec("GF", _UD | {Step.FLAT}, -1, 1, True, "length", True, "Grand Fibonacci"),
}

_ALIASES = {"D": "DD", "M": "MM", "S": "SS", "F": "FF"}


def get_class(name: Union[str, ClassSpec]) -> ClassSpec:
    """Look up a class by name; single-letter aliases ``D``, ``M``, ``S``, ``F`` work too."""
    if isinstance(name, ClassSpec):
        return name
    key = name.strip().upper()
    key = _ALIASES.get(key, key)
    try:
        return CLASSES[key]
    except KeyError:
        raise ValueError(f"unknown path class {name!r}; expected one of {sorted(CLASSES)}") from None


def parse_path(text: str, spec: Union[str, ClassSpec]) -> PathWord:
    """Parse the serialized form; the class decides what ``H`` means."""
    spec = get_class(spec)
    text = text.strip().upper()
    return PathWord("" if text == "-" else text, spec.flat)


def _in_window(spec: ClassSpec, h: int) -> bool:
    if spec.min_height is not None and h < spec.min_height:
        return False
    if spec.max_height is not None and h > spec.max_height:
        return False
    return True


def iter_class(spec: Union[str, ClassSpec], n: int) -> Iterator[PathWord]:
    """Yield the paths of the class at size ``n`` in canonical order.

    Canonical order is lexicographic with ``U < D < H``; a depth-first search
    that tries the steps in that order produces it directly.
    """
    spec = get_class(spec)
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    width = spec.width_for(n)
    flat = spec.flat
    moves = [("U", 1, 1), ("D", 1, -1)]
    if spec.has_flats:
        moves.append(("H", flat, 0))
    buf: list[str] = []

    def walk(x: int, h: int) -> Iterator[str]:
        if x == width:
            if h == 0:
                yield "".join(buf)
            return
        for letter, w, dh in moves:
            nh = h + dh
            rest = width - x - w
            if rest < 0 or abs(nh) > rest or not _in_window(spec, nh):
                continue
            if dh == 0 and spec.flats_on_axis_only and h != 0:
                continue
            buf.append(letter)
            yield from walk(x + w, nh)
            buf.pop()

    for word in walk(0, 0):
        yield PathWord(word, flat)


def enumerate_class(spec: Union[str, ClassSpec], n: int) -> list[PathWord]:
    """All paths of the class at size ``n``, each once, in canonical order."""
    return list(iter_class(spec, n))


def validate(spec: Union[str, ClassSpec], path: PathWord) -> tuple[bool, str]:
    """Check class membership; returns ``(ok, diagnostic)``.

    The diagnostic names the first violation, or is ``"ok"``.
    """
    spec = get_class(spec)
    if path.word and "H" in path.word:
        if not spec.has_flats:
            return False, f"flat steps are not allowed in {spec.name}"
        if path.flat != spec.flat:
            kind = "FlatUnit" if path.flat == 1 else "FlatDouble"
            return False, f"{kind} steps are not allowed in {spec.name}"
    x, h = 0, 0
    for pos, c in enumerate(path.word):
        if c == "H" and spec.flats_on_axis_only and h != 0:
            return False, f"flat step at position {pos} lies at height {h}, off the x-axis"
        x += path.flat if c == "H" else 1
        h += _DELTA[c]
        if not _in_window(spec, h):
            return False, f"height {h} at abscissa {x} is outside the allowed window"
    if h != 0:
        return False, f"path ends at height {h}, not on the x-axis"
    if spec.size_semantics == "semilength" and x % 2:
        return False, f"odd width {x} for a class sized by semi-length"
    return True, "ok"


def _positions(word: str, factor: str) -> Iterator[int]:
    i = word.find(factor)
    while i >= 0:
        yield i
        i = word.find(factor, i + 1)


def _factor_word(factor) -> str:
    if isinstance(factor, PathWord):
        return factor.word
    if isinstance(factor, str):
        return factor.upper()
    return "".join(s.letter for s in factor)


def is_level_balanced(factor) -> bool:
    word = _factor_word(factor)
    return sum(_DELTA[c] for c in word) == 0


def occurrences(path: PathWord, factor) -> int:
    """Number of (possibly overlapping) occurrences of ``factor`` in ``path``."""
    f = _factor_word(factor)
    if not f:
        raise ValueError("factor must be non-empty")
    return sum(1 for _ in _positions(path.word, f))


def _level_split(path: PathWord, factor, levels=None) -> tuple[int, int]:
    f = _factor_word(factor)
    if not f:
        raise ValueError("factor must be non-empty")
    if not is_level_balanced(f):
        raise ValueError(f"factor {f!r} does not start and end at the same level")
    if levels is None:
        levels = path.levels
    on = off = 0
    for i in _positions(path.word, f):
        if levels[i]:
            off += 1
        else:
            on += 1
    return on, off


def occurrences_off_axis(path: PathWord, factor, levels=None) -> int:
    """Occurrences of a level-balanced factor that do not start on the x-axis."""
    return _level_split(path, factor, levels)[1]


def occurrences_on_axis(path: PathWord, factor, levels=None) -> int:
    """Occurrences of a level-balanced factor starting (and ending) at height 0."""
    return _level_split(path, factor, levels)[0]


def reflect(path: PathWord) -> PathWord:
    """Mirror a path about the x-axis."""
    return PathWord(path.word.translate(_SWAP), path.flat)


def heights(path: PathWord) -> list[int]:
    """Ordinates at every integer abscissa ``0..width``.

    A double flat contributes two samples at the same height.
    """
    out = [0]
    h = 0
    for c in path.word:
        if c == "H":
            out.extend([h] * path.flat)
        else:
            h += _DELTA[c]
            out.append(h)
    return out
