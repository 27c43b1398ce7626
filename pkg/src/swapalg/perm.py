"""Permutations of {1..n}: composition, cycle structure, classification,
Robinson-Schensted insertion, goodness tests and counting sequences.

Conventions, fixed once and used by every other module:

- One-line storage: ``images[i-1]`` is the image of ``i``.  The degree is
  explicit, so the identity of degree 3 and of degree 4 are distinct values.
- Composition is right-to-left: ``(p * q)(i) == p(q(i))``.  This is the
  convention under which splicing two cycles sharing one point works out as
  ``(a,B)(a,A) == (a,A,B)``, which the rewriting rules rely on.
- Canonical cycle form: each cycle rotated so its minimum comes first,
  cycles sorted by minimum, fixed points kept as length-1 cycles.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence


class PermClass(Enum):
    """Support classification used by the rewriting engine."""

    INVOLUTION = "involution"
    SPECIAL_WITH_3CYCLE = "special-with-3-cycle"
    NON_SPECIAL = "non-special"


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} in one-line form.

    Ordering between permutations is lexicographic on the one-line form
    (the order the straightening recursion descends along).
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise ValueError("degree must be positive")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images!r}")

    # -- construction -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"bad transposition ({i},{j}) in degree {n}")
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation of degree ``n`` from disjoint cycles.

        Fixed points may be omitted.  Raises if the cycles overlap or
        mention points outside {1..n}.
        """
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= n:
                    raise ValueError(f"point {point} outside 1..{n}")
                if point in seen:
                    raise ValueError(f"cycles are not disjoint at point {point}")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:]):
                images[a - 1] = b
            if len(cycle) > 1:
                images[cycle[-1] - 1] = cycle[0]
        return cls(tuple(images))

    @staticmethod
    def parse(text: str, n: int | None = None) -> "Permutation":
        return parse_permutation(text, n)

    # -- basic structure ----------------------------------------------

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose right-to-left: apply ``other`` first, then ``self``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        images = self.images
        return Permutation(tuple(images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by * self * by⁻¹`` (relabels points through ``by``)."""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def embed(self, n: int) -> "Permutation":
        """The same permutation viewed in a larger degree, new points fixed."""
        if n < self.n:
            raise ValueError(f"cannot embed degree {self.n} into degree {n}")
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def relabel(self, mapping: dict[int, int], n: int) -> "Permutation":
        """Push the permutation through an injective point relabelling.

        ``mapping`` must cover every non-fixed point; unmapped points of the
        result are fixed.
        """
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("relabelling is not injective")
        images = list(range(1, n + 1))
        for i in range(1, self.n + 1):
            j = self.images[i - 1]
            if i == j and i not in mapping:
                continue
            src, dst = mapping[i], mapping[j]
            if not 1 <= src <= n or not 1 <= dst <= n:
                raise ValueError(f"relabelled point outside 1..{n}")
            images[src - 1] = dst
        result = Permutation(tuple(images))
        return result

    # -- cycle structure ----------------------------------------------

    @cached_property
    def _cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        cycles = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            point = self.images[start - 1]
            while point != start:
                cycle.append(point)
                seen[point - 1] = True
                point = self.images[point - 1]
            cycles.append(tuple(cycle))
        return tuple(cycles)

    def cycle_decomposition(self) -> "CycleDecomposition":
        return CycleDecomposition(self.n, self._cycles)

    def cycles(self, *, nontrivial: bool = False) -> tuple[tuple[int, ...], ...]:
        """Canonical cycles; with ``nontrivial=True`` fixed points are dropped."""
        if nontrivial:
            return tuple(c for c in self._cycles if len(c) > 1)
        return self._cycles

    @cached_property
    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self._cycles), reverse=True))

    @property
    def cycle_count(self) -> int:
        """Number of cycles, fixed points included."""
        return len(self._cycles)

    def sign(self) -> int:
        return -1 if (self.n - self.cycle_count) % 2 else 1

    # -- classification -----------------------------------------------

    def classify(self) -> PermClass:
        lengths = self.cycle_type
        if lengths[0] <= 2:
            return PermClass.INVOLUTION
        if lengths[0] == 3 and lengths.count(3) == 1 and (
            len(lengths) == 1 or lengths[1] <= 2
        ):
            return PermClass.SPECIAL_WITH_3CYCLE
        return PermClass.NON_SPECIAL

    def is_involution(self) -> bool:
        return self.classify() is PermClass.INVOLUTION

    def is_special(self) -> bool:
        return self.classify() is not PermClass.NON_SPECIAL

    # -- goodness / RSK -----------------------------------------------

    @cached_property
    def longest_decreasing_length(self) -> int:
        """Length of the longest (not necessarily consecutive) decreasing
        subsequence of the one-line form."""
        images = self.images
        best = [0] * self.n
        for i in range(self.n):
            longest = 0
            for j in range(i):
                if images[j] > images[i] and best[j] > longest:
                    longest = best[j]
            best[i] = longest + 1
        return max(best)

    def is_good(self, d: int) -> bool:
        """No decreasing subsequence of length d+1 in the one-line form."""
        if d < 1:
            raise ValueError("d must be positive")
        return self.longest_decreasing_length <= d

    def rsk(self) -> "TableauPair":
        """Row insertion: returns the (insertion, recording) tableau pair."""
        from bisect import bisect_left

        p_rows: list[list[int]] = []
        q_rows: list[list[int]] = []
        for position, value in enumerate(self.images, start=1):
            bumped = value
            r = 0
            while True:
                if r == len(p_rows):
                    p_rows.append([bumped])
                    q_rows.append([position])
                    break
                row = p_rows[r]
                k = bisect_left(row, bumped)
                if k == len(row):
                    row.append(bumped)
                    q_rows[r].append(position)
                    break
                row[k], bumped = bumped, row[k]
                r += 1
        return TableauPair(
            tuple(tuple(row) for row in p_rows),
            tuple(tuple(row) for row in q_rows),
        )

    # -- presentation --------------------------------------------------

    def one_line_str(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"

    def cycle_str(self, *, omit_fixed: bool = False) -> str:
        cycles = self.cycles(nontrivial=omit_fixed)
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.cycle_str()


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles covering {1..n}, in canonical form (each cycle
    minimum-first, cycles sorted by minimum, fixed points included)."""

    n: int
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        points = [p for cycle in self.cycles for p in cycle]
        if sorted(points) != list(range(1, self.n + 1)):
            raise ValueError("cycles must be disjoint and cover 1..n")
        canonical = _canonical_cycles(self.cycles)
        if canonical != self.cycles:
            object.__setattr__(self, "cycles", canonical)

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.n, self.cycles)

    def __str__(self) -> str:
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in self.cycles)


def _canonical_cycles(
    cycles: Iterable[Sequence[int]],
) -> tuple[tuple[int, ...], ...]:
    rotated = []
    for cycle in cycles:
        k = cycle.index(min(cycle))
        rotated.append(tuple(cycle[k:]) + tuple(cycle[:k]))
    return tuple(sorted(rotated, key=lambda c: c[0]))


@dataclass(frozen=True)
class TableauPair:
    """A pair of standard Young tableaux of the same shape (rows as tuples)."""

    p_tableau: tuple[tuple[int, ...], ...]
    q_tableau: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for tableau in (self.p_tableau, self.q_tableau):
            if not _is_standard(tableau):
                raise ValueError(f"not a standard tableau: {tableau!r}")
        if self.shape != tuple(len(r) for r in self.q_tableau):
            raise ValueError("tableaux have different shapes")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.p_tableau)

    @property
    def height(self) -> int:
        return len(self.p_tableau)

    @property
    def size(self) -> int:
        return sum(self.shape)


def _is_standard(rows: tuple[tuple[int, ...], ...]) -> bool:
    entries = sorted(v for row in rows for v in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if len(lower) > len(upper):
            return False
        if any(upper[i] >= lower[i] for i in range(len(lower))):
            return False
    return True


# -- module-level operation aliases -----------------------------------


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``q`` first, then ``p``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    return p.cycle_decomposition()


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    return p.conjugate(by)


def classify(p: Permutation) -> PermClass:
    return p.classify()


def rsk(p: Permutation) -> TableauPair:
    return p.rsk()


def is_good(p: Permutation, d: int) -> bool:
    return p.is_good(d)


# -- counting sequences ------------------------------------------------


def catalan(n: int) -> int:
    """The n-th Catalan number, binom(2n,n)/(n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _involution_count(n: int) -> int:
    if n <= 1:
        return 1
    return _involution_count(n - 1) + (n - 1) * _involution_count(n - 2)


def involution_count(n: int) -> int:
    """Number of involutions in the degree-n symmetric group,
    I(n) = I(n-1) + (n-1)·I(n-2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _involution_count(n)


_SYMMETRIC_DIM = (1, 2, 4, 10, 26, 76, 232, 750, 2494, 8524)


def symmetric_dim(n: int) -> int:
    """Dimension of the space of symmetric operators in the degree-n swap
    algebra.  Stored for n <= 10; beyond that it is a computed quantity
    (trace-form rank of the involution family, see ``oracle.gram_rank``),
    not a closed form."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > len(_SYMMETRIC_DIM):
        raise ValueError(
            f"symmetric_dim is stored only for n <= {len(_SYMMETRIC_DIM)}; "
            "compute it as oracle.gram_rank(involutions(n))"
        )
    return _SYMMETRIC_DIM[n - 1]


# -- families ----------------------------------------------------------


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All permutations of degree n in lexicographic one-line order."""
    if n < 1:
        raise ValueError("n must be positive")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def involutions(n: int) -> list[Permutation]:
    """All involutions of degree n (including the identity)."""
    if n < 1:
        raise ValueError("n must be positive")

    results: list[Permutation] = []

    def rec(points: tuple[int, ...], pairs: list[tuple[int, int]]) -> None:
        if not points:
            images = list(range(1, n + 1))
            for a, b in pairs:
                images[a - 1], images[b - 1] = b, a
            results.append(Permutation(tuple(images)))
            return
        first, rest = points[0], points[1:]
        rec(rest, pairs)  # first stays fixed
        for k in range(len(rest)):
            pairs.append((first, rest[k]))
            rec(rest[:k] + rest[k + 1 :], pairs)
            pairs.pop()

    rec(tuple(range(1, n + 1)), [])
    results.sort()
    return results


def special_permutations(n: int) -> list[Permutation]:
    """Involutions plus permutations with exactly one 3-cycle and all other
    cycles of length <= 2."""
    if n < 1:
        raise ValueError("n must be positive")
    results = list(involutions(n))
    if n >= 3:
        for support in itertools.combinations(range(1, n + 1), 3):
            a, b, c = support
            rest = tuple(p for p in range(1, n + 1) if p not in support)
            rest_involutions = involutions(len(rest)) if rest else [None]
            for cycle in ((a, b, c), (a, c, b)):
                base = Permutation.from_cycles(n, [cycle])
                for tail in rest_involutions:
                    if tail is None:
                        results.append(base)
                    else:
                        mapping = {i + 1: rest[i] for i in range(len(rest))}
                        results.append(base * tail.relabel(mapping, n))
    results.sort()
    return results


def good_permutations(n: int, d: int = 2) -> list[Permutation]:
    """Permutations of degree n with no decreasing subsequence of length d+1."""
    return [p for p in symmetric_group(n) if p.is_good(d)]


def transpositions(n: int) -> list[Permutation]:
    return [
        Permutation.transposition(n, i, j)
        for i in range(1, n)
        for j in range(i + 1, n + 1)
    ]


# -- parsing -----------------------------------------------------------

_DEGREE_RE = re.compile(r"n\s*=\s*(\d+)")
_CYCLE_RE = re.compile(r"\(([\d\s,]*)\)")
_ONE_LINE_RE = re.compile(r"\[([\d\s,]*)\]")


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse cycle form ``(1,2,3)(4,5)`` or one-line form ``[3,1,2]``.

    Whitespace-insensitive.  The degree is taken from an explicit ``n=K``
    token, the ``n`` argument, or inferred as the largest point mentioned;
    trailing fixed points in cycle form therefore need an explicit degree.
    """
    work = text.strip()
    m = _DEGREE_RE.search(work)
    if m:
        explicit = int(m.group(1))
        if n is not None and n != explicit:
            raise ValueError(f"conflicting degrees {n} and {explicit}")
        n = explicit
        work = (work[: m.start()] + work[m.end() :]).strip()
    compact = re.sub(r"\s+", "", work)
    if compact in ("", "()", "id", "e"):
        if n is None:
            raise ValueError("identity needs an explicit degree")
        return Permutation.identity(n)
    if compact.startswith("["):
        m = _ONE_LINE_RE.fullmatch(compact)
        if not m:
            raise ValueError(f"bad one-line form: {text!r}")
        images = tuple(int(tok) for tok in m.group(1).split(",") if tok)
        if n is not None and n != len(images):
            raise ValueError(
                f"one-line form has degree {len(images)}, expected {n}"
            )
        return Permutation(images)
    if compact.startswith("("):
        pos = 0
        cycles: list[tuple[int, ...]] = []
        while pos < len(compact):
            m = _CYCLE_RE.match(compact, pos)
            if not m:
                raise ValueError(f"bad cycle form: {text!r}")
            body = m.group(1)
            if body:
                cycles.append(tuple(int(tok) for tok in body.split(",") if tok))
            pos = m.end()
        max_point = max((p for c in cycles for p in c), default=0)
        degree = n if n is not None else max_point
        if degree < max_point:
            raise ValueError(f"degree {degree} below largest point {max_point}")
        return Permutation.from_cycles(degree, cycles)
    raise ValueError(f"unrecognised permutation syntax: {text!r}")
