"""
Permutations in one-line notation and the parabolic combinatorics of S_n(a).

Permutations are 1-indexed: ``w(i)`` is ``w[i - 1]``.  Products are read as
functions, ``(u * v)(i) = u(v(i))``, so right multiplication by the simple
transposition ``s_i`` swaps the entries in positions ``i`` and ``i + 1``.

>>> u = Permutation.parse("3715246")
>>> u.length(), sorted(u.descents())
(9, [2, 4])
>>> a = DimSeq(7, (2, 4))
>>> dual(Permutation.identity(7), a)
Permutation('6745123')
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import IndexingError, ParameterError, QFlagError, SizeError

__all__ = [
    "Permutation", "DimSeq",
    "compose", "length", "descents", "in_Sn_a", "longest_parabolic", "dual",
    "cycle_perm", "special_perm", "alpha_perm", "beta_perm", "as_cycle",
    "parabolic_elements", "all_dimseqs",
]


class Permutation(tuple):
    """A bijection of {1..n} stored as its one-line notation."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> "Permutation":
        t = tuple(int(x) for x in entries)
        if not t:
            raise QFlagError("a permutation needs n >= 1 entries")
        if sorted(t) != list(range(1, len(t) + 1)):
            raise QFlagError(f"{t} is not a permutation of 1..{len(t)}")
        return tuple.__new__(cls, t)

    @classmethod
    def _trusted(cls, t: Iterable[int]) -> "Permutation":
        # skips validation; callers guarantee a bijection
        return tuple.__new__(cls, t)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls._trusted(range(n, 0, -1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The simple transposition s_i = (i, i+1)."""
        if not 1 <= i < n:
            raise ParameterError(f"s_{i} does not exist in S_{n}")
        return cls.transposition(i, i + 1, n)

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        t = list(range(1, n + 1))
        t[i - 1], t[j - 1] = t[j - 1], t[i - 1]
        return cls._trusted(t)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse ``"3715246"`` (only when n <= 9) or ``"3,7,1,5,2,4,6"``."""
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        if "," in text:
            entries = [int(tok) for tok in text.split(",")]
        else:
            if not text.isdigit():
                raise QFlagError(f"cannot parse permutation {text!r}")
            if len(text) > 9:
                raise QFlagError("compact digit form is only allowed for n <= 9; use commas")
            entries = [int(c) for c in text]
        w = cls(entries)
        if n is not None and len(w) != n:
            raise SizeError(f"permutation {text!r} has size {len(w)}, expected {n}")
        return w

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation._trusted(inv)

    def length(self) -> int:
        return length(self)

    def descents(self) -> frozenset[int]:
        return descents(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, 1))

    def swap(self, i: int, j: int) -> "Permutation":
        """Right multiplication by the transposition t_ij (swap positions)."""
        t = list(self)
        t[i - 1], t[j - 1] = t[j - 1], t[i - 1]
        return Permutation._trusted(t)

    def to_str(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    __str__ = to_str

    def __repr__(self) -> str:
        return f"Permutation({self.to_str()!r})"


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Return ``u * v``, the permutation ``i -> u(v(i))``."""
    if len(u) != len(v):
        raise SizeError(f"cannot compose permutations of sizes {len(u)} and {len(v)}")
    return Permutation._trusted(u[x - 1] for x in v)


def length(w: Iterable[int]) -> int:
    """Number of inversions."""
    w = tuple(w)
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents(w: Iterable[int]) -> frozenset[int]:
    w = tuple(w)
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


@dataclass(frozen=True)
class DimSeq:
    """
    Dimension vector ``0 < a_1 < ... < a_k < n`` of a partial flag variety.

    With ``strict=False`` the sequence only has to be weakly increasing with
    ``0 <= b_1`` and ``b_k <= n``; such sequences index the auxiliary flag
    varieties reached by subtracting a Pieri sequence.
    """

    n: int
    a: tuple[int, ...]
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.n < 1:
            raise ParameterError("n must be positive")
        seq = (0,) + self.a + (self.n,)
        if self.strict:
            ok = all(x < y for x, y in zip(seq, seq[1:])) if self.a else True
        else:
            ok = all(x <= y for x, y in zip(seq, seq[1:]))
        if not ok:
            kind = "strictly" if self.strict else "weakly"
            raise ParameterError(f"dimensions {self.a} are not {kind} increasing inside (0, {self.n})")

    @classmethod
    def full(cls, n: int) -> "DimSeq":
        return cls(n, tuple(range(1, n)))

    @property
    def k(self) -> int:
        return len(self.a)

    @cached_property
    def bounds(self) -> tuple[int, ...]:
        """``(a_0, a_1, ..., a_k, a_{k+1}) = (0, a_1, ..., a_k, n)``."""
        return (0,) + self.a + (self.n,)

    def __getitem__(self, i: int) -> int:
        """``a_i`` with the sentinels ``a_0 = 0`` and ``a_{k+1} = n``."""
        return self.bounds[i]

    @cached_property
    def dim(self) -> int:
        b = self.bounds
        return sum(b[i] * (b[i + 1] - b[i]) for i in range(1, self.k + 1))

    @cached_property
    def longest(self) -> Permutation:
        return longest_parabolic(self)

    def block_of(self, r: int) -> int:
        """The index p with ``a_p <= r < a_{p+1}`` (largest such p)."""
        b = self.bounds
        p = 0
        for i in range(1, self.k + 1):
            if b[i] <= r:
                p = i
        return p

    def contains(self, w: Permutation) -> bool:
        return in_Sn_a(w, self)

    def check(self, w: Permutation) -> Permutation:
        """Raise unless ``w`` indexes a Schubert class on this flag variety."""
        if len(w) != self.n:
            raise SizeError(f"{w} has size {len(w)}, flag variety needs n={self.n}")
        if not in_Sn_a(w, self):
            raise IndexingError(f"{w} has descents {sorted(w.descents())} outside {set(self.a)}")
        return w

    def elements(self) -> Iterator[Permutation]:
        return parabolic_elements(self)

    def __str__(self) -> str:
        return f"Fl({','.join(map(str, self.a))};C^{self.n})"


def in_Sn_a(w: Permutation, a: DimSeq) -> bool:
    if len(w) != a.n:
        raise SizeError(f"{w} has size {len(w)}, expected {a.n}")
    allowed = set(a.a)
    return all(i in allowed for i in range(1, len(w)) if w[i - 1] > w[i])


def longest_parabolic(a: DimSeq) -> Permutation:
    """w_a, which reverses every block ``(a_i, a_{i+1}]`` of positions."""
    b = a.bounds
    entries = []
    for i in range(len(b) - 1):
        entries.extend(range(b[i + 1], b[i], -1))
    return Permutation._trusted(entries)


def dual(w: Permutation, a: DimSeq) -> Permutation:
    """Index of the Poincare dual class, ``w_0 * w * w_a``."""
    a.check(w)
    return compose(compose(Permutation.longest(a.n), w), a.longest)


def cycle_perm(r: int, m: int, n: int) -> Permutation:
    """``s_r s_{r+1} ... s_m`` in S_n; the identity when ``m == r - 1``."""
    if not (1 <= r and r - 1 <= m <= n - 1):
        raise ParameterError(f"s_{r}...s_{m} is not defined in S_{n}")
    t = list(range(1, n + 1))
    t[r - 1:m] = range(r + 1, m + 2)
    if m >= r:
        t[m] = r
    return Permutation._trusted(t)


def special_perm(r: int, j: int, a: DimSeq) -> Permutation:
    """The special class ``s_r s_{r+1} ... s_{a_j}``, of length ``a_j - r + 1``."""
    if not 1 <= j <= a.k:
        raise ParameterError(f"block index {j} not in 1..{a.k}")
    if not 1 <= r <= a[j]:
        raise ParameterError(f"r={r} not in 1..{a[j]}")
    return cycle_perm(r, a[j], a.n)


def alpha_perm(i: int, j: int, a: DimSeq) -> Permutation:
    """``alpha_{i,j} = s_{a_j-i+1} ... s_{a_j}``; its Schubert polynomial is e_i(x_1..x_{a_j})."""
    if not 0 <= i <= a[j]:
        raise ParameterError(f"alpha_{{{i},{j}}} needs 0 <= i <= a_j = {a[j]}")
    if i == 0:
        return Permutation.identity(a.n)
    return cycle_perm(a[j] - i + 1, a[j], a.n)


def beta_perm(i: int, j: int, a: DimSeq) -> Permutation:
    """``beta_{i,j} = s_{a_j+i-1} ... s_{a_j}``; its Schubert polynomial is h_i(x_1..x_{a_j})."""
    m = a[j]
    if i < 0 or m + i > a.n or (i > 0 and m == 0):
        raise ParameterError(f"beta_{{{i},{j}}} is not defined for n={a.n}")
    t = list(range(1, a.n + 1))
    if i > 0:
        t[m - 1] = m + i
        t[m:m + i] = range(m, m + i)
    return Permutation._trusted(t)


def as_cycle(w: Permutation) -> tuple[int, int] | None:
    """Return ``(r, m)`` if ``w == s_r ... s_m`` (``m >= r``), else None."""
    moved = [i for i, v in enumerate(w, 1) if v != i]
    if not moved:
        return None
    r, last = moved[0], moved[-1]
    if cycle_perm(r, last - 1, len(w)) == w:
        return r, last - 1
    return None


def parabolic_elements(a: DimSeq) -> Iterator[Permutation]:
    """All of S_n(a), in lexicographic order of one-line notation."""
    n = a.n
    sizes = [a.bounds[i + 1] - a.bounds[i] for i in range(len(a.bounds) - 1)]

    def rec(remaining: tuple[int, ...], idx: int) -> Iterator[tuple[int, ...]]:
        if idx == len(sizes):
            yield ()
            return
        for chosen in itertools.combinations(remaining, sizes[idx]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(rest, idx + 1):
                yield chosen + tail

    out = sorted(rec(tuple(range(1, n + 1)), 0))
    for t in out:
        yield Permutation._trusted(t)


def all_dimseqs(n: int) -> Iterator[DimSeq]:
    """Every dimension vector ``0 < a_1 < ... < a_k < n`` with ``k >= 1``."""
    for k in range(1, n):
        for a in itertools.combinations(range(1, n), k):
            yield DimSeq(n, a)
