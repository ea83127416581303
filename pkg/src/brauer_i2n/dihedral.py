"""The dihedral Coxeter group W(I_2^n) of order 2n.

Elements are kept as alternating words: ``DihedralElement(n, "r0", 3)`` is
``r0 r1 r0``. The two words of length ``n`` are the same element and are
stored with start ``r0``.

>>> a = DihedralElement.from_word(5, "r0 r1 r0 r1 r0")
>>> b = DihedralElement.from_word(5, "r1 r0 r1 r0 r1")
>>> a == b
True
>>> str(a * DihedralElement.generator(5, 0))
'r0 r1 r0 r1'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import InvalidParameter, InvalidSubgroup

__all__ = [
    "DihedralElement",
    "CosetSystem",
    "alternating_word",
    "dihedral_multiply",
    "enumerate_group",
    "generated_subgroup",
    "standard_subgroups",
    "coset_representatives",
]

GENERATORS = ("r0", "r1")


def alternating_word(start: str, length: int) -> tuple[str, ...]:
    """``[r_start r_other ...]`` of the given length as a tuple of letters."""
    if start not in GENERATORS:
        raise InvalidParameter(f"unknown generator {start!r}")
    if length < 0:
        raise InvalidParameter(f"word length must be >= 0, got {length}")
    other = "r1" if start == "r0" else "r0"
    return tuple(start if k % 2 == 0 else other for k in range(length))


def _check_n(n) -> None:
    if not isinstance(n, int) or n < 5:
        raise InvalidParameter(f"n must be an integer >= 5, got {n!r}")


@dataclass(frozen=True)
class DihedralElement:
    n: int
    start: Optional[str] = None
    length: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidParameter(f"invalid dihedral order parameter {self.n!r}")
        if not 0 <= self.length <= self.n:
            raise InvalidParameter(f"alternating word length {self.length} outside 0..{self.n}")
        if (self.length == 0) != (self.start is None):
            raise InvalidParameter("identity must have length 0 and no start letter")
        if self.start is not None and self.start not in GENERATORS:
            raise InvalidParameter(f"unknown generator {self.start!r}")
        if self.length == self.n and self.start == "r1":
            object.__setattr__(self, "start", "r0")

    @classmethod
    def identity(cls, n: int) -> "DihedralElement":
        return cls(n)

    @classmethod
    def generator(cls, n: int, i: int) -> "DihedralElement":
        return cls(n, GENERATORS[i], 1)

    @classmethod
    def alternating(cls, n: int, start: str, length: int) -> "DihedralElement":
        """``[r_start ...]_length`` for any length, reduced modulo the group."""
        return cls.from_letters(n, alternating_word(start, length))

    @classmethod
    def from_letters(cls, n: int, letters: Sequence[str]) -> "DihedralElement":
        out = cls(n)
        for letter in letters:
            if letter not in GENERATORS:
                raise InvalidParameter(f"unknown generator {letter!r}")
            out = out * cls(n, letter, 1)
        return out

    @classmethod
    def from_word(cls, n: int, text: str) -> "DihedralElement":
        text = text.strip()
        if text in ("", "1"):
            return cls(n)
        return cls.from_letters(n, text.split())

    @property
    def len(self) -> int:
        return self.length

    @property
    def letters(self) -> tuple[str, ...]:
        if self.start is None:
            return ()
        return alternating_word(self.start, self.length)

    def _rotation_form(self) -> tuple[int, int]:
        # (k, f) means rho**k * r0**f with rho = r0 r1 and r1 = rho**-1 r0
        k, f = 0, 0
        for letter in self.letters:
            gk = 0 if letter == "r0" else -1
            k, f = (k + (gk if f == 0 else -gk)) % self.n, f ^ 1
        return k, f

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        return dihedral_multiply(self, other)

    def inverse(self) -> "DihedralElement":
        return DihedralElement.from_letters(self.n, self.letters[::-1]) if self.length else self

    def __str__(self) -> str:
        return " ".join(self.letters) if self.length else "1"

    def __repr__(self) -> str:
        return f"DihedralElement(n={self.n}, {str(self)!r})"


@lru_cache(maxsize=None)
def _tables(n: int):
    elements = [DihedralElement(n)]
    for length in range(1, n):
        elements += [DihedralElement(n, "r0", length), DihedralElement(n, "r1", length)]
    elements.append(DihedralElement(n, "r0", n))
    by_form = {}
    for e in elements:
        by_form.setdefault(e._rotation_form(), e)
    if len(by_form) != 2 * n:
        raise AssertionError(f"normal forms of I_2^{n} are not distinct")
    return tuple(elements), by_form


def dihedral_multiply(a: DihedralElement, b: DihedralElement) -> DihedralElement:
    if a.n != b.n:
        raise InvalidParameter(f"cannot multiply elements of orders {2 * a.n} and {2 * b.n}")
    n = a.n
    ka, fa = a._rotation_form()
    kb, fb = b._rotation_form()
    form = ((ka + (kb if fa == 0 else -kb)) % n, fa ^ fb)
    return _tables(n)[1][form]


def enumerate_group(n: int) -> list[DihedralElement]:
    """The 2n canonical elements, ordered by length then start letter."""
    _check_n(n)
    return list(_tables(n)[0])


def generated_subgroup(n: int, gens: Sequence[DihedralElement]) -> list[DihedralElement]:
    found = [DihedralElement(n)]
    seen = set(found)
    frontier = list(found)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        found += nxt
        frontier = nxt
    return sorted(found, key=_length_key)


def _length_key(e: DihedralElement) -> tuple[int, int]:
    return (e.length, 0 if e.start in (None, "r0") else 1)


def standard_subgroups(n: int, i: int) -> tuple[list[DihedralElement], list[DihedralElement]]:
    """``(N_i, K_i)``: the stabilizer of the i-th simple root and its factor.

    For odd ``n`` the pair is ``(<r_i>, {1})``; for ``n = 2m`` it is
    ``N_0 = <r0, [r1 r0 ...]_{2m-1}>``, ``K_0 = <[r1 r0 ...]_{2m-1}>`` and
    ``N_1 = <r1, [r0 r1 ...]_{2m-1}>``, ``K_1 = {1}``.
    """
    _check_n(n)
    if i not in (0, 1):
        raise InvalidParameter(f"generator index must be 0 or 1, got {i!r}")
    r_i = DihedralElement.generator(n, i)
    one = [DihedralElement(n)]
    if n % 2:
        return generated_subgroup(n, [r_i]), one
    m = n // 2
    other = GENERATORS[1 - i]
    long_reflection = DihedralElement.alternating(n, other, 2 * m - 1)
    big = generated_subgroup(n, [r_i, long_reflection])
    small = generated_subgroup(n, [long_reflection]) if i == 0 else one
    return big, small


@dataclass(frozen=True)
class CosetSystem:
    n: int
    subgroup: tuple[DihedralElement, ...]
    representatives: tuple[DihedralElement, ...]

    def coset(self, rep: DihedralElement) -> list[DihedralElement]:
        return [rep * h for h in self.subgroup]

    def representative_of(self, g: DihedralElement) -> DihedralElement:
        for rep in self.representatives:
            if g in self.coset(rep):
                return rep
        raise AssertionError(f"{g!r} lies in no coset")

    def op_representatives(self) -> list[DihedralElement]:
        """Word reversals of the representatives (right coset system)."""
        return [rep.inverse() for rep in self.representatives]


def coset_representatives(n: int, subgroup: Sequence[DihedralElement]) -> CosetSystem:
    """Left coset representatives ``gH``, each of minimal length in its coset."""
    _check_n(n)
    sub = list(dict.fromkeys(subgroup))
    if any(h.n != n for h in sub):
        raise InvalidSubgroup("subgroup elements belong to a different group")
    members = set(sub)
    if DihedralElement(n) not in members:
        raise InvalidSubgroup("subgroup must contain the identity")
    for a in sub:
        if a.inverse() not in members:
            raise InvalidSubgroup(f"{a} has no inverse in the subset")
        for b in sub:
            if a * b not in members:
                raise InvalidSubgroup(f"not closed: {a} * {b} = {a * b}")
    reps = []
    covered = set()
    for g in enumerate_group(n):
        if g in covered:
            continue
        reps.append(g)
        covered.update(g * h for h in sub)
    return CosetSystem(n, tuple(sorted(sub, key=_length_key)), tuple(reps))
