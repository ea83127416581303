"""Positive roots of type A_t, admissible sets and the Brauer monoid action.

The positive root ``eps_i - eps_j`` (``i < j``) is a :class:`Root` and
corresponds to a horizontal strand joining dots ``i`` and ``j`` of a diagram
top. An admissible set is a set of mutually orthogonal positive roots, which
in type A means no index is shared: a partial matching of ``1..t+1``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .diagram import (
    BrauerDiagram,
    generator_e,
    multiply,
    permutation_diagram,
)
from .errors import InvalidParameter, NotSymmetricError, ParseError

__all__ = [
    "Root",
    "AdmissibleSet",
    "simple_root",
    "height",
    "act_r",
    "act_e",
    "act_diagram",
    "top_of",
    "complete",
    "e_beta",
    "e_beta_from_witness",
    "e_hat",
    "symmetry_profile",
    "admissible_sets",
    "positive_roots",
]


@dataclass(frozen=True, order=True)
class Root:
    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)) or not 1 <= self.i < self.j:
            raise InvalidParameter(f"positive root needs 1 <= i < j, got ({self.i}, {self.j})")

    @classmethod
    def of(cls, a: int, b: int) -> "Root":
        """The positive root among ``+-(eps_a - eps_b)``."""
        return cls(a, b) if a < b else cls(b, a)

    @property
    def support(self) -> tuple[int, int]:
        return (self.i, self.j)

    def is_orthogonal(self, other: "Root") -> bool:
        return not set(self.support) & set(other.support)

    def permute(self, perm) -> "Root":
        """Apply ``eps_k -> eps_perm(k)`` and negate back to positive."""
        return Root.of(perm(self.i), perm(self.j))

    def __str__(self) -> str:
        if self.j == self.i + 1:
            return f"alpha_{self.i}"
        return f"eps_{self.i}-eps_{self.j}"


def simple_root(i: int) -> Root:
    return Root(i, i + 1)


def height(r: Root) -> int:
    return r.j - r.i


def positive_roots(t: int) -> list[Root]:
    return [Root(i, j) for i in range(1, t + 2) for j in range(i + 1, t + 2)]


@dataclass(frozen=True)
class AdmissibleSet:
    t: int
    roots: frozenset

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 1:
            raise InvalidParameter(f"t must be a positive integer, got {self.t!r}")
        object.__setattr__(self, "roots", frozenset(self.roots))
        used = set()
        for r in self.roots:
            if r.j > self.t + 1:
                raise InvalidParameter(f"root {r} is not a root of A_{self.t}")
            if used & set(r.support):
                raise InvalidParameter(f"roots are not mutually orthogonal at {r}")
            used.update(r.support)

    @classmethod
    def of(cls, t: int, roots: Iterable) -> "AdmissibleSet":
        """Build from ``Root`` objects or ``(i, j)`` tuples."""
        return cls(t, frozenset(r if isinstance(r, Root) else Root(*r) for r in roots))

    def __iter__(self) -> Iterator[Root]:
        return iter(sorted(self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, r) -> bool:
        return r in self.roots

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots)

    def covered(self) -> set[int]:
        return {k for r in self.roots for k in r.support}

    def to_dict(self) -> dict:
        return {"t": self.t, "roots": [[r.i, r.j] for r in self.sorted_roots()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj) -> "AdmissibleSet":
        try:
            return cls.of(obj["t"], [tuple(r) for r in obj["roots"]])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed admissible set: {exc}") from exc

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.sorted_roots())) + "}"


def admissible_sets(t: int) -> list[AdmissibleSet]:
    """Every admissible set of A_t (all partial matchings of ``1..t+1``)."""
    out = []

    def extend(free: tuple[int, ...], chosen: list[Root]):
        if not free:
            out.append(AdmissibleSet(t, frozenset(chosen)))
            return
        a, rest = free[0], free[1:]
        extend(rest, chosen)
        for b in rest:
            extend(tuple(x for x in rest if x != b), chosen + [Root(a, b)])

    extend(tuple(range(1, t + 2)), [])
    return out


def _reflect(a: int, b: int):
    def swap(k: int) -> int:
        return b if k == a else a if k == b else k
    return swap


def _apply(B: AdmissibleSet, perm) -> AdmissibleSet:
    return AdmissibleSet(B.t, frozenset(r.permute(perm) for r in B.roots))


def act_r(i: int, B: AdmissibleSet) -> AdmissibleSet:
    if not 1 <= i <= B.t:
        raise InvalidParameter(f"node index {i} outside 1..{B.t}")
    return _apply(B, _reflect(i, i + 1))


def act_e(i: int, B: AdmissibleSet) -> AdmissibleSet:
    if not 1 <= i <= B.t:
        raise InvalidParameter(f"node index {i} outside 1..{B.t}")
    alpha = simple_root(i)
    if alpha in B.roots:
        return B
    touching = [r for r in B.roots if not r.is_orthogonal(alpha)]
    if not touching:
        return AdmissibleSet(B.t, B.roots | {alpha})
    # with two candidates prefer the root through index i; both give the same set
    beta = next((r for r in touching if i in r.support), touching[0])
    return _apply(act_r(i, B), _reflect(*beta.support))


def top_of(d: BrauerDiagram) -> AdmissibleSet:
    return AdmissibleSet(d.t, frozenset(Root(a, b) for a, b in d.top_pairs()))


def complete(B: AdmissibleSet) -> BrauerDiagram:
    """A diagram whose top is exactly ``B``.

    Free top dots go down to the leftmost bottom dots in order; the
    remaining bottom dots are paired off left to right.
    """
    n = B.t + 1
    pairs = [r.support for r in B.sorted_roots()]
    free_top = [k for k in range(1, n + 1) if k not in B.covered()]
    bottom = list(range(n + 1, 2 * n + 1))
    pairs += list(zip(free_top, bottom))
    rest = bottom[len(free_top):]
    pairs += list(zip(rest[::2], rest[1::2]))
    return BrauerDiagram.from_pairs(B.t, pairs)


def act_diagram(a: BrauerDiagram, B: AdmissibleSet) -> AdmissibleSet:
    """``aB``: the top of ``a * complete(B)``."""
    return top_of(multiply(a, complete(B)))


def _witness(t: int, r: Root) -> list[int]:
    n = t + 1
    perm = [r.i, r.j] + [k for k in range(1, n + 1) if k not in r.support]
    return perm


def e_beta_from_witness(t: int, perm, node: int = 1) -> BrauerDiagram:
    """``w E_node w^-1`` for the permutation ``w`` given as a 1-based list."""
    w = permutation_diagram(t, perm)
    inverse = [0] * len(perm)
    for k, image in enumerate(perm, start=1):
        inverse[image - 1] = k
    return multiply(multiply(w, generator_e(t, node)), permutation_diagram(t, inverse))


def e_beta(t: int, r: Root) -> BrauerDiagram:
    if r.j > t + 1:
        raise InvalidParameter(f"{r} is not a root of A_{t}")
    return e_beta_from_witness(t, _witness(t, r))


def e_hat(B: AdmissibleSet) -> BrauerDiagram:
    """The normalized idempotent ``delta^-|B| * prod E_beta``."""
    out = permutation_diagram(B.t, list(range(1, B.t + 2)))
    for r in B.sorted_roots():
        out = multiply(out, e_beta(B.t, r))
    return out.shift_delta(-len(B))


def symmetry_profile(B: AdmissibleSet) -> tuple[int, int]:
    """(number of swapped pairs, number of fixed roots) under index reversal."""
    n = B.t + 1
    sigma = lambda k: n + 1 - k  # noqa: E731
    image = {r: r.permute(sigma) for r in B.roots}
    if set(image.values()) != set(B.roots):
        raise NotSymmetricError(f"{B} is not stable under index reversal")
    fixed = sum(1 for r, s in image.items() if r == s)
    return ((len(B) - fixed) // 2, fixed)


def orthogonal_pairs(t: int) -> Iterator[tuple[Root, Root]]:
    for a, b in itertools.combinations(positive_roots(t), 2):
        if a.is_orthogonal(b):
            yield a, b
