"""Brauer diagrams of type A_t with loop-counting multiplication.

A diagram on ``t + 1`` strands has ``2(t + 1)`` dots. Top dots carry labels
``1..t+1`` from left to right and bottom dots ``t+2..2t+2``, so bottom
position ``j`` is label ``t + 1 + j``. Each diagram also carries an integer
power of the loop parameter delta.

>>> e = generator_e(1, 1)
>>> e.pairs
((1, 2), (3, 4))
>>> (e * e).delta_exp
1
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidParameter, ParseError

__all__ = [
    "BrauerDiagram",
    "DiagramSet",
    "identity",
    "generator_r",
    "generator_e",
    "permutation_diagram",
    "multiply",
    "op_involution",
    "equals_up_to_delta",
    "enumerate_monoid",
    "closure",
    "serialize",
    "deserialize",
    "double_factorial_odd",
]


@dataclass(frozen=True)
class BrauerDiagram:
    """A perfect matching on ``2(t+1)`` dots times ``delta ** delta_exp``.

    ``partner`` is the internal 0-based form: index ``j < t+1`` is top dot
    ``j+1`` and index ``t+1+j`` is bottom dot ``j+1``; ``partner[x]`` is the
    index joined to ``x``. Build instances with :meth:`from_pairs` or the
    generator constructors rather than by hand.
    """

    t: int
    partner: tuple[int, ...]
    delta_exp: int = 0

    @classmethod
    def from_pairs(cls, t: int, pairs: Iterable[Sequence[int]], delta_exp: int = 0) -> "BrauerDiagram":
        _check_t(t)
        size = 2 * (t + 1)
        partner = [-1] * size
        for index, pair in enumerate(pairs):
            if len(pair) != 2:
                raise ParseError("pair must have exactly two labels", f"pairs[{index}]")
            a, b = pair
            if not (isinstance(a, int) and isinstance(b, int)):
                raise ParseError("labels must be integers", f"pairs[{index}]")
            for label in (a, b):
                if not 1 <= label <= size:
                    raise ParseError(f"label {label} outside 1..{size}", f"pairs[{index}]")
            if a == b:
                raise ParseError(f"label {a} paired with itself", f"pairs[{index}]")
            for label in (a, b):
                if partner[label - 1] != -1:
                    raise ParseError(f"label {label} repeated", f"pairs[{index}]")
            partner[a - 1] = b - 1
            partner[b - 1] = a - 1
        missing = [i + 1 for i, p in enumerate(partner) if p == -1]
        if missing:
            raise ParseError(f"labels {missing} not covered by any pair", "pairs")
        return cls(t, tuple(partner), delta_exp)

    @property
    def strands(self) -> int:
        return self.t + 1

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Canonical pairs: smaller label first, sorted by first label."""
        return tuple((x + 1, p + 1) for x, p in enumerate(self.partner) if x < p)

    @property
    def matching_key(self) -> tuple[int, ...]:
        return self.partner

    def with_delta(self, delta_exp: int) -> "BrauerDiagram":
        return BrauerDiagram(self.t, self.partner, delta_exp)

    def shift_delta(self, by: int) -> "BrauerDiagram":
        return BrauerDiagram(self.t, self.partner, self.delta_exp + by)

    def top_pairs(self) -> list[tuple[int, int]]:
        n = self.strands
        return [(x + 1, p + 1) for x, p in enumerate(self.partner[:n]) if x < p < n]

    def bottom_pairs(self) -> list[tuple[int, int]]:
        """Horizontal strands on the bottom row, as bottom positions 1..t+1."""
        n = self.strands
        return [(x - n + 1, p - n + 1) for x, p in enumerate(self.partner) if n <= x < p]

    def vertical_strands(self) -> list[tuple[int, int]]:
        """(top position, bottom position) for each through-strand."""
        n = self.strands
        return [(x + 1, p - n + 1) for x, p in enumerate(self.partner[:n]) if p >= n]

    def is_permutation(self) -> bool:
        n = self.strands
        return all(p >= n for p in self.partner[:n])

    def __mul__(self, other: "BrauerDiagram") -> "BrauerDiagram":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"BrauerDiagram(t={self.t}, pairs={list(map(list, self.pairs))}, delta_exp={self.delta_exp})"


@dataclass
class DiagramSet:
    """Matchings of a fixed ``t`` collected without repetition (delta ignored)."""

    t: int
    _members: dict = field(default_factory=dict, repr=False)

    def add(self, d: BrauerDiagram) -> bool:
        if d.t != self.t:
            raise InvalidParameter(f"diagram has t={d.t}, set has t={self.t}")
        if d.partner in self._members:
            return False
        self._members[d.partner] = d.with_delta(0)
        return True

    def __contains__(self, d: BrauerDiagram) -> bool:
        return d.partner in self._members

    def __iter__(self) -> Iterator[BrauerDiagram]:
        return iter(self._members.values())

    def __len__(self) -> int:
        return len(self._members)

    @property
    def size(self) -> int:
        return len(self._members)

    def keys(self) -> set:
        return set(self._members)


def _check_t(t) -> None:
    if not isinstance(t, int) or t < 1:
        raise InvalidParameter(f"t must be a positive integer, got {t!r}")


def _check_node(t: int, i: int) -> None:
    _check_t(t)
    if not isinstance(i, int) or not 1 <= i <= t:
        raise InvalidParameter(f"node index {i!r} outside 1..{t}")


def identity(t: int) -> BrauerDiagram:
    _check_t(t)
    n = t + 1
    return BrauerDiagram(t, tuple(range(n, 2 * n)) + tuple(range(n)))


def permutation_diagram(t: int, perm: Sequence[int]) -> BrauerDiagram:
    """Diagram joining top ``perm[k-1]`` to bottom ``k`` (1-based values).

    With this convention ``permutation_diagram(p) * permutation_diagram(q)``
    is the diagram of the composite ``p o q``, and the diagram moves a top
    cup on ``{a, b}`` of the right factor to ``{p(a), p(b)}``.
    """
    _check_t(t)
    n = t + 1
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidParameter(f"not a permutation of 1..{n}: {list(perm)}")
    partner = [0] * (2 * n)
    for k, image in enumerate(perm):
        partner[image - 1] = n + k
        partner[n + k] = image - 1
    return BrauerDiagram(t, tuple(partner))


def generator_r(t: int, i: int) -> BrauerDiagram:
    _check_node(t, i)
    perm = list(range(1, t + 2))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return permutation_diagram(t, perm)


def generator_e(t: int, i: int) -> BrauerDiagram:
    _check_node(t, i)
    n = t + 1
    partner = list(identity(t).partner)
    top_a, top_b = i - 1, i
    partner[top_a], partner[top_b] = top_b, top_a
    partner[n + top_a], partner[n + top_b] = n + top_b, n + top_a
    return BrauerDiagram(t, tuple(partner))


def multiply(a: BrauerDiagram, b: BrauerDiagram) -> BrauerDiagram:
    """Stack ``a`` over ``b`` and count the closed loops in the middle row."""
    if a.t != b.t:
        raise InvalidParameter(f"cannot multiply diagrams with t={a.t} and t={b.t}")
    n = a.t + 1
    pa, pb = a.partner, b.partner
    result = [-1] * (2 * n)
    seen_middle = [False] * n

    # Outer dots are a's top row (indices < n) and b's bottom row (>= n);
    # the middle row is a's bottom glued to b's top.
    for start in range(2 * n):
        if result[start] != -1:
            continue
        in_a = start < n
        pos = start
        while True:
            if in_a:
                q = pa[pos]
                if q < n:
                    end = q
                    break
                seen_middle[q - n] = True
                in_a, pos = False, q - n
            else:
                q = pb[pos]
                if q >= n:
                    end = q
                    break
                seen_middle[q] = True
                in_a, pos = True, n + q
        result[start] = end
        result[end] = start

    loops = 0
    for j in range(n):
        if seen_middle[j]:
            continue
        loops += 1
        cur = j
        # every unseen middle dot lies on a closed loop alternating a, b
        while not seen_middle[cur]:
            seen_middle[cur] = True
            nxt = pa[n + cur] - n
            seen_middle[nxt] = True
            cur = pb[nxt]
    return BrauerDiagram(a.t, tuple(result), a.delta_exp + b.delta_exp + loops)


def product(t: int, factors: Iterable[BrauerDiagram]) -> BrauerDiagram:
    out = identity(t)
    for f in factors:
        out = multiply(out, f)
    return out


def op_involution(d: BrauerDiagram) -> BrauerDiagram:
    """Flip the diagram upside down (swap top ``j`` with bottom ``j``)."""
    n = d.strands
    flip = lambda x: x + n if x < n else x - n  # noqa: E731
    partner = [0] * (2 * n)
    for x, p in enumerate(d.partner):
        partner[flip(x)] = flip(p)
    return BrauerDiagram(d.t, tuple(partner), d.delta_exp)


def equals_up_to_delta(a: BrauerDiagram, b: BrauerDiagram) -> Optional[int]:
    """``a.delta_exp - b.delta_exp`` if the matchings agree, else ``None``."""
    if a.t != b.t:
        raise InvalidParameter(f"cannot compare diagrams with t={a.t} and t={b.t}")
    if a.partner != b.partner:
        return None
    return a.delta_exp - b.delta_exp


def closure(t: int, generators: Sequence[BrauerDiagram], include_identity: bool = True) -> DiagramSet:
    """Breadth-first closure of ``generators`` under left multiplication."""
    found = DiagramSet(t)
    frontier = deque()
    seeds = [identity(t)] if include_identity else []
    seeds += list(generators)
    gens = [g.with_delta(0) for g in generators]
    for s in seeds:
        if found.add(s):
            frontier.append(s.with_delta(0))
    while frontier:
        d = frontier.popleft()
        for g in gens:
            prod = multiply(g, d)
            if found.add(prod):
                frontier.append(prod.with_delta(0))
    return found


def enumerate_monoid(t: int) -> DiagramSet:
    """All diagrams reachable from R_i, E_i (1 <= i <= t) and the identity."""
    _check_t(t)
    gens = [generator_r(t, i) for i in range(1, t + 1)]
    gens += [generator_e(t, i) for i in range(1, t + 1)]
    return closure(t, gens)


def double_factorial_odd(t: int) -> int:
    """Product of the first ``t + 1`` positive odd integers."""
    out = 1
    for k in range(t + 1):
        out *= 2 * k + 1
    return out


def to_dict(d: BrauerDiagram) -> dict:
    return {"t": d.t, "delta": d.delta_exp, "pairs": [list(p) for p in d.pairs]}


def serialize(d: BrauerDiagram) -> str:
    return json.dumps(to_dict(d), separators=(",", ":"))


def from_dict(obj) -> BrauerDiagram:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", "$")
    for key in ("t", "delta", "pairs"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}", "$")
    extra = set(obj) - {"t", "delta", "pairs"}
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}", "$")
    t, delta, pairs = obj["t"], obj["delta"], obj["pairs"]
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise ParseError(f"t must be a positive integer, got {t!r}", "t")
    if not isinstance(delta, int) or isinstance(delta, bool):
        raise ParseError(f"delta must be an integer, got {delta!r}", "delta")
    if not isinstance(pairs, list):
        raise ParseError("pairs must be a list", "pairs")
    for index, pair in enumerate(pairs):
        if not isinstance(pair, list) or any(isinstance(x, bool) for x in pair):
            raise ParseError("pair must be a list of two integers", f"pairs[{index}]")
    return BrauerDiagram.from_pairs(t, pairs, delta)


def deserialize(text: str) -> BrauerDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"char {exc.pos}") from exc
    return from_dict(obj)
