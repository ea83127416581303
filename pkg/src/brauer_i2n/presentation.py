"""Relations of Br(I_2^n) with symbolic delta exponents, and normal forms.

Words are over ``r0 r1 e0 e1``. A relation whose right side carries an
undetermined power of delta names that power in ``slot`` (``"kappa_0"``,
``"eta_2"``, ``"xi_1"``, ``"theta_1"``); the values are found by
:func:`brauer_i2n.embedding.solve_theta`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Optional

from .dihedral import (
    DihedralElement,
    alternating_word,
    coset_representatives,
    enumerate_group,
    standard_subgroups,
)
from .errors import InvalidParameter, ParseError

__all__ = [
    "ALPHABET",
    "GeneratorWord",
    "Relation",
    "ThetaParameters",
    "I2nMonomial",
    "relation_schema",
    "xi_relation_tag",
    "xi_candidates",
    "normal_forms",
    "formula_rank",
]

ALPHABET = ("r0", "r1", "e0", "e1")


@dataclass(frozen=True)
class GeneratorWord:
    n: int
    letters: tuple[str, ...] = ()
    delta_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        bad = [x for x in self.letters if x not in ALPHABET]
        if bad:
            raise InvalidParameter(f"letters outside {ALPHABET}: {bad}")

    @classmethod
    def parse(cls, n: int, text: str) -> "GeneratorWord":
        """Inverse of ``str``: ``"delta^2 e0 r1"``, ``"1"`` for the empty word."""
        delta = 0
        letters = []
        for pos, token in enumerate(text.split()):
            if token == "1":
                continue
            if token.startswith("delta^"):
                try:
                    delta += int(token[len("delta^"):])
                except ValueError:
                    raise ParseError(f"bad delta power {token!r}", f"token {pos}") from None
            elif token in ALPHABET:
                letters.append(token)
            else:
                raise ParseError(f"unknown letter {token!r}", f"token {pos}")
        return cls(n, tuple(letters), delta)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        if self.n != other.n:
            raise InvalidParameter("words of different n")
        return GeneratorWord(self.n, self.letters + other.letters, self.delta_exp + other.delta_exp)

    def op(self) -> "GeneratorWord":
        """Word reversal (the op anti-involution)."""
        return GeneratorWord(self.n, self.letters[::-1], self.delta_exp)

    def __str__(self) -> str:
        parts = [f"delta^{self.delta_exp}"] if self.delta_exp else []
        parts += list(self.letters)
        return " ".join(parts) if parts else "1"


def _word(n: int, *chunks) -> GeneratorWord:
    letters: list[str] = []
    for c in chunks:
        letters += [c] if isinstance(c, str) else list(c)
    return GeneratorWord(n, tuple(letters))


@dataclass(frozen=True)
class Relation:
    lhs: GeneratorWord
    rhs: GeneratorWord
    source: str
    slot: Optional[str] = None

    def to_dict(self) -> dict:
        return {"source": self.source, "lhs": str(self.lhs), "rhs": str(self.rhs), "slot": self.slot}

    def op(self) -> "Relation":
        return Relation(self.lhs.op(), self.rhs.op(), self.source + "op", self.slot)


@dataclass
class ThetaParameters:
    """Solved delta exponents. Keys of ``eta``/``xi``/``theta`` are ``k``."""

    n: int
    kappa0: int
    kappa1: int
    eta: dict = field(default_factory=dict)
    xi: dict = field(default_factory=dict)
    theta: dict = field(default_factory=dict)
    # declared parameters that no relation constrains
    unused: tuple = ()

    def __post_init__(self):
        values = [self.kappa0, self.kappa1, *self.eta.values(), *self.xi.values(), *self.theta.values()]
        if any(v < 0 for v in values):
            raise InvalidParameter("theta parameters must be natural numbers")
        if self.n % 2 and self.kappa0 != self.kappa1:
            raise InvalidParameter("odd n requires kappa0 == kappa1")

    def value(self, slot: str) -> int:
        name, _, k = slot.partition("_")
        if name == "kappa":
            return self.kappa0 if k == "0" else self.kappa1
        return getattr(self, name)[int(k)]

    def to_dict(self) -> dict:
        as_str = lambda d: {str(k): d[k] for k in sorted(d)}  # noqa: E731
        return {
            "kappa0": self.kappa0,
            "kappa1": self.kappa1,
            "eta": as_str(self.eta),
            "xi": as_str(self.xi),
            "theta": as_str(self.theta),
        }


def _check_n(n) -> None:
    if not isinstance(n, int) or n < 5:
        raise InvalidParameter(f"n must be an integer >= 5, got {n!r}")


def xi_relation_tag(m: int, k: int) -> str:
    """Which of 0.1.13 / 0.1.14 / 0.1.15 applies, from the parities of l/m, l/k."""
    l = lcm(k, m)
    if (l // m) % 2 == 0:
        return "0.1.14"
    if (l // k) % 2 == 1:
        return "0.1.13"
    return "0.1.15"


def xi_candidates(n: int, k: int) -> dict[str, Relation]:
    """All three right-hand sides for ``e0 [r1 r0 ...]_{2k-1} e0`` at ``n = 2m``."""
    m = n // 2
    lhs = _word(n, "e0", alternating_word("r1", 2 * k - 1), "e0")
    slot = f"xi_{k}"
    return {
        "0.1.13": Relation(lhs, _word(n, alternating_word("r1", 2 * m - 1), "e0"), "0.1.13", slot),
        "0.1.14": Relation(lhs, _word(n, "e0"), "0.1.14", slot),
        "0.1.15": Relation(lhs, _word(n, "e0", "e1", "e0"), "0.1.15", slot),
    }


def relation_schema(n: int) -> list[Relation]:
    """Every instantiated defining relation of Br(I_2^n)."""
    _check_n(n)
    rels: list[Relation] = []
    if n % 2 == 0:
        m = n // 2
        for i in (0, 1):
            r = f"r{i}"
            rels.append(Relation(_word(n, r, r), _word(n), "0.1.3"))
        for i in (0, 1):
            r, e = f"r{i}", f"e{i}"
            rels.append(Relation(_word(n, r, e), _word(n, e), "0.1.4"))
            rels.append(Relation(_word(n, e, r), _word(n, e), "0.1.4"))
        for i in (0, 1):
            e = f"e{i}"
            rels.append(Relation(_word(n, e, e), _word(n, e), "0.1.5", f"kappa_{i}"))
        rels.append(Relation(_word(n, "e1", "e0", "e1"), GeneratorWord(n, ("e1",), 1), "0.1.6"))
        long10 = alternating_word("r1", 2 * m - 1)
        long01 = alternating_word("r0", 2 * m - 1)
        rels.append(Relation(_word(n, "e0", long10), _word(n, long10, "e0"), "0.1.7"))
        rels.append(Relation(_word(n, "e1", long01), _word(n, "e1"), "0.1.8"))
        rels.append(Relation(_word(n, long01, "e1"), _word(n, "e1"), "0.1.9"))
        # k = 0 is dropped: 0.1.10/11 become vacuous and 0.1.12 has length -1
        for k in range(1, m // 2 + 1):
            rels.append(Relation(_word(n, "e0", alternating_word("r1", 2 * k), "e1"),
                                 _word(n, "e0", "e1"), "0.1.10", f"theta_{k}"))
        for k in range(1, m // 2 + 1):
            rels.append(Relation(_word(n, "e1", alternating_word("r0", 2 * k), "e0"),
                                 _word(n, "e1", "e0"), "0.1.11", f"theta_{k}"))
        for k in range(1, m // 2 + 1):
            rels.append(Relation(_word(n, "e1", alternating_word("r0", 2 * k - 1), "e1"),
                                 _word(n, "e1"), "0.1.12", f"eta_{k}"))
        rels.append(Relation(_word(n, alternating_word("r1", 2 * m)), _word(n, alternating_word("r0", 2 * m)),
                             "0.1.20"))
        for k in range(1, m // 2 + 1):
            rels.append(xi_candidates(n, k)[xi_relation_tag(m, k)])
    else:
        m = (n + 1) // 2
        for i in (0, 1):
            r = f"r{i}"
            rels.append(Relation(_word(n, r, r), _word(n), "0.2.3"))
        for i in (0, 1):
            r, e = f"r{i}", f"e{i}"
            rels.append(Relation(_word(n, r, e), _word(n, e), "0.2.4"))
            rels.append(Relation(_word(n, e, r), _word(n, e), "0.2.4"))
        for i in (0, 1):
            e = f"e{i}"
            rels.append(Relation(_word(n, e, e), _word(n, e), "0.2.5", f"kappa_{i}"))
        w = alternating_word("r0", 2 * m - 2)
        rels.append(Relation(_word(n, w, "e0"), _word(n, "e1", w), "0.2.6"))
        for k in range(1, m):
            rels.append(Relation(_word(n, "e0", alternating_word("r1", 2 * k - 1), "e0"),
                                 _word(n, "e0"), "0.2.7", f"xi_{k}"))
        rels.append(Relation(_word(n, alternating_word("r1", 2 * m - 1)), _word(n, alternating_word("r0", 2 * m - 1)),
                             "0.2.8"))
    return rels


def declared_parameters(n: int) -> list[str]:
    """Parameter names declared for the given n, whether or not a relation uses them."""
    _check_n(n)
    names = ["kappa_0", "kappa_1"]
    if n % 2 == 0:
        m = n // 2
        for k in range(1, m // 2 + 1):
            names += [f"eta_{k}", f"xi_{k}", f"theta_{k}"]
    else:
        m = (n + 1) // 2
        names += [f"xi_{k}" for k in range(1, m + 1)]
    return names


@dataclass(frozen=True)
class I2nMonomial:
    """A normal-form monomial ``u * middle * v * w``.

    ``middle`` is the run of ``e`` letters (empty for group elements);
    ``factors`` are the dihedral components in order of appearance after
    ``u``: ``(v, w)`` for family ``ii`` and ``(w,)`` otherwise.
    """

    n: int
    family: str
    u: DihedralElement
    middle: tuple[str, ...] = ()
    factors: tuple[DihedralElement, ...] = ()
    delta_exp: int = 0

    def word(self) -> GeneratorWord:
        letters = list(self.u.letters) + list(self.middle)
        for f in self.factors:
            letters += list(f.letters)
        return GeneratorWord(self.n, tuple(letters), self.delta_exp)

    def key(self) -> tuple:
        return (self.family, self.u, self.middle, self.factors)

    def __str__(self) -> str:
        return str(self.word())


def formula_rank(n: int) -> int:
    _check_n(n)
    if n % 2:
        return 2 * n + n * n
    return 2 * n + 3 * n * n // 2


def normal_forms(n: int) -> list[I2nMonomial]:
    _check_n(n)
    out = [I2nMonomial(n, "group", g) for g in enumerate_group(n)]
    if n % 2:
        n0, _ = standard_subgroups(n, 0)
        d0 = coset_representatives(n, n0)
        for u in d0.representatives:
            for v in d0.op_representatives():
                out.append(I2nMonomial(n, "odd", u, ("e0",), (v,)))
        return out

    systems = {}
    for i in (0, 1):
        big, small = standard_subgroups(n, i)
        systems[i] = (coset_representatives(n, big), small)
    for i in (0, 1):
        d, k = systems[i]
        for u in d.representatives:
            for v in k:
                for w in d.op_representatives():
                    out.append(I2nMonomial(n, "ii", u, (f"e{i}",), (v, w)))
    d0, d1 = systems[0][0], systems[1][0]
    families = [
        ("iii", d0, ("e0", "e1"), d1),
        ("iv", d1, ("e1", "e0"), d0),
        ("v", d0, ("e0", "e1", "e0"), d0),
    ]
    for name, left, middle, right in families:
        for u in left.representatives:
            for w in right.op_representatives():
                out.append(I2nMonomial(n, name, u, middle, (w,)))
    return out
