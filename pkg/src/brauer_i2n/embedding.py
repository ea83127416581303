"""The twisted map phi: Br(I_2^n) -> Br(A_{n-1}) and the checks built on it.

``phi`` sends ``r0``/``r1`` to the product of ``R_i`` over even/odd ``i`` in
``1..n-1`` and ``e0``/``e1`` to the product of the matching ``E_i``. Each
product has pairwise commuting factors, so the order is irrelevant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .diagram import (
    BrauerDiagram,
    closure,
    equals_up_to_delta,
    generator_e,
    generator_r,
    identity,
    multiply,
)
from .dihedral import DihedralElement, enumerate_group
from .errors import BrauerError, InvalidParameter, RelationFailure, ThetaInconsistency
from .presentation import (
    GeneratorWord,
    Relation,
    ThetaParameters,
    declared_parameters,
    formula_rank,
    normal_forms,
    relation_schema,
    xi_candidates,
)
from .roots import AdmissibleSet, Root, act_diagram, simple_root

__all__ = [
    "PhiImage",
    "VerificationReport",
    "OrbitReport",
    "ERRATA",
    "phi_generators",
    "phi_word",
    "relation_exponent",
    "solve_theta",
    "verify_presentation",
    "image_rank",
    "check_normal_form_injectivity",
    "orbit",
    "seed_sets",
    "orbit_report",
    "stabilizer",
    "xi_candidate_exponents",
    "highest_root",
]

ERRATA = ("phi(e1) read as the product of E_i over odd i (printed as R_i)",)


def _check_n(n) -> None:
    if not isinstance(n, int) or n < 5:
        raise InvalidParameter(f"n must be an integer >= 5, got {n!r}")


@dataclass(frozen=True)
class PhiImage:
    n: int
    images: dict

    @property
    def t(self) -> int:
        return self.n - 1

    def __getitem__(self, letter: str) -> BrauerDiagram:
        return self.images[letter]


@lru_cache(maxsize=None)
def phi_generators(n: int) -> PhiImage:
    _check_n(n)
    t = n - 1
    images = {}
    for parity, (r, e) in ((0, ("r0", "e0")), (1, ("r1", "e1"))):
        nodes = [i for i in range(1, n) if i % 2 == parity]
        dr, de = identity(t), identity(t)
        for i in nodes:
            dr = multiply(dr, generator_r(t, i))
            de = multiply(de, generator_e(t, i))
        images[r], images[e] = dr, de
    return PhiImage(n, images)


def phi_word(n: int, w: Union[GeneratorWord, str, DihedralElement]) -> BrauerDiagram:
    """The image of a word; strings use the ``"e0 r1 r0"`` text form."""
    if isinstance(w, str):
        w = GeneratorWord.parse(n, w)
    elif isinstance(w, DihedralElement):
        w = GeneratorWord(w.n, w.letters)
    if w.n != n:
        raise InvalidParameter(f"word belongs to n={w.n}, not n={n}")
    images = phi_generators(n).images
    out = identity(n - 1)
    for letter in w.letters:
        out = multiply(out, images[letter])
    return out.shift_delta(w.delta_exp)


def relation_exponent(n: int, rel: Relation) -> Optional[int]:
    """``delta`` power of phi(lhs) over phi(rhs), or None if the matchings differ."""
    return equals_up_to_delta(phi_word(n, rel.lhs), phi_word(n, rel.rhs))


def solve_theta(n: int) -> ThetaParameters:
    """Read every undetermined exponent off the diagram images.

    Raises :class:`RelationFailure` when some relation's sides differ as
    matchings (or a fixed exponent is wrong), and :class:`ThetaInconsistency`
    when a parameter would get two values or a negative one.
    """
    _check_n(n)
    found: dict[str, int] = {}
    for rel in relation_schema(n):
        exp = relation_exponent(n, rel)
        if exp is None:
            raise RelationFailure(rel.source, f"{rel.lhs} vs {rel.rhs}")
        if rel.slot is None:
            if exp != 0:
                raise RelationFailure(rel.source, f"left side carries extra delta^{exp}")
            continue
        if exp < 0:
            raise ThetaInconsistency(rel.slot, [exp])
        if rel.slot in found and found[rel.slot] != exp:
            raise ThetaInconsistency(rel.slot, [found[rel.slot], exp])
        found[rel.slot] = exp
    if n % 2 and found["kappa_0"] != found["kappa_1"]:
        raise ThetaInconsistency("kappa", [found["kappa_0"], found["kappa_1"]])

    groups: dict[str, dict[int, int]] = {"eta": {}, "xi": {}, "theta": {}}
    for slot, value in found.items():
        name, _, k = slot.partition("_")
        if name in groups:
            groups[name][int(k)] = value
    if n % 2 == 0:
        # k = 0 instance of the theta relations is e0 e1 = e0 e1
        groups["theta"][0] = 0
    unused = tuple(p for p in declared_parameters(n) if p not in found)
    return ThetaParameters(n, found["kappa_0"], found["kappa_1"], unused=unused, **groups)


@dataclass
class VerificationReport:
    n: int
    theta: Optional[ThetaParameters]
    relation_results: list = field(default_factory=list)  # (source, holds, exponent)
    image_rank: int = 0
    formula_rank: int = 0
    injective_on_normal_forms: bool = False
    error: Optional[str] = None
    errata: tuple = ERRATA

    @property
    def ok(self) -> bool:
        return (
            self.error is None
            and all(holds for _, holds, _ in self.relation_results)
            and self.image_rank == self.formula_rank
            and self.injective_on_normal_forms
        )

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "theta": self.theta.to_dict() if self.theta else None,
            "relations": [
                {"source": s, "holds": h, "exponent": e} for s, h, e in self.relation_results
            ],
            "image_rank": self.image_rank,
            "formula_rank": self.formula_rank,
            "injective": self.injective_on_normal_forms,
        }
        if self.error is not None:
            out["error"] = self.error
        out["errata"] = list(self.errata)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def verify_presentation(n: int) -> VerificationReport:
    _check_n(n)
    theta, error = None, None
    try:
        theta = solve_theta(n)
    except BrauerError as exc:
        error = str(exc)
    results = []
    for rel in relation_schema(n):
        exp = relation_exponent(n, rel)
        if exp is None or theta is None:
            holds = False
        elif rel.slot is None:
            holds = exp == 0
        else:
            holds = exp == theta.value(rel.slot)
        # report the full power of delta between the sides, fixed part included
        shown = None if exp is None else exp + rel.rhs.delta_exp
        results.append((rel.source, holds, shown))
    injective, rank = _injectivity(n)
    return VerificationReport(
        n,
        theta,
        results,
        image_rank=rank,
        formula_rank=formula_rank(n),
        injective_on_normal_forms=injective,
        error=error,
    )


@lru_cache(maxsize=None)
def image_rank(n: int) -> int:
    """Number of distinct matchings in the monoid generated by the phi images."""
    _check_n(n)
    images = phi_generators(n).images
    return len(closure(n - 1, [images[x] for x in ("r0", "r1", "e0", "e1")]))


def _injectivity(n: int) -> tuple[bool, int]:
    rank = image_rank(n)
    keys = {phi_word(n, f.word()).partner for f in normal_forms(n)}
    count = len(normal_forms(n))
    return len(keys) == count == rank, rank


def check_normal_form_injectivity(n: int) -> bool:
    """True iff the normal forms map to pairwise distinct matchings, as many as the image rank."""
    _check_n(n)
    return _injectivity(n)[0]


def orbit(n: int, seed: AdmissibleSet) -> set[AdmissibleSet]:
    """Closure of ``{seed}`` under the diagram action of phi(r0), phi(r1)."""
    _check_n(n)
    if seed.t != n - 1:
        raise InvalidParameter(f"seed lives in A_{seed.t}, expected A_{n - 1}")
    images = phi_generators(n).images
    gens = [images["r0"], images["r1"]]
    found = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for B in frontier:
            for g in gens:
                C = act_diagram(g, B)
                if C not in found:
                    found.add(C)
                    nxt.append(C)
        frontier = nxt
    return found


def stabilizer(n: int, seed: AdmissibleSet) -> list[DihedralElement]:
    """Group elements fixing ``seed``, found by trying all 2n of them."""
    return [g for g in enumerate_group(n) if act_diagram(phi_word(n, g), seed) == seed]


def seed_sets(n: int) -> dict[str, AdmissibleSet]:
    """``Y0`` for odd n; ``Y0``, ``Y1`` and ``Y2 = phi(e0) Y1`` for even n."""
    _check_n(n)
    t = n - 1
    if n % 2:
        m = (n + 1) // 2
        return {"Y0": AdmissibleSet(t, frozenset(simple_root(2 * s) for s in range(1, m)))}
    m = n // 2
    y0 = AdmissibleSet(t, frozenset(simple_root(2 * s) for s in range(1, m)))
    y1 = AdmissibleSet(t, frozenset(simple_root(2 * s - 1) for s in range(1, m + 1)))
    y2 = act_diagram(phi_generators(n)["e0"], y1)
    return {"Y0": y0, "Y1": y1, "Y2": y2}


def highest_root(n: int) -> Root:
    """``alpha``: the sum of all simple roots of A_{n-1}."""
    return Root(1, n)


@dataclass(frozen=True)
class OrbitReport:
    n: int
    orbit_sizes: dict
    disjoint_Y1_Y2: Optional[bool] = None

    def to_dict(self) -> dict:
        out = {"n": self.n, "orbit_sizes": dict(self.orbit_sizes)}
        if self.disjoint_Y1_Y2 is not None:
            out["disjoint_Y1_Y2"] = self.disjoint_Y1_Y2
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def orbit_report(n: int) -> OrbitReport:
    seeds = seed_sets(n)
    orbits = {name: orbit(n, B) for name, B in seeds.items()}
    sizes = {name: len(o) for name, o in orbits.items()}
    if n % 2:
        return OrbitReport(n, sizes)
    return OrbitReport(n, sizes, not (orbits["Y1"] & orbits["Y2"]))


def xi_candidate_exponents(n: int, k: int) -> dict[str, Optional[int]]:
    """For ``n = 2m``: the delta power for each of the three candidate right sides."""
    return {tag: relation_exponent(n, rel) for tag, rel in xi_candidates(n, k).items()}
