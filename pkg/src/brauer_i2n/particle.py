"""The reflecting-particle puzzle that decides relations 0.1.13 to 0.1.15.

A particle starts at ``(1, 2k-1)`` in the box ``1 <= x <= 2m``,
``0 <= y <= 2k-1`` and moves diagonally one lattice unit per step. The
floor and ceiling mirrors sit half a unit outside the box, so a bounce
costs one flat step. At a side wall the particle first makes one vertical
step (continuing up or down) and then reverses horizontally. It stops on
reaching a corner.

>>> simulate(BoxSpec(5, 2))[0]
(1, 0)
>>> closed_form(BoxSpec(5, 2))
(1, 0)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import InvalidParameter

__all__ = [
    "BoxSpec",
    "ParticleState",
    "simulate",
    "closed_form",
    "unfold",
    "classify_relation",
    "valid_specs",
    "to_svg",
]


@dataclass(frozen=True)
class BoxSpec:
    m: int
    k: int

    def __post_init__(self):
        m, k = self.m, self.k
        if not (isinstance(m, int) and isinstance(k, int)) or not (1 < 2 * k <= m):
            raise InvalidParameter(f"need integers with 1 < 2k <= m, got m={m!r}, k={k!r}")

    @property
    def width(self) -> int:
        return 2 * self.m

    @property
    def top(self) -> int:
        return 2 * self.k - 1

    @property
    def lcm(self) -> int:
        return lcm(self.k, self.m)

    def stop_points(self) -> tuple[tuple[int, int], ...]:
        return ((1, 0), (self.width, 0), (1, self.top), (self.width, self.top))


@dataclass(frozen=True)
class ParticleState:
    x: int
    y: int
    dx: int
    dy: int


def _step(spec: BoxSpec, s: ParticleState) -> ParticleState:
    x, y, dx, dy = s.x, s.y, s.dx, s.dy
    at_wall = (x == spec.width and dx == 1) or (x == 1 and dx == -1)
    if at_wall:
        ny = y + dy
        if not 0 <= ny <= spec.top:
            # mirror half a unit outside; vertical step is absorbed by the bounce
            ny, dy = y, -dy
        return ParticleState(x, ny, -dx, dy)
    ny = y + dy
    if not 0 <= ny <= spec.top:
        return ParticleState(x + dx, y, dx, -dy)
    return ParticleState(x + dx, ny, dx, dy)


def simulate(spec: BoxSpec) -> tuple[tuple[int, int], list[ParticleState]]:
    """Run the particle until it stops; returns (stop point, full trace)."""
    if not isinstance(spec, BoxSpec):
        raise InvalidParameter("simulate expects a BoxSpec")
    state = ParticleState(1, spec.top, 1, -1)
    trace = [state]
    stops = set(spec.stop_points())
    limit = 4 * spec.k * spec.lcm
    for _ in range(limit):
        state = _step(spec, state)
        trace.append(state)
        if (state.x, state.y) in stops:
            return (state.x, state.y), trace
    raise RuntimeError(f"particle did not stop within {limit} steps for {spec}")


def closed_form(spec: BoxSpec) -> tuple[int, int]:
    l = spec.lcm
    if (l // spec.m) % 2 == 0:
        return (1, 0)
    if (l // spec.k) % 2 == 1:
        return (spec.width, 0)
    return (spec.width, spec.top)


def unfold(trace: list[ParticleState]) -> list[tuple[int, int]]:
    """Replace wall reflections by penetration: every step advances x by one."""
    return [(trace[0].x + i, s.y) for i, s in enumerate(trace)]


def classify_relation(spec: BoxSpec) -> str:
    """Relation tag for ``e0 [r1 r0 ...]_{2k-1} e0`` at ``n = 2m``."""
    by_stop = {(spec.width, 0): "0.1.13", (1, 0): "0.1.14", (spec.width, spec.top): "0.1.15"}
    stop = simulate(spec)[0]
    if stop in by_stop:
        return by_stop[stop]
    raise AssertionError(f"particle stopped at the start corner for {spec}")


def valid_specs(max_m: int):
    for m in range(2, max_m + 1):
        for k in range(1, m // 2 + 1):
            yield BoxSpec(m, k)


def to_svg(spec: BoxSpec, trace: list[ParticleState], scale: int = 20) -> str:
    """Folded and unfolded paths as SVG polylines (y grows downward)."""
    folded = [(s.x, s.y) for s in trace]
    flat = unfold(trace)
    width = max(x for x, _ in flat) + 2
    height = spec.top + 2
    gap = height + 1

    def pts(path, dy):
        return " ".join(f"{x * scale},{(spec.top - y + 1 + dy) * scale}" for x, y in path)

    box = (f'<rect x="{scale}" y="{scale}" width="{(spec.width - 1) * scale}" '
           f'height="{spec.top * scale}" fill="none" stroke="#999"/>')
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{(width + 1) * scale}" '
        f'height="{(2 * gap + 1) * scale}">',
        box,
        f'<polyline points="{pts(folded, 0)}" fill="none" stroke="black"/>',
        f'<polyline points="{pts(flat, gap)}" fill="none" stroke="blue"/>',
        "</svg>",
        "",
    ])
