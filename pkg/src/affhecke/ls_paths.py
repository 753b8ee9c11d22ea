"""Piecewise-linear paths attached to admissible subsets, and the LS conditions on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .affine_weyl import AffineWeylGroup
from .alcove_model import AdmissibleSubset
from .errors import ConventionError, DomainError
from .lambda_chain import LambdaChain
from .root_system import FiniteWeylElement, RootSystem


@dataclass(frozen=True)
class LSPath:
    """Shape ``tau``, Weyl elements ``sigmas[0] > ... > sigmas[r]`` and times ``breaks[0..r+1]``.

    On ``[breaks[j], breaks[j+1]]`` the path moves in direction ``tau sigmas[j]``.
    Consecutive breaks may coincide; such zero-length segments carry no motion.
    """

    tau: tuple[int, ...]
    sigmas: tuple[FiniteWeylElement, ...]
    breaks: tuple[Fraction, ...]

    def direction(self, rs: RootSystem, j: int) -> tuple:
        return self.sigmas[j].act(self.tau)


def path_from_admissible(W: AffineWeylGroup, chain: LambdaChain, A: AdmissibleSubset) -> LSPath:
    rs = W.rs
    tau = chain.tau
    breaks = [Fraction(0)]
    for i in A.J:
        breaks.append(Fraction(chain.level(i), rs.pair_k(tau, chain.beta(i))))
    breaks.append(Fraction(1))
    if any(not 0 < a <= 1 for a in breaks[1:-1]):
        raise ConventionError(f"fold time outside (0, 1] for J={A.J}")
    if any(a > b for a, b in zip(breaks, breaks[1:])):
        raise ConventionError(f"fold times decrease for J={A.J}")
    return LSPath(tuple(tau), tuple(A.sigmas), tuple(breaks))


def breakpoints(path: LSPath) -> list[tuple]:
    """``pi(breaks[k])`` for every ``k``."""
    pts = [tuple(Fraction(0) for _ in path.tau)]
    for j, s in enumerate(path.sigmas):
        dt = path.breaks[j + 1] - path.breaks[j]
        step = s.act(path.tau)
        pts.append(tuple(p + dt * c for p, c in zip(pts[-1], step)))
    return pts


def evaluate(path: LSPath, t) -> tuple:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise DomainError(f"time {t} outside [0, 1]")
    pos = tuple(Fraction(0) for _ in path.tau)
    for j, s in enumerate(path.sigmas):
        lo, hi = path.breaks[j], path.breaks[j + 1]
        if t <= lo:
            break
        dt = min(t, hi) - lo
        pos = tuple(p + dt * c for p, c in zip(pos, s.act(path.tau)))
    return pos


def endpoint(path: LSPath) -> tuple[int, ...]:
    end = evaluate(path, 1)
    if any(c.denominator != 1 for c in end):
        raise ConventionError(f"non-integral endpoint {end}")
    return tuple(int(c) for c in end)


def is_LS(rs: RootSystem, path: LSPath) -> Optional[list[int]]:
    """The root chain witnessing the LS conditions, or ``None``.

    Step ``i`` needs ``sigmas[i] = sigmas[i-1] s_delta`` one length lower, with
    ``breaks[i] <tau sigmas[i], delta^vee>`` integral.
    """
    if path.breaks[0] != 0 or path.breaks[-1] != 1 or len(path.breaks) != len(path.sigmas) + 1:
        return None
    if any(a > b for a, b in zip(path.breaks, path.breaks[1:])):
        return None
    witness = []
    for i in range(1, len(path.sigmas)):
        prev, cur = path.sigmas[i - 1], path.sigmas[i]
        if rs.length(cur) != rs.length(prev) - 1:
            return None
        rel = prev.inverse() * cur
        k = next((k for k in range(rs.n_positive) if rs.reflection(k) == rel), None)
        if k is None:
            return None
        if (path.breaks[i] * rs.pair_k(cur.act(path.tau), k)).denominator != 1:
            return None
        witness.append(k)
    return witness


def is_dominant_path(rs: RootSystem, path: LSPath, lam: Sequence[int]) -> bool:
    """``lam + pi(t)`` stays in the closed dominant chamber.

    The chamber is convex and the path is linear between breakpoints, so checking
    the breakpoints suffices.
    """
    for p in breakpoints(path):
        if any(l + c < 0 for l, c in zip(lam, p)):
            return False
    return True


def star_path(rs: RootSystem, path: LSPath) -> LSPath:
    """Conjugate every element by the longest element; the shape becomes ``tau w_0``."""
    return LSPath(rs.star(path.tau), tuple(rs.star_elt(s) for s in path.sigmas), path.breaks)


_FRAME = 8.0


def to_svg(rs: RootSystem, paths: Sequence[LSPath], radius: int = 3) -> str:
    """Rank-2 picture: root hyperplanes at integer levels and each path as a polyline."""
    import math

    if rs.rank != 2:
        raise DomainError("svg output needs a rank-2 root system")
    # Euclidean images of the fundamental weights from the invariant form
    g11 = float(rs.inner((1, 0), (1, 0)))
    g22 = float(rs.inner((0, 1), (0, 1)))
    g12 = float(rs.inner((1, 0), (0, 1)))
    e1 = (math.sqrt(g11), 0.0)
    x2 = g12 / e1[0]
    e2 = (x2, math.sqrt(max(g22 - x2 * x2, 0.0)))
    scale = 40.0 / max(math.hypot(*e1), math.hypot(*e2))

    def xy(p):
        x = float(p[0]) * e1[0] + float(p[1]) * e2[0]
        y = float(p[0]) * e1[1] + float(p[1]) * e2[1]
        return 200 + scale * x, 200 - scale * y

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 400 400" width="400" height="400">',
        '<rect width="400" height="400" fill="white"/>',
    ]
    for k in range(rs.n_positive):
        c = rs.coroot(k)
        for n in range(-radius, radius + 1):
            # points with <x, beta^vee> = n, parametrised in weight coordinates
            if c[1] != 0:
                pts = [xy((s, Fraction(n - c[0] * s, c[1]))) for s in (-12, 12)]
            else:
                pts = [xy((Fraction(n, c[0]), s)) for s in (-12, 12)]
            (x1, y1), (x2_, y2) = pts
            lines.append(
                f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2_:.3f}" y2="{y2:.3f}" '
                f'stroke="#bbb" stroke-width="{1.0 if n == 0 else 0.4}"/>'
            )
    for path in paths:
        pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(xy, breakpoints(path)))
        lines.append(f'<polyline points="{pts}" fill="none" stroke="#c00" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
