"""Extended affine Weyl groups acting on extended alcoves.

An element ``w`` of the extended affine Weyl group W_e is stored through the
affine map ``sigma_w`` with ``w (A_0, 0) = (A_0, 0) sigma_w``; concretely
``x sigma_w = x u + lam`` with ``u`` in W_0 and ``lam`` an integral weight.
The map ``w -> sigma_w`` is multiplicative (``sigma_{gw} = sigma_g sigma_w``,
right-action composition), so the left W_e-action and the right
Omega_e-action on extended alcoves are both plain multiplication here and
commute by associativity.

The extended alcove ``w (A_0, 0)`` is the pair ``(A_0 u + lam, lam)``: its
distinguished vertex is the translation part.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence, Union

from .errors import ConfigurationError, ConventionError, DomainError, UnsupportedConfiguration
from .root_system import FiniteWeylElement, RootSystem, Vector, build_root_system


@dataclass(frozen=True)
class AffineElement:
    """``x -> x * finite + translation``; identifies an element of W_e."""

    finite: FiniteWeylElement
    translation: Vector

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        u2 = other.finite
        lam = tuple(a + b for a, b in zip(u2.act(self.translation), other.translation))
        return AffineElement(self.finite * u2, lam)

    def inverse(self) -> "AffineElement":
        ui = self.finite.inverse()
        return AffineElement(ui, tuple(-c for c in ui.act(self.translation)))

    def apply(self, x: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(self.finite.act(x), self.translation))


@dataclass(frozen=True, order=True)
class Hyperplane:
    """``H_{beta, level} = {x : <x, beta^vee> = level}`` with ``beta`` positive."""

    root: int
    level: int


@dataclass(frozen=True)
class ExtendedAlcove:
    """The extended alcove ``element (A_0, 0)``."""

    element: AffineElement

    @property
    def vertex(self) -> Vector:
        return self.element.translation


Generator = Union[int, AffineElement]


@dataclass(frozen=True)
class SpecialPoints:
    nu: int
    coset_reps: tuple[Vector, ...]
    full_weight_lattice: bool


class AffineWeylGroup:
    """The extended affine Weyl group of a root system with a weight function.

    Generators of S are numbered ``0 .. d`` (printed ``t1 .. t(d+1)``); number
    ``d`` is the affine generator, the reflection in ``H_{alpha~, 1}`` where
    ``alpha~^vee`` is the highest coroot.  ``weights`` lists ``L(t1) .. L(t(d+1))``.
    """

    def __init__(self, rs: Union[RootSystem, str], weights: Optional[Sequence[int]] = None):
        if isinstance(rs, str):
            rs = build_root_system(rs)
        self.rs = rs
        d = rs.rank
        self.rank = d
        if weights is None:
            weights = [1] * (d + 1)
        weights = tuple(int(v) for v in weights)
        if len(weights) != d + 1:
            raise ConfigurationError(f"need {d + 1} generator weights, got {len(weights)}")
        if any(v <= 0 for v in weights):
            raise ConfigurationError("weight function values must be positive")
        self.weights = weights
        self.h = rs.coxeter_bound
        self._rho = rs.rho
        n = rs.n_positive
        self._coroots = [rs.coroot(k) for k in range(n)]
        self._root_w = [rs.root_weight(k) for k in range(n)]
        self.walls = [Hyperplane(i, 0) for i in range(d)] + [Hyperplane(rs.highest_coroot_root, 1)]
        self.identity = AffineElement(rs.identity, (0,) * d)
        self._gen_elements = [self.reflection(H) for H in self.walls]
        self._check_weight_function()
        self._special = self._compute_special_points()

    # -- weight function -------------------------------------------------------
    def _level_modulus(self, k: int) -> int:
        rs = self.rs
        return math.gcd(*[rs.pair_k(rs.root_weight(i), k) for i in range(self.rank)])

    def hyperplane_class(self, H: Hyperplane) -> tuple[int, int]:
        """Omega-orbit invariant of a hyperplane: (root norm, level mod g)."""
        rs = self.rs
        norm = rs._norm(rs.positive_roots[H.root])
        return norm, H.level % self._level_modulus(H.root)

    def _check_weight_function(self) -> None:
        self._class_weight: dict[tuple[int, int], int] = {}
        for i, H in enumerate(self.walls):
            c = self.hyperplane_class(H)
            if c in self._class_weight and self._class_weight[c] != self.weights[i]:
                raise ConfigurationError(
                    f"generators t{i + 1} and a conjugate generator carry different weights"
                )
            self._class_weight[c] = self.weights[i]

    def hyperplane_weight(self, H: Hyperplane) -> int:
        """``L(H)``: the weight of the generators whose faces lie in ``H``."""
        try:
            return self._class_weight[self.hyperplane_class(H)]
        except KeyError:
            raise ConventionError(f"no wall of A_0 is conjugate to {H}") from None

    def direction_weight(self, k: int) -> int:
        """``L(beta) = max L(H)`` over hyperplanes of direction ``beta``."""
        g = self._level_modulus(k)
        return max(self.hyperplane_weight(Hyperplane(k, n)) for n in range(g))

    def b_flag(self, k: int) -> int:
        same = self.hyperplane_weight(Hyperplane(k, 0)) == self.hyperplane_weight(Hyperplane(k, 1))
        return 1 if same else 2

    def generator_weight(self, s: int) -> int:
        return self.weights[s]

    # -- special points ----------------------------------------------------------
    def point_weight(self, p: Sequence) -> int:
        """``L(p)``: total weight of the hyperplanes through the point ``p``."""
        total = 0
        for k in range(self.rs.n_positive):
            v = self.rs.pair_k(p, k)
            if v == int(v):
                total += self.hyperplane_weight(Hyperplane(k, int(v)))
        return total

    def _compute_special_points(self) -> SpecialPoints:
        from fractions import Fraction

        rs = self.rs
        top = rs.coroot(rs.highest_coroot_root)
        vertices = [(0,) * self.rank] + [
            tuple(Fraction(int(i == j), top[i]) for j in range(self.rank)) for i in range(self.rank)
        ]
        values = [self.point_weight(v) for v in vertices]
        nu = max(values)
        if values[0] != nu:
            raise UnsupportedConfiguration(
                "0 is not a special point for this weight function; "
                "the alcove A_0 has no special vertex at the origin"
            )
        reps = []
        for v, val in zip(vertices, values):
            if val == nu:
                if any(c.denominator != 1 for c in map(Fraction, v)):
                    raise ConventionError(f"non-integral vertex {v} attains the maximal weight")
                reps.append(tuple(int(c) for c in v))
        n_cosets = len([v for v in vertices if all(Fraction(c).denominator == 1 for c in v)])
        return SpecialPoints(nu, tuple(reps), len(reps) == n_cosets)

    def special_points_check(self) -> SpecialPoints:
        """The lattice P of L-weights (as coset representatives modulo Q) and ``nu``."""
        return self._special

    def in_P(self, lam: Sequence[int]) -> bool:
        rs = self.rs
        return any(rs.in_root_lattice(tuple(a - b for a, b in zip(lam, r))) for r in self._special.coset_reps)

    # -- elements ------------------------------------------------------------------
    def reflection(self, H: Hyperplane) -> AffineElement:
        """The affine reflection ``sigma_{beta, n}: x -> x s_beta + n beta``."""
        return AffineElement(self.rs.reflection(H.root), tuple(H.level * c for c in self._root_w[H.root]))

    def translation(self, lam: Sequence[int]) -> AffineElement:
        """``p_lam``: the element with ``p_lam A_0 = A_lam``."""
        return AffineElement(self.rs.identity, tuple(lam))

    def antitranslation(self, lam: Sequence[int]) -> AffineElement:
        """``p_lam^-``: the element with ``p_lam^- A_0 = A_lam^-``."""
        return AffineElement(self.rs.longest, tuple(lam))

    def finite(self, u: FiniteWeylElement) -> AffineElement:
        return AffineElement(u, (0,) * self.rank)

    def generator(self, s: Generator) -> AffineElement:
        if isinstance(s, AffineElement):
            return s
        return self._gen_elements[s]

    @cached_property
    def pi_elements(self) -> list[AffineElement]:
        """Stabiliser of A_0 in Omega_e = Omega_0 x| P (identity first)."""
        out = [self.identity]
        for lam in self._special.coset_reps:
            for u in self.rs.weyl_group:
                a = AffineElement(u, lam)
                if a != self.identity and not any(self.alcove_coords(a)):
                    out.append(a)
        return out

    def generators(self) -> list[Generator]:
        """S (as indices ``0..d``) followed by the non-trivial elements of Pi."""
        return list(range(self.rank + 1)) + self.pi_elements[1:]

    def pi_part(self, w: AffineElement) -> AffineElement:
        """The ``a`` in ``w = a w'`` with ``w'`` in the non-extended group."""
        rs = self.rs
        for a in self.pi_elements:
            if rs.in_root_lattice(tuple(x - y for x, y in zip(w.translation, a.translation))):
                return a
        raise ConventionError("translation part not in P")

    # -- geometry ------------------------------------------------------------------
    def alcove_coords(self, w: AffineElement) -> tuple[int, ...]:
        """``m_beta`` with ``m_beta < <x, beta^vee> < m_beta + 1`` on ``w A_0``."""
        h = self.h
        r = w.finite.act(self._rho)
        lam = w.translation
        out = []
        for c in self._coroots:
            s = 0
            t = 0
            for ri, li, ci in zip(r, lam, c):
                s += ri * ci
                t += li * ci
            out.append(s // h + t)
        return tuple(out)

    def base_point(self, w: AffineElement) -> tuple:
        """The interior point ``x_0 sigma_w`` with ``x_0 = rho / h``."""
        from fractions import Fraction

        x0 = tuple(Fraction(c, self.h) for c in self._rho)
        return w.apply(x0)

    def length(self, w: AffineElement) -> int:
        return sum(abs(m) for m in self.alcove_coords(w))

    def separating(self, a: AffineElement, b: AffineElement) -> set[Hyperplane]:
        """Hyperplanes separating the alcoves ``a A_0`` and ``b A_0``."""
        ma, mb = self.alcove_coords(a), self.alcove_coords(b)
        out = set()
        for k, (x, y) in enumerate(zip(ma, mb)):
            lo, hi = min(x, y), max(x, y)
            out.update(Hyperplane(k, n) for n in range(lo + 1, hi + 1))
        return out

    def weight(self, w: AffineElement) -> int:
        """``L(w)``: total weight of the hyperplanes separating ``A_0`` and ``w A_0``."""
        total = 0
        for k, m in enumerate(self.alcove_coords(w)):
            levels = range(m + 1, 1) if m < 0 else range(1, m + 1)
            for n in levels:
                total += self.hyperplane_weight(Hyperplane(k, n))
        return total

    def in_dominant_chamber(self, w: AffineElement) -> bool:
        m = self.alcove_coords(w)
        return all(m[i] >= 0 for i in range(self.rank))

    def in_antidominant_chamber(self, w: AffineElement) -> bool:
        m = self.alcove_coords(w)
        return all(m[i] < 0 for i in range(self.rank))

    def transform_hyperplane(self, H: Hyperplane, g: AffineElement) -> Hyperplane:
        """The image ``H g`` of a hyperplane under the right action."""
        k, sign = self.rs.identify_weight(g.finite.act(self._root_w[H.root]))
        level = sign * H.level + self.rs.pair_k(g.translation, k)
        return Hyperplane(k, level)

    def side(self, w: AffineElement, H: Hyperplane) -> int:
        """+1 if ``w A_0`` lies in ``H^+`` (above the hyperplane), else -1."""
        return 1 if self.alcove_coords(w)[H.root] >= H.level else -1

    # -- actions -------------------------------------------------------------------
    def act_left(self, s: Generator, E: ExtendedAlcove) -> ExtendedAlcove:
        return ExtendedAlcove(self.generator(s) * E.element)

    def act_right(self, sigma: AffineElement, E: ExtendedAlcove) -> ExtendedAlcove:
        return ExtendedAlcove(E.element * sigma)

    def lmul(self, s: Generator, w: AffineElement) -> AffineElement:
        return self.generator(s) * w

    def wall_crossed(self, s: int, w: AffineElement) -> Hyperplane:
        """The hyperplane separating ``w A_0`` and ``s w A_0``."""
        return self.transform_hyperplane(self.walls[s], w)

    def is_left_descent(self, s: int, w: AffineElement) -> tuple[bool, Hyperplane]:
        sw = self.lmul(s, w)
        desc = self.length(sw) < self.length(w)
        H = self.wall_crossed(s, w)
        # orientation dichotomy for the crossing
        above = self.side(w, H) > 0
        expect = (above and H.level > 0) or (not above and H.level <= 0)
        if expect != desc:
            raise ConventionError(f"descent dichotomy fails for t{s + 1} at {w}")
        return desc, H

    def is_right_descent(self, w: AffineElement, s: int) -> bool:
        return self.length(w * self.generator(s)) < self.length(w)

    # -- words ---------------------------------------------------------------------
    def reduced_word(self, w: AffineElement) -> tuple[AffineElement, list[int]]:
        """``(a, [s_1, ..., s_n])`` with ``w = a s_n ... s_1`` reduced."""
        word: list[int] = []
        cur = w
        ell = self.length(cur)
        while ell > 0:
            for s in range(self.rank + 1):
                nxt = cur * self._gen_elements[s]
                ln = self.length(nxt)
                if ln < ell:
                    word.append(s)
                    cur, ell = nxt, ln
                    break
            else:  # pragma: no cover - lengths always drop
                raise ConventionError("no right descent found")
        return cur, word

    def from_word(self, word: Sequence[int], pi: Optional[AffineElement] = None) -> AffineElement:
        """``a s_n ... s_1`` from ``[s_1, ..., s_n]``."""
        w = self.identity
        for s in word:
            w = self._gen_elements[s] * w
        return (pi or self.identity) * w

    def from_product(self, letters: Sequence[Generator]) -> AffineElement:
        """Product of generators written left to right."""
        w = self.identity
        for s in letters:
            w = w * self.generator(s)
        return w

    def coset_decompose(self, w: AffineElement):
        """``((x, v), (v0, y))`` with ``w = x v = v0 y``, ``x`` in X_0, ``y^{-1}`` in X_0."""
        d = self.rank
        x, v = w, self.identity
        changed = True
        while changed:
            changed = False
            for i in range(d):
                nxt = x * self._gen_elements[i]
                if self.length(nxt) < self.length(x):
                    x, v = nxt, self._gen_elements[i] * v
                    changed = True
        y, v0 = w, self.identity
        changed = True
        while changed:
            changed = False
            for i in range(d):
                nxt = self._gen_elements[i] * y
                if self.length(nxt) < self.length(y):
                    y, v0 = nxt, v0 * self._gen_elements[i]
                    changed = True
        return (x, v), (v0, y)

    def quarter_orientation(self, lam: Sequence[int], v: FiniteWeylElement, sign: str, k: int) -> int:
        """Orientation (+1 for +inf, -1 for -inf) of the quarter ``C^{sign}_{lam, v}`` along root ``k``.

        Independent of ``lam``.
        """
        rs = self.rs
        if sign == "+":
            return 1 if rs.act_root(k, v.inverse())[1] > 0 else -1
        if sign == "-":
            return -1 if rs.act_root(k, rs.star_elt(v).inverse())[1] > 0 else 1
        raise DomainError(f"sign must be '+' or '-', not {sign!r}")

    def ball(self, radius: int) -> Iterator[AffineElement]:
        """All elements of length at most ``radius`` (every Pi-coset)."""
        seen = set(self.pi_elements)
        frontier = list(self.pi_elements)
        yield from frontier
        for _ in range(radius):
            nxt = []
            for w in frontier:
                lw = self.length(w)
                for s in range(self.rank + 1):
                    u = self._gen_elements[s] * w
                    if u not in seen and self.length(u) == lw + 1:
                        seen.add(u)
                        nxt.append(u)
            yield from nxt
            frontier = nxt

    # -- literals ------------------------------------------------------------------
    _LITERAL = re.compile(r"^\s*(?:p\[([-\d,\s]*)\])?\s*\*?\s*(?:w\[([\d\s]*)\])?\s*$")

    def parse(self, text: str) -> AffineElement:
        """Parse ``p[c1,...,cd]*w[i1 i2 ...]``: ``p_lam`` times a word in ``t1 .. t(d+1)``."""
        m = self._LITERAL.match(text)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ConfigurationError(f"cannot parse element literal {text!r}")
        w = self.identity
        if m.group(1) is not None:
            lam = tuple(int(c) for c in m.group(1).split(",") if c.strip())
            if len(lam) != self.rank or not self.in_P(lam):
                raise ConfigurationError(f"translation {lam} is not in P")
            w = self.translation(lam)
        if m.group(2):
            letters = [int(c) - 1 for c in m.group(2).split()]
            if any(not 0 <= s <= self.rank for s in letters):
                raise ConfigurationError(f"generator index out of range in {text!r}")
            w = w * self.from_product(letters)
        return w

    def format(self, w: AffineElement) -> str:
        """Inverse of :meth:`parse`: ``w = p_lam u`` with ``u`` in W_0 written as a reduced word."""
        # w = u p_mu = p_{mu u^-1} u
        lam = w.finite.inverse().act(w.translation)
        letters = " ".join(str(j + 1) for j in self.rs.reduced_word(w.finite))
        return f"p[{','.join(str(c) for c in lam)}]*w[{letters}]"

    def format_hyperplane(self, H: Hyperplane) -> str:
        return f"H({self.rs.format_root(self.rs.positive_roots[H.root])},{H.level})"
