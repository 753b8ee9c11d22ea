"""Finite root systems and Weyl groups in exact integer coordinates.

Roots are stored in simple-root coordinates, weights in fundamental-weight
coordinates.  Weyl group elements act on the *right* of weights, and products
are read left to right: ``x * (u1 * u2) == (x * u1) * u2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product as iproduct
from typing import Iterator, Optional, Sequence

from .errors import ConfigurationError, DomainError

Vector = tuple[int, ...]


def _symmetrized_form(kind: str, rank: int) -> list[list[int]]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots, Bourbaki numbering."""
    g = [[0] * rank for _ in range(rank)]

    def link(i: int, j: int, value: int) -> None:
        g[i][j] = g[j][i] = value

    if kind == "A":
        for i in range(rank):
            g[i][i] = 2
        for i in range(rank - 1):
            link(i, i + 1, -1)
    elif kind == "B":
        for i in range(rank):
            g[i][i] = 4
        g[rank - 1][rank - 1] = 2
        for i in range(rank - 1):
            link(i, i + 1, -2)
    elif kind == "C":
        for i in range(rank):
            g[i][i] = 2
        g[rank - 1][rank - 1] = 4
        for i in range(rank - 2):
            link(i, i + 1, -1)
        link(rank - 2, rank - 1, -2)
    elif kind == "D":
        for i in range(rank):
            g[i][i] = 2
        for i in range(rank - 2):
            link(i, i + 1, -1)
        link(rank - 3, rank - 1, -1)
    elif kind == "E":
        for i in range(rank):
            g[i][i] = 2
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, rank - 1):
            link(i, i + 1, -1)
    elif kind == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif kind == "G":
        g[0][0] = 2
        g[1][1] = 6
        link(0, 1, -3)
    return g


_VALID_RANKS = {
    "A": range(1, 9),
    "B": range(2, 9),
    "C": range(2, 9),
    "D": range(4, 9),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}


def parse_cartan_type(label: str) -> tuple[str, int]:
    """``"B2"`` -> ``("B", 2)``."""
    label = label.strip().upper()
    try:
        return label[0], int(label[1:])
    except (IndexError, ValueError):
        raise ConfigurationError(f"cannot parse Cartan type {label!r}") from None


@dataclass(frozen=True, eq=False)
class FiniteWeylElement:
    """An element of the finite Weyl group.

    ``images[i]`` is the image of the fundamental weight ``omega_i`` under the
    right action; this tuple is the canonical form.
    """

    images: tuple[Vector, ...]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteWeylElement) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return FiniteWeylElement(tuple(act_matrix(row, other.images) for row in self.images))

    def act(self, x: Sequence[int]) -> Vector:
        return act_matrix(x, self.images)

    def inverse(self) -> "FiniteWeylElement":
        return FiniteWeylElement(_integer_inverse(self.images))

    def __repr__(self) -> str:
        return f"FiniteWeylElement({self.images})"


@lru_cache(maxsize=None)
def _integer_inverse(rows: tuple[Vector, ...]) -> tuple[Vector, ...]:
    d = len(rows)
    m = [[Fraction(v) for v in rows[i]] + [Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    for col in range(d):
        piv = next(r for r in range(col, d) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [v / p for v in m[col]]
        for r in range(d):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    out = []
    for row in m:
        assert all(v.denominator == 1 for v in row[d:])
        out.append(tuple(int(v) for v in row[d:]))
    return tuple(out)


def act_matrix(x: Sequence, rows: Sequence[Sequence[int]]) -> tuple:
    d = len(rows)
    return tuple(sum(x[i] * rows[i][j] for i in range(d)) for j in range(d))


@dataclass(eq=False)
class RootSystem:
    """Cartan datum with positive roots, coroots and the finite Weyl group."""

    cartan_type: str
    rank: int
    gram: list[list[int]] = field(repr=False)

    def __post_init__(self) -> None:
        d = self.rank
        g = self.gram
        # cartan_matrix[i][j] = <alpha_i, alpha_j^vee>
        self.cartan_matrix = [[2 * g[i][j] // g[j][j] for j in range(d)] for i in range(d)]
        self.simple_roots: list[Vector] = [tuple(int(i == j) for j in range(d)) for i in range(d)]
        self.positive_roots: list[Vector] = self._close_roots()
        self._root_index = {b: k for k, b in enumerate(self.positive_roots)}
        self._root_weights = [self.root_to_weight(b) for b in self.positive_roots]
        self._weight_to_root: dict[Vector, tuple[int, int]] = {}
        for k, w in enumerate(self._root_weights):
            self._weight_to_root[w] = (k, 1)
            self._weight_to_root[tuple(-c for c in w)] = (k, -1)
        self._coroots = [self._coroot(b) for b in self.positive_roots]
        self.rho: Vector = tuple([1] * d)

    # -- construction helpers -------------------------------------------------
    def _close_roots(self) -> list[Vector]:
        d = self.rank
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for b in frontier:
                for j in range(d):
                    c = sum(b[i] * self.cartan_matrix[i][j] for i in range(d))
                    r = tuple(b[i] - (c if i == j else 0) for i in range(d))
                    if r not in seen and all(x >= 0 for x in r) and any(r):
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        # simple roots first, in index order
        return sorted(seen, key=lambda b: (sum(b), tuple(-x for x in b)))

    def _norm(self, b: Sequence[int]) -> int:
        d = self.rank
        return sum(b[i] * b[j] * self.gram[i][j] for i in range(d) for j in range(d))

    def _coroot(self, b: Vector) -> Vector:
        nb = self._norm(b)
        return tuple(b[i] * self.gram[i][i] // nb for i in range(self.rank))

    # -- basic data -------------------------------------------------------------
    @property
    def label(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    def root_to_weight(self, b: Sequence[int]) -> Vector:
        d = self.rank
        return tuple(sum(b[i] * self.cartan_matrix[i][j] for i in range(d)) for j in range(d))

    def root_weight(self, k: int) -> Vector:
        """Positive root number ``k`` in fundamental-weight coordinates."""
        return self._root_weights[k]

    def coroot(self, k: int) -> Vector:
        """Simple-coroot coordinates of the coroot of positive root ``k``."""
        return self._coroots[k]

    def root_index(self, b: Sequence[int]) -> int:
        return self._root_index[tuple(b)]

    def identify_weight(self, w: Sequence[int]) -> tuple[int, int]:
        """Return ``(k, sign)`` with ``w == sign * positive_roots[k]`` (as weights)."""
        try:
            return self._weight_to_root[tuple(w)]
        except KeyError:
            raise DomainError(f"{tuple(w)} is not a root") from None

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    def pairing(self, x: Sequence, beta: Sequence[int]) -> int:
        """``<x, beta^vee>`` for a weight ``x`` and a root ``beta`` (simple-root coords).

        ``beta`` may be negative.
        """
        b = tuple(beta)
        if b in self._root_index:
            c = self._coroots[self._root_index[b]]
            return sum(xi * ci for xi, ci in zip(x, c))
        nb = tuple(-v for v in b)
        if nb in self._root_index:
            c = self._coroots[self._root_index[nb]]
            return -sum(xi * ci for xi, ci in zip(x, c))
        raise DomainError(f"{b} is not a root of {self.label}")

    def pair_k(self, x: Sequence, k: int):
        """``<x, beta_k^vee>`` for positive root number ``k``."""
        return sum(xi * ci for xi, ci in zip(x, self._coroots[k]))

    def fundamental_weight(self, i: int) -> Vector:
        return tuple(int(i == j) for j in range(self.rank))

    @cached_property
    def highest_coroot_root(self) -> int:
        """Index of the root whose coroot is the highest coroot."""
        return max(range(self.n_positive), key=lambda k: (sum(self._coroots[k]), self._coroots[k]))

    @cached_property
    def coxeter_bound(self) -> int:
        """``1 + <rho, highest coroot>``; ``rho / coxeter_bound`` lies inside A_0."""
        return 1 + self.pair_k(self.rho, self.highest_coroot_root)

    @cached_property
    def inverse_cartan(self) -> list[list[Fraction]]:
        """``omega_i = sum_j inverse_cartan[i][j] alpha_j``."""
        d = self.rank
        m = [[Fraction(self.cartan_matrix[i][j]) for j in range(d)] + [Fraction(int(i == j)) for j in range(d)]
             for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            m[col] = [v / p for v in m[col]]
            for r in range(d):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        # rows of C^{-1} (alpha = C omega  =>  omega = C^{-1} alpha)
        return [row[d:] for row in m]

    def weight_to_root_coords(self, x: Sequence) -> tuple[Fraction, ...]:
        inv = self.inverse_cartan
        d = self.rank
        return tuple(sum(Fraction(x[i]) * inv[i][j] for i in range(d)) for j in range(d))

    def in_root_lattice(self, x: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.weight_to_root_coords(x))

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Invariant form on weights, normalised so that ``(alpha_i, alpha_i) = gram[i][i]``."""
        r = self.weight_to_root_coords(y)
        return sum(Fraction(x[j]) * r[j] * Fraction(self.gram[j][j], 2) for j in range(self.rank))

    def is_dominant(self, x: Sequence) -> bool:
        return all(c >= 0 for c in x)

    # -- Weyl group -------------------------------------------------------------
    @cached_property
    def identity(self) -> FiniteWeylElement:
        d = self.rank
        return FiniteWeylElement(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    def simple_reflection(self, j: int) -> FiniteWeylElement:
        return self.reflection(j)

    def reflection(self, k: int) -> FiniteWeylElement:
        """Reflection in positive root number ``k``."""
        bw = self._root_weights[k]
        c = self._coroots[k]
        d = self.rank
        return FiniteWeylElement(
            tuple(tuple(int(i == j) - c[i] * bw[j] for j in range(d)) for i in range(d))
        )

    def reflect(self, x: Sequence, beta: Sequence[int]) -> tuple:
        """``x sigma_beta = x - <x, beta^vee> beta``."""
        p = self.pairing(x, beta)
        bw = self.root_to_weight(beta)
        return tuple(xi - p * bi for xi, bi in zip(x, bw))

    def act(self, x: Sequence, w: FiniteWeylElement) -> tuple:
        return w.act(x)

    def act_root(self, k: int, w: FiniteWeylElement) -> tuple[int, int]:
        """Image of positive root ``k`` under ``w`` as ``(index, sign)``."""
        return self.identify_weight(w.act(self._root_weights[k]))

    def inverse(self, w: FiniteWeylElement) -> FiniteWeylElement:
        return w.inverse()

    def length(self, w: FiniteWeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        n = 0
        for k in range(self.n_positive):
            if self.identify_weight(w.act(self._root_weights[k]))[1] < 0:
                n += 1
        return n

    def inversion_set(self, w: FiniteWeylElement) -> list[int]:
        """``{gamma > 0 : gamma w^{-1} < 0}``, the directions of H(A_0, A_0 w)."""
        winv = self.inverse(w)
        return [k for k in range(self.n_positive) if self.act_root(k, winv)[1] < 0]

    def reduced_word(self, w: FiniteWeylElement) -> list[int]:
        """Indices ``i_1 .. i_r`` with ``w = s_{i_1} ... s_{i_r}`` (right-action product)."""
        word: list[int] = []
        cur = w
        while cur != self.identity:
            for j in range(self.rank):
                nxt = self.simple_reflection(j) * cur
                if self.length(nxt) < self.length(cur):
                    word.append(j)
                    cur = nxt
                    break
        return word

    def from_word(self, word: Sequence[int]) -> FiniteWeylElement:
        w = self.identity
        for j in word:
            w = w * self.simple_reflection(j)
        return w

    @cached_property
    def weyl_group(self) -> list[FiniteWeylElement]:
        """All of W_0 in breadth-first (length) order."""
        e = self.identity
        seen = {e}
        order = [e]
        frontier = [e]
        gens = [self.simple_reflection(j) for j in range(self.rank)]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens:
                    u = w * s
                    if u not in seen:
                        seen.add(u)
                        order.append(u)
                        nxt.append(u)
            frontier = nxt
        return order

    def iter_weyl_group(self) -> Iterator[FiniteWeylElement]:
        return iter(self.weyl_group)

    @cached_property
    def longest(self) -> FiniteWeylElement:
        """The longest element, found by descending to the antidominant chamber."""
        rho = self.rho
        w = self.identity
        x = rho
        while True:
            j = next((j for j in range(self.rank) if x[j] > 0), None)
            if j is None:
                return w
            s = self.simple_reflection(j)
            w = w * s
            x = s.act(x)

    def bruhat_cover(self, u: FiniteWeylElement, k: int) -> Optional[FiniteWeylElement]:
        """``sigma_beta u`` if it covers ``u`` in Bruhat order, else ``None``.

        ``k`` indexes the positive root ``beta``.
        """
        w = self.reflection(k) * u
        lw, lu = self.length(w), self.length(u)
        if lw != lu + 1:
            return None
        assert self.act_root(k, u)[1] > 0, "sign criterion disagrees with length test"
        return w

    def star(self, x: Sequence) -> tuple:
        return self.longest.act(x)

    def star_elt(self, w: FiniteWeylElement) -> FiniteWeylElement:
        w0 = self.longest
        return w0 * w * w0

    def dominant_representative(self, x: Sequence) -> tuple[tuple, int]:
        """Return ``(x w, length-parity sign of w)`` with ``x w`` dominant."""
        x = tuple(x)
        sign = 1
        while True:
            j = next((j for j in range(self.rank) if x[j] < 0), None)
            if j is None:
                return x, sign
            x = self.simple_reflection(j).act(x)
            sign = -sign

    # -- formatting -------------------------------------------------------------
    def format_root(self, b: Sequence[int]) -> str:
        parts = []
        for i, c in enumerate(b):
            if c == 0:
                continue
            coeff = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{coeff}a{i + 1}"))
        if not parts:
            return "0"
        s = "".join(f"{sg}{t}" for sg, t in parts)
        return s[1:] if s.startswith("+") else s

    def format_weight(self, x: Sequence) -> str:
        return ",".join(str(v) for v in x)


_CACHE: dict[tuple[str, int], RootSystem] = {}


def build_root_system(kind: str, rank: Optional[int] = None) -> RootSystem:
    """Root system of the given Cartan type.

    Accepts ``("B", 2)`` or a single label ``"B2"``.
    """
    if rank is None:
        kind, rank = parse_cartan_type(kind)
    kind = kind.upper()
    if kind not in _VALID_RANKS or rank not in _VALID_RANKS[kind]:
        raise ConfigurationError(f"unsupported Cartan type {kind}{rank}")
    key = (kind, rank)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(kind, rank, _symmetrized_form(kind, rank))
    return _CACHE[key]


def weight_grid(rank: int, low: int, high: int) -> Iterator[Vector]:
    """All weight vectors with every coordinate in ``[low, high]``."""
    return (tuple(v) for v in iproduct(range(low, high + 1), repeat=rank))
