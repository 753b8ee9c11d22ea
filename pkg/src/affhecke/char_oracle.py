"""Characters of simple Lie algebras: dimensions, weight multiplicities, tensor products."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .root_system import RootSystem, build_root_system


def _rs(rs) -> RootSystem:
    return build_root_system(rs) if isinstance(rs, str) else rs


def _check_dominant(rs: RootSystem, x: Sequence[int]) -> tuple[int, ...]:
    x = tuple(int(c) for c in x)
    if len(x) != rs.rank or not rs.is_dominant(x):
        raise DomainError(f"{x} is not a dominant weight of {rs.label}")
    return x


def weyl_dim(rs, tau: Sequence[int]) -> int:
    """Weyl dimension formula."""
    rs = _rs(rs)
    tau = _check_dominant(rs, tau)
    num = Fraction(1)
    for k in range(rs.n_positive):
        num *= Fraction(rs.pair_k(tau, k) + rs.pair_k(rs.rho, k), rs.pair_k(rs.rho, k))
    assert num.denominator == 1
    return int(num)


def _below(rs: RootSystem, top: Sequence[int], x: Sequence[int]) -> bool:
    """``x <= top`` in dominance order."""
    diff = rs.weight_to_root_coords(tuple(a - b for a, b in zip(top, x)))
    return all(c.denominator == 1 and c >= 0 for c in diff)


def freudenthal(rs, tau: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Multiplicities of the dominant weights of ``V(tau)`` by Freudenthal's recursion."""
    rs = _rs(rs)
    return dict(_freudenthal(rs, _check_dominant(rs, tau)))


@lru_cache(maxsize=None)
def _freudenthal(rs: RootSystem, tau: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    d = rs.rank
    simple = [rs.root_weight(i) for i in range(d)]
    # dominant weights below tau, ordered by depth
    depth = {tau: 0}
    frontier = [tau]
    while frontier:
        nxt = []
        for x in frontier:
            for a in simple:
                y = tuple(p - q for p, q in zip(x, a))
                if y in depth:
                    continue
                dom, _ = rs.dominant_representative(y)
                if _below(rs, tau, dom):
                    depth[y] = depth[x] + 1
                    nxt.append(y)
        frontier = nxt
    dominant = sorted((x for x in depth if rs.is_dominant(x)), key=lambda x: depth[x])
    mult: dict[tuple[int, ...], int] = {}
    shift = tuple(a + b for a, b in zip(tau, rs.rho))
    top_norm = rs.inner(shift, shift)
    roots = [rs.root_weight(k) for k in range(rs.n_positive)]

    def m(x):
        dom, _ = rs.dominant_representative(x)
        return mult.get(dom, 0)

    for mu in dominant:
        if mu == tau:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for a in roots:
            k = 1
            while True:
                y = tuple(p + k * q for p, q in zip(mu, a))
                dom, _ = rs.dominant_representative(y)
                if not _below(rs, tau, dom):
                    break
                total += m(y) * rs.inner(y, a)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rs.rho))
        val = 2 * total / (top_norm - rs.inner(mr, mr))
        assert val.denominator == 1, (tau, mu, val)
        if val:
            mult[mu] = int(val)
    return tuple(sorted(mult.items()))


def orbit(rs: RootSystem, x: Sequence[int]) -> set[tuple[int, ...]]:
    seen = {tuple(x)}
    frontier = [tuple(x)]
    while frontier:
        nxt = []
        for y in frontier:
            for j in range(rs.rank):
                z = rs.simple_reflection(j).act(y)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def character(rs, tau: Sequence[int]) -> dict[tuple[int, ...], int]:
    """All weights of ``V(tau)`` with multiplicities."""
    rs = _rs(rs)
    out = {}
    for mu, c in freudenthal(rs, tau).items():
        for x in orbit(rs, mu):
            out[x] = c
    return out


def tensor_decompose(rs, tau: Sequence[int], lam: Sequence[int]) -> dict[tuple[int, ...], int]:
    """``V(tau) (x) V(lam)`` by the signed shift rule over the weights of ``V(tau)``."""
    rs = _rs(rs)
    lam = _check_dominant(rs, lam)
    acc: Counter = Counter()
    for nu, c in character(rs, tau).items():
        x = tuple(a + b + r for a, b, r in zip(lam, nu, rs.rho))
        if any(rs.pair_k(x, k) == 0 for k in range(rs.n_positive)):
            continue
        dom, sign = rs.dominant_representative(x)
        acc[tuple(a - r for a, r in zip(dom, rs.rho))] += sign * c
    out = {mu: m for mu, m in sorted(acc.items()) if m}
    if any(m < 0 for m in out.values()):
        raise AssertionError(f"negative multiplicity in {rs.label} {tau} x {lam}")
    return out
