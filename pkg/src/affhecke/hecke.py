"""Standard-basis arithmetic in the Hecke algebra of an extended affine Weyl group."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

from .affine_weyl import AffineElement, AffineWeylGroup, Generator
from .errors import DomainError
from .laurent import ONE, LaurentPoly
from .lambda_chain import LambdaChain
from .root_system import FiniteWeylElement


class HeckeElement:
    """Finite linear combination ``sum c_w T_w`` with Laurent polynomial coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[AffineElement, LaurentPoly]] = None):
        self._coeffs = {w: c for w, c in (coeffs or {}).items() if c}

    @classmethod
    def basis(cls, w: AffineElement, coeff: LaurentPoly = ONE) -> "HeckeElement":
        return cls({w: coeff})

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, w: AffineElement) -> LaurentPoly:
        return self._coeffs.get(w, LaurentPoly())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HeckeElement) and self._coeffs == other._coeffs

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self._coeffs)
        for w, c in other.items():
            out[w] = out.get(w, LaurentPoly()) + c
        return HeckeElement(out)

    def __repr__(self) -> str:
        return f"HeckeElement({len(self)} terms)"


def _accumulate(out: dict, w: AffineElement, c: LaurentPoly) -> None:
    prev = out.get(w)
    out[w] = c if prev is None else prev + c


def mult_generator(W: AffineWeylGroup, s: Generator, h: HeckeElement) -> HeckeElement:
    """``T_s h`` for ``s`` in S (an index) or in Pi (an element)."""
    g = W.generator(s)
    out: dict[AffineElement, LaurentPoly] = {}
    if isinstance(s, AffineElement):
        for w, c in h.items():
            _accumulate(out, g * w, c)
        return HeckeElement(out)
    xi = LaurentPoly.xi(W.weights[s])
    for w, c in h.items():
        sw = g * w
        _accumulate(out, sw, c)
        if W.length(sw) < W.length(w):
            _accumulate(out, w, c * xi)
    return HeckeElement(out)


def product_standard(W: AffineWeylGroup, x: AffineElement, y: AffineElement) -> HeckeElement:
    """``T_x T_y`` by applying the letters of a reduced word of ``x`` to ``T_y``."""
    a, word = W.reduced_word(x)
    h = HeckeElement.basis(y)
    for s in word:
        h = mult_generator(W, s, h)
    if a != W.identity:
        h = mult_generator(W, a, h)
    return h


@dataclass(frozen=True)
class SubsetTerm:
    J: tuple[int, ...]
    xi_degree: int
    xi: LaurentPoly
    target: AffineElement


def subsets_I(
    W: AffineWeylGroup,
    word: Sequence[int],
    y: AffineElement,
    pi: Optional[AffineElement] = None,
    target_degree: Optional[int] = None,
) -> Iterator[SubsetTerm]:
    """Expand ``T_x T_y`` over subsets of the reduced word ``x = pi s_n ... s_1``.

    ``word`` lists ``s_1 .. s_n``.  A position may be deleted (added to ``J``) only
    when its letter is a left descent of the partial product ``x^J[k-1,1] y``.  With
    ``target_degree`` only subsets whose ``xi_J`` has exactly that degree are produced.
    """
    word = list(word)
    n = len(word)
    x = W.from_word(word)
    if W.length(x) != n:
        raise DomainError("word is not reduced")
    pi = pi or W.identity
    weights = [W.weights[s] for s in word]
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + weights[k]
    gens = [W.generator(s) for s in range(W.rank + 1)]

    def rec(k: int, cur: AffineElement, J: list[int], deg: int) -> Iterator[SubsetTerm]:
        if target_degree is not None and (deg > target_degree or deg + suffix[k] < target_degree):
            return
        if k == n:
            xi = ONE
            for i in J:
                xi = xi * LaurentPoly.xi(weights[i - 1])
            yield SubsetTerm(tuple(J), deg, xi, pi * cur)
            return
        s = word[k]
        nxt = gens[s] * cur
        yield from rec(k + 1, nxt, J, deg)
        if W.length(nxt) < W.length(cur):
            J.append(k + 1)
            yield from rec(k + 1, cur, J, deg + weights[k])
            J.pop()

    yield from rec(0, y, [], 0)


def aggregate(terms: Iterator[SubsetTerm]) -> HeckeElement:
    out: dict[AffineElement, LaurentPoly] = {}
    for t in terms:
        _accumulate(out, t.target, t.xi)
    return HeckeElement(out)


def degree_bound(W: AffineWeylGroup, x: AffineElement, y: AffineElement) -> int:
    """Sum over directions of ``H_{x,y} = H(A_0, yA_0) & H(xyA_0, yA_0)`` of the heaviest weight."""
    hyps = W.separating(W.identity, y) & W.separating(x * y, y)
    best: dict[int, int] = {}
    for H in hyps:
        best[H.root] = max(best.get(H.root, 0), W.hyperplane_weight(H))
    return sum(best.values())


def firstbound(W: AffineWeylGroup, y: AffineElement) -> int:
    """``L(w_0) - L(y_0)`` for ``y = y_0 y_r`` with ``y_r^{-1}`` a minimal coset representative."""
    _, (y0, _) = W.coset_decompose(y)
    return W.weight(W.finite(W.rs.longest)) - W.weight(y0)


def finite_weight(W: AffineWeylGroup, v: FiniteWeylElement) -> int:
    return W.weight(W.finite(v))


def max_degree_subsets(
    W: AffineWeylGroup, chain: LambdaChain, v: FiniteWeylElement, lam: Sequence[int]
) -> set[tuple[int, ...]]:
    """Subsets ``J`` of the chain word whose ``xi_J`` in ``T_{p_tau} T_{v p_lam^-}`` has degree ``L(v)``."""
    lam = tuple(lam)
    if any(c > 0 for c in lam):
        raise DomainError(f"{lam} is not antidominant")
    if not W.in_P(lam):
        raise DomainError(f"{lam} is not a special point")
    y = W.finite(v) * W.antitranslation(lam)
    target = finite_weight(W, v)
    return {t.J for t in subsets_I(W, chain.word, y, chain.pi_part, target_degree=target)}
