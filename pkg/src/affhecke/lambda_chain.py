"""Reduced words of dominant translations ordered by a lexicographic hyperplane key."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .affine_weyl import AffineElement, AffineWeylGroup, Hyperplane
from .errors import ConventionError, DomainError


@dataclass(frozen=True)
class LambdaChain:
    """Crossing data of a reduced word ``p_tau = a s_n ... s_1``.

    ``hyperplanes[i-1] = (k, N)`` is the wall ``H_{beta_k, N}`` crossed at step ``i``
    and ``word[i-1]`` the generator index ``s_i``.
    """

    tau: tuple[int, ...]
    hyperplanes: tuple[Hyperplane, ...]
    word: tuple[int, ...]
    pi_part: AffineElement
    root_order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.word)

    def beta(self, i: int) -> int:
        """Root index of ``beta_i`` (1-based position)."""
        return self.hyperplanes[i - 1].root

    def level(self, i: int) -> int:
        return self.hyperplanes[i - 1].level


def _check_root_order(d: int, root_order: Optional[Sequence[int]]) -> tuple[int, ...]:
    if root_order is None:
        return tuple(range(d))
    order = tuple(root_order)
    if sorted(order) != list(range(d)):
        raise DomainError(f"root order {order} is not a permutation of 0..{d - 1}")
    return order


def h_key(W: AffineWeylGroup, H: Hyperplane, tau: Sequence[int], root_order=None, literal: bool = False):
    """Sort key of a hyperplane separating ``A_0`` from ``A_tau``.

    The default key is ``(N, -c_1, ..., -c_d) / <tau, beta^vee>`` where ``c_i`` are the
    coroot coordinates of ``beta`` in the chosen order.  ``literal=True`` keeps positive
    tail entries; that variant does not give an alcove walk in general.
    """
    rs = W.rs
    order = _check_root_order(rs.rank, root_order)
    t = rs.pair_k(tau, H.root)
    if t == 0:
        raise DomainError(f"{W.format_hyperplane(H)} does not separate A_0 from A_tau")
    c = rs.coroot(H.root)
    sign = 1 if literal else -1
    return (Fraction(H.level, t),) + tuple(Fraction(sign * c[i], t) for i in order)


def separating_translation(W: AffineWeylGroup, tau: Sequence[int]) -> list[Hyperplane]:
    rs = W.rs
    out = []
    for k in range(rs.n_positive):
        out.extend(Hyperplane(k, n) for n in range(1, rs.pair_k(tau, k) + 1))
    return out


def build_lambda_chain(W: AffineWeylGroup, tau: Sequence[int], root_order=None, literal: bool = False) -> LambdaChain:
    """Order the walls between ``A_0`` and ``A_tau`` by :func:`h_key` and walk through them.

    Raises :class:`ConventionError` if two consecutive walls in that order are not
    crossed by a single generator.
    """
    rs = W.rs
    tau = tuple(tau)
    if len(tau) != rs.rank or not rs.is_dominant(tau):
        raise DomainError(f"{tau} is not a dominant weight of {rs.label}")
    if not W.in_P(tau):
        raise DomainError(f"{tau} is not a special point for this weight function")
    order = _check_root_order(rs.rank, root_order)
    hyps = separating_translation(W, tau)
    keyed = sorted(hyps, key=lambda H: h_key(W, H, tau, order, literal))
    keys = [h_key(W, H, tau, order, literal) for H in keyed]
    if len(set(keys)) != len(keys):
        raise ConventionError("hyperplane key is not injective")
    w = W.identity
    prod = W.identity
    word = []
    for i, H in enumerate(keyed, 1):
        for s in range(rs.rank + 1):
            if W.wall_crossed(s, w) == H:
                break
        else:
            raise ConventionError(
                f"step {i}: {W.format_hyperplane(H)} is not a wall of the current alcove"
            )
        w = W.lmul(s, w)
        if W.length(w) != i:
            raise ConventionError(f"step {i}: word stopped being reduced")
        prod = prod * W.reflection(H)
        if prod != w:
            raise ConventionError(f"step {i}: reflection product disagrees with the word")
        word.append(s)
    p_tau = W.translation(tau)
    a = p_tau * w.inverse()
    if a not in W.pi_elements:
        raise ConventionError("leftover factor does not stabilise A_0")
    return LambdaChain(tau, tuple(keyed), tuple(word), a, order)


@dataclass(frozen=True)
class ReversedChain:
    """Reduced word ``a^{-1} s'_n ... s'_1`` of ``p_{-tau}`` with its crossings."""

    tau: tuple[int, ...]
    hyperplanes: tuple[Hyperplane, ...]
    word: tuple[int, ...]
    pi_part: AffineElement

    @property
    def n(self) -> int:
        return len(self.word)


def reversed_chain(W: AffineWeylGroup, chain: LambdaChain) -> ReversedChain:
    """Invert ``a s_n ... s_1`` and move ``a^{-1}`` to the left.

    The letters ``s'_i = a s_{n-i+1} a^{-1}`` are generators conjugated by ``a``;
    crossing ``i`` is ``H_{beta_{n-i+1}, N_{n-i+1} - <tau, beta_{n-i+1}^vee>}``.
    """
    rs = W.rs
    a = chain.pi_part
    ai = a.inverse()
    n = chain.n
    conj = {}
    for s in range(rs.rank + 1):
        g = a * W.generator(s) * ai
        conj[s] = next(t for t in range(rs.rank + 1) if W.generator(t) == g)
    letters = tuple(conj[chain.word[n - i]] for i in range(1, n + 1))
    hyps = tuple(
        Hyperplane(H.root, H.level - rs.pair_k(chain.tau, H.root)) for H in reversed(chain.hyperplanes)
    )
    return ReversedChain(chain.tau, hyps, letters, ai)


def eval_reversed(rc: ReversedChain, W: AffineWeylGroup, upto: Optional[int] = None) -> AffineElement:
    """``s'_k ... s'_1`` (``upto=k``), or the full ``a^{-1} s'_n ... s'_1``."""
    w = W.identity
    k = rc.n if upto is None else upto
    for s in rc.word[:k]:
        w = W.lmul(s, w)
    return rc.pi_part * w if upto is None else w
