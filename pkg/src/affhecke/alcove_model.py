"""Admissible subsets of a reduced word of ``p_tau``, folded galleries and tensor multiplicities."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .affine_weyl import AffineElement, AffineWeylGroup, Hyperplane
from .errors import ConventionError, DomainError
from .lambda_chain import LambdaChain, build_lambda_chain, reversed_chain
from .root_system import FiniteWeylElement


@dataclass(frozen=True)
class AdmissibleSubset:
    """``J = (i_1 < ... < i_p)`` with its chain ``sigmas[k] = sigma_{J_k}``.

    ``sigmas[0]`` is ``sigma_J`` (also ``v_J``) and ``sigmas[p]`` is the identity.
    """

    J: tuple[int, ...]
    sigmas: tuple[FiniteWeylElement, ...] = field(compare=False)

    @property
    def v(self) -> FiniteWeylElement:
        return self.sigmas[0]

    @property
    def size(self) -> int:
        return len(self.J)


def enumerate_admissible(W: AffineWeylGroup, chain: LambdaChain) -> list[AdmissibleSubset]:
    """All admissible subsets, grown from the largest index down by Bruhat covers."""
    rs = W.rs
    betas = [H.root for H in chain.hyperplanes]
    out: list[AdmissibleSubset] = []

    def rec(top: int, picked: list[int], chain_elts: list[FiniteWeylElement]) -> None:
        J = tuple(reversed(picked))
        out.append(AdmissibleSubset(J, tuple(reversed(chain_elts))))
        cur = chain_elts[-1]
        for i in range(top - 1, 0, -1):
            nxt = rs.bruhat_cover(cur, betas[i - 1])
            if nxt is not None:
                picked.append(i)
                chain_elts.append(nxt)
                rec(i, picked, chain_elts)
                picked.pop()
                chain_elts.pop()

    rec(chain.n + 1, [], [rs.identity])
    out.sort(key=lambda a: (a.size, a.J))
    return out


def admissible_from_indices(W: AffineWeylGroup, chain: LambdaChain, J: Sequence[int]) -> Optional[AdmissibleSubset]:
    """The admissible subset with indices ``J``, or ``None`` if the chain breaks."""
    rs = W.rs
    J = tuple(sorted(J))
    elts = [rs.identity]
    for i in reversed(J):
        if not 1 <= i <= chain.n:
            raise DomainError(f"index {i} outside 1..{chain.n}")
        nxt = rs.bruhat_cover(elts[-1], chain.beta(i))
        if nxt is None:
            return None
        elts.append(nxt)
    return AdmissibleSubset(J, tuple(reversed(elts)))


def partial_products(W: AffineWeylGroup, chain: LambdaChain, J: Sequence[int], start: AffineElement) -> list[AffineElement]:
    """``[p^J[k,1] start for k = 0..n]``, skipping the letters at positions in ``J``."""
    skip = set(J)
    cur = start
    out = [cur]
    for k, s in enumerate(chain.word, 1):
        if k not in skip:
            cur = W.lmul(s, cur)
        out.append(cur)
    return out


def is_dominant(W: AffineWeylGroup, chain: LambdaChain, A: AdmissibleSubset, mu: Sequence[int]) -> bool:
    """Every alcove ``p^J[k,1] v_J A_mu`` (``k = 1..n``) lies in the dominant chamber."""
    start = W.finite(A.v) * W.translation(mu)
    return all(W.in_dominant_chamber(w) for w in partial_products(W, chain, A.J, start)[1:])


def is_antidominant(W: AffineWeylGroup, chain: LambdaChain, A: AdmissibleSubset, lam: Sequence[int]) -> bool:
    """Every alcove ``p^J[k,1] v_J A^-_lam`` (``k = 1..n``) lies in the antidominant chamber."""
    start = W.finite(A.v) * W.antitranslation(lam)
    return all(W.in_antidominant_chamber(w) for w in partial_products(W, chain, A.J, start)[1:])


def is_maximal(W: AffineWeylGroup, chain: LambdaChain, J: Sequence[int]) -> bool:
    """Each deleted crossing uses a heaviest hyperplane of its direction."""
    return all(W.weights[chain.word[i - 1]] == W.direction_weight(chain.beta(i)) for i in J)


# -- galleries ---------------------------------------------------------------------


@dataclass(frozen=True)
class Gallery:
    """``(mu_0, B_0, F_1, B_1, ..., F_l, B_l, mu_end)``.

    Alcoves are stored as elements ``g`` with ``B = A_0 sigma_g``, normalised to the
    coset representative whose translation lies in the root lattice.
    """

    start: tuple
    alcoves: tuple[AffineElement, ...]
    facets: tuple[Hyperplane, ...]
    end: tuple

    @property
    def weight(self) -> tuple:
        return tuple(a - b for a, b in zip(self.end, self.start))

    def __len__(self) -> int:
        return len(self.facets)


def _norm_alcove(W: AffineWeylGroup, g: AffineElement) -> AffineElement:
    return W.pi_part(g).inverse() * g


def gallery_from_word(
    W: AffineWeylGroup, word: Sequence[int], start: AffineElement, pi: Optional[AffineElement] = None
) -> Gallery:
    """Gallery of ``pi t_n ... t_1`` (``word = [t_1..t_n]``) from the extended alcove ``start (A_0, 0)``."""
    cur = start
    alcoves = [_norm_alcove(W, cur)]
    facets = []
    for s in word:
        facets.append(W.wall_crossed(s, cur))
        cur = W.lmul(s, cur)
        alcoves.append(_norm_alcove(W, cur))
    end = ((pi or W.identity) * cur).translation
    return Gallery(tuple(start.translation), tuple(alcoves), tuple(facets), tuple(end))


def tail_flip(W: AffineWeylGroup, g: Gallery, k: int) -> Gallery:
    """Reflect ``B_k, F_{k+1}, ..., B_l`` and the end vertex through the hyperplane of ``F_k``."""
    if not 1 <= k <= len(g):
        raise DomainError(f"facet index {k} outside 1..{len(g)}")
    r = W.reflection(g.facets[k - 1])
    alcoves = list(g.alcoves[:k]) + [_norm_alcove(W, B * r) for B in g.alcoves[k:]]
    facets = list(g.facets[:k]) + [W.transform_hyperplane(F, r) for F in g.facets[k:]]
    return Gallery(g.start, tuple(alcoves), tuple(facets), tuple(r.apply(g.end)))


def fold(W: AffineWeylGroup, g: Gallery, J: Sequence[int]) -> Gallery:
    """``f_{i_1} ... f_{i_p} g``."""
    for k in sorted(J, reverse=True):
        g = tail_flip(W, g, k)
    return g


def sharp(W: AffineWeylGroup, g: Gallery) -> Gallery:
    """Read ``g`` backwards and translate everything by minus its weight."""
    w = g.weight
    t = W.translation(tuple(-c for c in w))
    alcoves = tuple(_norm_alcove(W, B * t) for B in reversed(g.alcoves))
    facets = tuple(W.transform_hyperplane(F, t) for F in reversed(g.facets))
    shift = lambda p: tuple(a - b for a, b in zip(p, w))  # noqa: E731
    return Gallery(shift(g.end), alcoves, facets, shift(g.start))


def dagger(J: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(sorted(n - i + 1 for i in J))


def gallery_J(W: AffineWeylGroup, chain: LambdaChain, A: AdmissibleSubset) -> Gallery:
    return gallery_from_word(W, chain.word, W.finite(A.v), chain.pi_part)


def gallery_minus_tau(W: AffineWeylGroup, chain: LambdaChain) -> Gallery:
    rc = reversed_chain(W, chain)
    return gallery_from_word(W, rc.word, W.identity, rc.pi_part)


def weight_mu(W: AffineWeylGroup, chain: LambdaChain, A: AdmissibleSubset) -> tuple[int, ...]:
    """Weight of the folded gallery of ``J``, cross-checked against the reversed word."""
    folded = fold(W, gallery_J(W, chain, A), A.J)
    mu = tuple(int(c) for c in folded.weight)
    rc = reversed_chain(W, chain)
    Jd = set(dagger(A.J, chain.n))
    w = W.identity
    for k, s in enumerate(rc.word, 1):
        if k not in Jd:
            w = W.lmul(s, w)
    other = tuple(-c for c in (rc.pi_part * w).translation)
    if other != mu:
        raise ConventionError(f"folded weight {mu} disagrees with reversed-word weight {other} for J={A.J}")
    return mu


def tensor_multiplicities(rs_or_W, tau: Sequence[int], lam: Sequence[int], root_order=None) -> dict[tuple, int]:
    """Multiplicities of the irreducibles in ``V(tau) (x) V(lam)`` by counting dominant subsets."""
    W = rs_or_W if isinstance(rs_or_W, AffineWeylGroup) else AffineWeylGroup(rs_or_W)
    if any(v != 1 for v in W.weights):
        raise DomainError("tensor multiplicities use the constant weight function")
    chain = build_lambda_chain(W, tau, root_order)
    out: Counter = Counter()
    for A in enumerate_admissible(W, chain):
        if is_dominant(W, chain, A, lam):
            mu = tuple(a + b for a, b in zip(lam, weight_mu(W, chain, A)))
            if not W.rs.is_dominant(mu):
                raise ConventionError(f"non-dominant weight {mu} from dominant subset {A.J}")
            out[mu] += 1
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class FoldSequences:
    vs: tuple[FiniteWeylElement, ...]
    gammas: tuple[tuple[int, ...], ...]
    lams: tuple[tuple[int, ...], ...]


def build_fold_sequences(
    W: AffineWeylGroup, chain: LambdaChain, lam: Sequence[int], v: FiniteWeylElement, J: Sequence[int]
) -> FoldSequences:
    """Transport data ``(v_l, gamma_{i_l}, lam_l)`` of the folded walk from ``v A^-_lam``.

    ``gammas`` are roots in weight coordinates; the walk identity is checked at every fold.
    """
    rs = W.rs
    J = tuple(sorted(J))
    vs = [v]
    gammas: list[tuple[int, ...]] = []
    lams = [tuple(lam)]
    start = W.finite(v) * W.antitranslation(lam)
    walk = partial_products(W, chain, J, start)
    for i in J:
        prev = vs[-1]
        beta = chain.beta(i)
        beta_star = rs.star(rs.root_weight(beta))
        gamma = rs.star_elt(prev).act(beta_star)
        gammas.append(gamma)
        vs.append(rs.reflection(beta) * prev)
        N = chain.level(i)
        lams.append(tuple(a + N * b for a, b in zip(lams[-1], gamma)))
        lhs = walk[i - 1]
        e_prev = W.from_word(chain.word[: i - 1]) * W.finite(vs[-2]) * W.antitranslation(lams[-2])
        e_next = W.from_word(chain.word[:i]) * W.finite(vs[-1]) * W.antitranslation(lams[-1])
        if not (W.alcove_coords(lhs) == W.alcove_coords(e_prev) == W.alcove_coords(e_next)):
            raise ConventionError(f"transport identity fails at position {i}")
    return FoldSequences(tuple(vs), tuple(gammas), tuple(lams))
