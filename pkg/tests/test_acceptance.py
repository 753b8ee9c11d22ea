"""End-to-end acceptance checks, one test per criterion, each printing a PASS/FAIL line."""
import random
import time
from collections import Counter
from fractions import Fraction

from affhecke.affine_weyl import AffineWeylGroup
from affhecke.alcove_model import (
    admissible_from_indices,
    build_fold_sequences,
    dagger,
    enumerate_admissible,
    fold,
    gallery_J,
    gallery_from_word,
    gallery_minus_tau,
    is_antidominant,
    is_dominant,
    is_maximal,
    sharp,
    tail_flip,
    tensor_multiplicities,
    weight_mu,
)
from affhecke.char_oracle import tensor_decompose, weyl_dim
from affhecke.hecke import aggregate, degree_bound, firstbound, max_degree_subsets, product_standard, subsets_I
from affhecke.lambda_chain import build_lambda_chain
from affhecke.ls_paths import endpoint, is_LS, is_dominant_path, path_from_admissible
from affhecke.root_system import weight_grid

G2_SUBSETS = {
    (), (10,), (9, 10), (5, 10), (2, 10), (8, 9, 10), (3, 9, 10), (3, 5, 10),
    (7, 8, 9, 10), (4, 8, 9, 10), (1, 8, 9, 10), (1, 3, 9, 10), (1, 3, 5, 10), (6, 7, 8, 9, 10),
}


def announce(capsys, number, title, failures, elapsed, limit):
    ok = not failures and elapsed < limit
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.1f}s, limit {limit}s)")
        for f in failures[:5]:
            print(f"    {f}")


def report(capsys, number, title, failures, elapsed, limit):
    announce(capsys, number, title, failures, elapsed, limit)
    assert not failures, failures[:5]
    assert elapsed < limit


def test_criterion_1_g2_golden(capsys):
    t0 = time.perf_counter()
    failures = []
    W = AffineWeylGroup("G2")
    rs = W.rs
    ch = build_lambda_chain(W, (0, 1))
    word = "".join(f"t{s + 1}" for s in reversed(ch.word))
    if ch.n != 10 or word != "t2t1t2t1t2t3t1t2t1t3":
        failures.append(f"word {word}")
    found = [A.J for A in enumerate_admissible(W, ch)]
    if set(found) != G2_SUBSETS or len(found) != 14:
        failures.append(f"subsets {sorted(found)}")
    A = admissible_from_indices(W, ch, (3, 5, 10))
    path = path_from_admissible(W, ch, A)
    if path.breaks[: A.size + 1] != (0, Fraction(1, 2), Fraction(2, 3), 1):
        failures.append(f"fold times {path.breaks}")
    if [ch.level(i) for i in A.J] != [1, 2, 1]:
        failures.append("N column")
    delta6, delta1 = (0, 1), (1, 0)
    gamma = [rs.positive_roots[k] for k in is_LS(rs, path) or []]
    if gamma != [delta6, delta1, delta6]:
        failures.append(f"gamma column {gamma}")
    tau_col = [s.act(ch.tau) for s in A.sigmas]
    expected = [
        tuple(-c for c in rs.root_to_weight(delta6)),
        rs.root_to_weight(delta6),
        rs.root_to_weight((3, 1)),
        rs.root_to_weight((3, 2)),
    ]
    if tau_col != expected:
        failures.append(f"tau_k column {tau_col}")
    report(capsys, 1, "G2 golden reproduction", failures, time.perf_counter() - t0, 1)


MAIN_CASES = [
    ("A2", None), ("B2", None), ("B2", (1, 2, 1)), ("C2", None), ("C2", (2, 1, 1)), ("G2", None), ("G2", (1, 2, 1)),
]


def test_criterion_2_max_degree_subsets(capsys):
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for label, weights in MAIN_CASES:
        W = AffineWeylGroup(label, weights)
        taus = [t for t in weight_grid(W.rank, 0, 1) if W.in_P(t)]
        if label == "G2" and (0, 1) not in taus:
            taus.append((0, 1))
        for tau in taus:
            ch = build_lambda_chain(W, tau)
            adm = enumerate_admissible(W, ch)
            for lam in weight_grid(W.rank, -2, 0):
                if not W.in_P(lam):
                    continue
                for v in W.rs.weyl_group:
                    lhs = max_degree_subsets(W, ch, v, lam)
                    rhs = {A.J for A in adm if A.v == v and is_antidominant(W, ch, A, lam) and is_maximal(W, ch, A.J)}
                    checked += 1
                    if lhs != rhs:
                        failures.append((label, weights, tau, lam, v, lhs, rhs))
    assert checked > 0
    report(capsys, 2, f"maximal-degree subsets = admissible model ({checked} cases)", failures,
           time.perf_counter() - t0, 300)


def character_grid():
    for label in ["A1", "A2", "B2", "G2"]:
        W = AffineWeylGroup(label)
        for tau in weight_grid(W.rank, 0, 2):
            yield W, tau


def test_criterion_3_character_identity(capsys):
    t0 = time.perf_counter()
    failures = []
    pairs = 0
    for W, tau in character_grid():
        rs = W.rs
        ch = build_lambda_chain(W, tau)
        adm = enumerate_admissible(W, ch)
        paths = [path_from_admissible(W, ch, A) for A in adm]
        for lam in weight_grid(W.rank, 0, 2):
            pairs += 1
            model = tensor_multiplicities(W, tau, lam)
            oracle = tensor_decompose(rs, tau, lam)
            ls = Counter(tuple(a + b for a, b in zip(lam, endpoint(p))) for p in paths if is_dominant_path(rs, p, lam))
            if not model == oracle == dict(ls):
                failures.append((rs.label, tau, lam, model, oracle, dict(ls)))
            total = sum(m * weyl_dim(rs, mu) for mu, m in model.items())
            if total != weyl_dim(rs, tau) * weyl_dim(rs, lam):
                failures.append((rs.label, tau, lam, "dimension", total))
    report(capsys, 3, f"tensor multiplicities: model = oracle = LS count ({pairs} pairs)", failures,
           time.perf_counter() - t0, 300)


PRODUCT_CASES = [("A2", None), ("A2", (2, 2, 2)), ("B2", None), ("B2", (1, 2, 1))]


def _products():
    for label, weights in PRODUCT_CASES:
        W = AffineWeylGroup(label, weights)
        ball = list(W.ball(5))
        for x in ball:
            a, word = W.reduced_word(x)
            for y in ball:
                yield W, x, a, word, y


def test_criterion_4_and_5_products_and_bounds(capsys):
    t0 = time.perf_counter()
    formula, bounds = [], []
    count = 0
    minimal_cache = {}
    for W, x, a, word, y in _products():
        count += 1
        prod = product_standard(W, x, y)
        if prod != aggregate(subsets_I(W, word, y, a)):
            formula.append((W.rs.label, W.weights, W.format(x), W.format(y)))
        top = max(c.degree() for _, c in prod.items())
        if top > degree_bound(W, x, y):
            bounds.append(("bound", W.rs.label, W.weights, W.format(x), W.format(y)))
        key = (id(W), x)
        if key not in minimal_cache:
            minimal_cache[key] = W.coset_decompose(x)[0][1] == W.identity
        if minimal_cache[key] and top > firstbound(W, y):
            bounds.append(("firstbound", W.rs.label, W.weights, W.format(x), W.format(y)))
    elapsed = time.perf_counter() - t0
    announce(capsys, 4, f"standard product = subset expansion ({count} pairs)", formula, elapsed, 120)
    announce(capsys, 5, f"degree bounds ({count} pairs)", bounds, elapsed, 120)
    assert not formula, formula[:5]
    assert not bounds, bounds[:5]
    assert elapsed < 120


def test_criterion_6_structural_suite(capsys):
    t0 = time.perf_counter()
    failures = []

    W = AffineWeylGroup("B2")
    rng = random.Random(20260101)
    for _ in range(10_000):
        word = [rng.randrange(3) for _ in range(rng.randint(1, 10))]
        start = W.translation((rng.randint(-2, 2), rng.randint(-2, 2)))
        g = gallery_from_word(W, word, start)
        j, k = rng.randint(1, len(g)), rng.randint(1, len(g))
        if tail_flip(W, tail_flip(W, g, k), k) != g:
            failures.append(("flip involution", word, k))
        if tail_flip(W, tail_flip(W, g, j), k) != tail_flip(W, tail_flip(W, g, k), j):
            failures.append(("flip commutation", word, j, k))
        if sharp(W, sharp(W, g)) != g:
            failures.append(("sharp involution", word))

    G2 = AffineWeylGroup("G2")
    ch = build_lambda_chain(G2, (0, 1))
    minus = gallery_minus_tau(G2, ch)
    for A in enumerate_admissible(G2, ch):
        lhs = sharp(G2, fold(G2, gallery_J(G2, ch, A), A.J))
        rhs = fold(G2, minus, dagger(A.J, ch.n))
        if lhs.alcoves != rhs.alcoves or lhs.weight != rhs.weight:
            failures.append(("folded gallery", A.J))
        build_fold_sequences(G2, ch, (0, 0), A.v, A.J)

    for W, tau in character_grid():
        rs = W.rs
        ch = build_lambda_chain(W, tau)
        adm = enumerate_admissible(W, ch)
        if len(adm) != weyl_dim(rs, tau):
            failures.append(("count", rs.label, tau, len(adm)))
        for A in adm:
            weight_mu(W, ch, A)  # raises on disagreement
            path = path_from_admissible(W, ch, A)
            if is_LS(rs, path) is None:
                failures.append(("LS", rs.label, tau, A.J))
            if rs.label == "A1":
                continue
            for lam in weight_grid(W.rank, 0, 2):
                if is_dominant(W, ch, A, lam) != is_dominant_path(rs, path, lam):
                    failures.append(("dominance", rs.label, tau, A.J, lam))
    report(capsys, 6, "structural property suite", failures, time.perf_counter() - t0, 120)
