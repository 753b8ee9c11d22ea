"""Command-line front end.

Exit codes: 0 on success, 1 when a requested verification fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .affine_weyl import AffineWeylGroup
from .alcove_model import (
    admissible_from_indices,
    enumerate_admissible,
    is_antidominant,
    is_dominant,
    is_maximal,
    tensor_multiplicities,
    weight_mu,
)
from .char_oracle import tensor_decompose
from .errors import AffHeckeError, ConfigurationError, DomainError
from .hecke import degree_bound, max_degree_subsets, product_standard
from .lambda_chain import build_lambda_chain
from .ls_paths import endpoint, is_LS, path_from_admissible, to_svg
from .root_system import build_root_system

SCHEMA = 1


class UsageError(Exception):
    pass


def _vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(",") if c.strip() != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _group(args) -> AffineWeylGroup:
    weights = _vec(args.weights) if args.weights else None
    return AffineWeylGroup(build_root_system(args.type), weights)


def _order(args, d: int):
    if not args.root_order:
        return None
    order = tuple(int(c) - 1 for c in args.root_order.split(","))
    if sorted(order) != list(range(d)):
        raise UsageError(f"--root-order must be a permutation of 1..{d}")
    return order


def _weight(W: AffineWeylGroup, text: str, what: str) -> tuple[int, ...]:
    v = _vec(text)
    if len(v) != W.rank:
        raise UsageError(f"{what} needs {W.rank} coordinates")
    return v


def _word(rs, u) -> str:
    return " ".join(str(j + 1) for j in rs.reduced_word(u))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")


def _chain(W, args):
    tau = _weight(W, args.tau, "--tau")
    return build_lambda_chain(W, tau, _order(args, W.rank))


def cmd_chain(args) -> int:
    W = _group(args)
    rs = W.rs
    ch = _chain(W, args)
    rows = [
        {"i": i, "beta": rs.format_root(rs.positive_roots[H.root]), "level": H.level, "s": f"t{s + 1}"}
        for i, (H, s) in enumerate(zip(ch.hyperplanes, ch.word), 1)
    ]
    word = "".join(f"t{s + 1}" for s in reversed(ch.word))
    if args.format == "json":
        _emit({"schema": SCHEMA, "type": rs.label, "tau": list(ch.tau), "rows": rows,
               "word": word, "pi_part": W.format(ch.pi_part)})
    else:
        print("i\tbeta\tN\ts")
        for r in rows:
            print(f"{r['i']}\t{r['beta']}\t{r['level']}\t{r['s']}")
    return 0


def cmd_admissible(args) -> int:
    W = _group(args)
    rs = W.rs
    ch = _chain(W, args)
    lam = _weight(W, args.lam, "--lambda") if args.lam else None
    rows = []
    for A in enumerate_admissible(W, ch):
        row = {
            "J": list(A.J),
            "chain": [_word(rs, s) for s in A.sigmas],
            "v_J": _word(rs, A.v),
            "mu_J": list(weight_mu(W, ch, A)),
            "maximal": is_maximal(W, ch, A.J),
        }
        if lam is not None:
            row["dominant"] = is_dominant(W, ch, A, lam)
        rows.append(row)
    _emit({"schema": SCHEMA, "type": rs.label, "tau": list(ch.tau), "count": len(rows), "subsets": rows})
    return 0


def _print_decomposition(d: dict) -> None:
    for mu, m in sorted(d.items()):
        print(f"{','.join(map(str, mu))} {m}")


def cmd_tensor(args) -> int:
    W = AffineWeylGroup(build_root_system(args.type))
    tau = _weight(W, args.tau, "--tau")
    lam = _weight(W, args.lam, "--lambda")
    model = tensor_multiplicities(W, tau, lam, _order(args, W.rank))
    _print_decomposition(model)
    if args.oracle:
        oracle = tensor_decompose(W.rs, tau, lam)
        diff = sorted(set(model) | set(oracle))
        bad = [(mu, model.get(mu, 0), oracle.get(mu, 0)) for mu in diff if model.get(mu, 0) != oracle.get(mu, 0)]
        for mu, a, b in bad:
            print(f"DIFF {','.join(map(str, mu))} model={a} oracle={b}")
        return 1 if bad else 0
    return 0


def cmd_oracle(args) -> int:
    rs = build_root_system(args.type)
    tau, lam = _vec(args.tau), _vec(args.lam)
    if len(tau) != rs.rank or len(lam) != rs.rank:
        raise UsageError(f"weights need {rs.rank} coordinates")
    _print_decomposition(tensor_decompose(rs, tau, lam))
    return 0


def cmd_hecke(args) -> int:
    W = _group(args)
    x, y = W.parse(args.x), W.parse(args.y)
    prod = product_standard(W, x, y)
    rows = sorted(((W.format(z), c) for z, c in prod.items()), key=lambda r: r[0])
    if args.max_degree_only and rows:
        top = max(c.degree() for _, c in rows)
        rows = [(z, c) for z, c in rows if c.degree() == top]
    for z, c in rows:
        print(f"{z}\t{c}")
    if args.check_bound:
        bound = degree_bound(W, x, y)
        worst = max((c.degree() for _, c in prod.items()), default=0)
        print(f"bound {bound} max-degree {worst}")
        return 0 if worst <= bound else 1
    return 0


def cmd_verify_main(args) -> int:
    W = _group(args)
    rs = W.rs
    ch = _chain(W, args)
    if args.lambda_neg is not None:
        lam = tuple(-c for c in _weight(W, args.lambda_neg, "--lambda-neg"))
    else:
        lam = _weight(W, args.lam, "--lambda")
    if any(c > 0 for c in lam):
        raise UsageError(f"{lam} is not antidominant")
    adm = enumerate_admissible(W, ch)
    failures = 0
    for v in rs.weyl_group:
        lhs = max_degree_subsets(W, ch, v, lam)
        rhs = {A.J for A in adm if A.v == v and is_antidominant(W, ch, A, lam) and is_maximal(W, ch, A.J)}
        ok = lhs == rhs
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} v=[{_word(rs, v)}] subsets={len(lhs)}")
        if not ok:
            print(json.dumps({"tau": list(ch.tau), "lambda": list(lam), "v": _word(rs, v),
                              "hecke_only": sorted(map(list, lhs - rhs)),
                              "model_only": sorted(map(list, rhs - lhs))}, sort_keys=True))
    return 1 if failures else 0


def cmd_lspath(args) -> int:
    W = AffineWeylGroup(build_root_system(args.type))
    rs = W.rs
    ch = _chain(W, args)
    subsets = enumerate_admissible(W, ch)
    if args.subset is not None:
        A = admissible_from_indices(W, ch, _vec(args.subset))
        if A is None:
            raise UsageError(f"{args.subset} is not admissible")
        subsets = [A]
    paths = [path_from_admissible(W, ch, A) for A in subsets]
    rows = [
        {"J": list(A.J), "sigmas": [_word(rs, s) for s in p.sigmas],
         "breaks": [str(b) for b in p.breaks],
         "endpoint": list(endpoint(p)), "ls": is_LS(rs, p) is not None}
        for A, p in zip(subsets, paths)
    ]
    _emit({"schema": SCHEMA, "type": rs.label, "tau": list(ch.tau), "paths": rows})
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(to_svg(rs, paths))
    return 0 if all(r["ls"] for r in rows) else 1


GOLDEN_G2_SUBSETS = [
    (), (10,), (9, 10), (5, 10), (2, 10), (8, 9, 10), (3, 9, 10), (3, 5, 10),
    (7, 8, 9, 10), (4, 8, 9, 10), (1, 8, 9, 10), (1, 3, 9, 10), (1, 3, 5, 10), (6, 7, 8, 9, 10),
]
GOLDEN_G2_WORD = "t2t1t2t1t2t3t1t2t1t3"


def golden_g2() -> dict:
    """Recompute the pinned G2 data for the fundamental weight of the long simple root."""
    W = AffineWeylGroup("G2")
    rs = W.rs
    ch = build_lambda_chain(W, (0, 1))
    word = "".join(f"t{s + 1}" for s in reversed(ch.word))
    found = sorted((A.J for A in enumerate_admissible(W, ch)), key=lambda J: (len(J), J))
    A = admissible_from_indices(W, ch, (3, 5, 10))
    path = path_from_admissible(W, ch, A)
    a_col = [str(b) for b in path.breaks[: len(A.J) + 1]]
    n_col = [ch.level(i) for i in A.J]
    gamma = [rs.format_root(rs.positive_roots[k]) for k in is_LS(rs, path)]
    tau_col = [rs.format_weight(s.act(ch.tau)) for s in A.sigmas]
    checks = {
        "word": word == GOLDEN_G2_WORD,
        "subsets": set(found) == set(GOLDEN_G2_SUBSETS) and len(found) == 14,
        "a": a_col == ["0", "1/2", "2/3", "1"],
        "N": n_col == [1, 2, 1],
        "gamma": gamma == ["a2", "a1", "a2"],
        "tau_k": tau_col == ["3,-2", "-3,2", "3,-1", "0,1"],
    }
    return {"word": word, "subsets": [list(J) for J in found], "a": a_col, "N": n_col,
            "gamma": gamma, "tau_k": tau_col, "checks": checks}


def cmd_golden(args) -> int:
    if args.case != "g2-14":
        raise UsageError(f"unknown golden case {args.case!r}")
    out = golden_g2()
    _emit({"schema": SCHEMA, **out})
    return 0 if all(out["checks"].values()) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affhecke", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, weights=True, tau=True):
        sp.add_argument("--type", required=True, help="Cartan type such as A2, B2, G2")
        if weights:
            sp.add_argument("--weights", help="L(t1),...,L(t(d+1)); default all 1")
        if tau:
            sp.add_argument("--tau", required=True, help="dominant weight, fundamental-weight coordinates")
            sp.add_argument("--root-order", help="permutation of 1..d used by the hyperplane order")

    sp = sub.add_parser("chain", help="reduced word of p_tau with crossed hyperplanes")
    common(sp)
    sp.add_argument("--format", choices=["tsv", "json"], default="tsv")
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("admissible", help="admissible subsets of the chain")
    common(sp)
    sp.add_argument("--lambda", dest="lam", help="dominant weight for the dominance column")
    sp.set_defaults(func=cmd_admissible)

    sp = sub.add_parser("tensor", help="tensor product multiplicities from dominant subsets")
    common(sp, weights=False)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--oracle", action="store_true", help="diff against the character oracle")
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("oracle", help="tensor product multiplicities from characters")
    common(sp, weights=False)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("hecke", help="standard-basis product T_x T_y")
    common(sp, tau=False)
    sp.add_argument("--x", required=True, help="element literal p[c1,..]*w[i j ...]")
    sp.add_argument("--y", required=True)
    sp.add_argument("--max-degree-only", action="store_true")
    sp.add_argument("--check-bound", action="store_true")
    sp.set_defaults(func=cmd_hecke)

    sp = sub.add_parser("verify-main", help="compare maximal-degree subsets with the admissible model")
    common(sp)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="lam", help="antidominant weight")
    g.add_argument("--lambda-neg", help="coordinates of -lambda (dominant)")
    sp.set_defaults(func=cmd_verify_main)

    sp = sub.add_parser("lspath", help="paths of the admissible subsets")
    common(sp, weights=False)
    sp.add_argument("--subset", help="comma-separated indices of one subset")
    sp.add_argument("--svg", help="write a rank-2 picture to this file")
    sp.set_defaults(func=cmd_lspath)

    sp = sub.add_parser("golden", help="recompute pinned reference data")
    sp.add_argument("--case", default="g2-14")
    sp.set_defaults(func=cmd_golden)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AffHeckeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
