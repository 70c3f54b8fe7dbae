"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on
invalid input (bad flags, unparsable files or expressions, violated
preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from .cauchon import restore_generators, verify_embedding, verify_normalT
from .minors import MinorIndex, quantum_minor
from .pbw import MatElement, Shape, q_normal_check
from .polyparse import ParseError, format_poly, parse_poly
from .scalars import VerificationError
from .serialize import DocumentError, laurent_to_json, loads, to_document
from .spectrum import build_u, height_one_catalog, spectrum_report, stratum_dim
from .torus import center_basis, v2
from .verify import SUITES, run_suite


class InputError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _read_element(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _ratio_json(r) -> dict:
    return {"num": laurent_to_json(r.num), "den": laurent_to_json(r.den), "text": repr(r)}


# -- subcommands -----------------------------------------------------------

def cmd_primitivity(args) -> None:
    rep = spectrum_report(args.m, args.n, args.method)
    if args.json:
        _emit(rep.as_dict())
        return
    print(f"shape: ({args.m},{args.n})")
    print(f"v2(m): {rep.v2m}  v2(n): {rep.v2n}")
    if rep.d is not None:
        print(f"d: {rep.d}  m': {rep.m_prime}  n': {rep.n_prime}")
    print(f"stratum dimension: {rep.alpha}")
    print(f"primitive: {str(rep.primitive).lower()}")
    print(f"methods agree: {str(rep.methods_agree).lower()}")


def cmd_stratum_dim(args) -> None:
    print(stratum_dim(args.m, args.n))


def cmd_b_gens(args) -> None:
    cat = height_one_catalog(args.m, args.n, expand=args.expand)
    out = {
        "m": args.m, "n": args.n, "complete": cat.complete,
        "d": cat.d, "m_prime": cat.m_prime, "n_prime": cat.n_prime,
        "generators": [],
    }
    for k, idx in enumerate(cat.indices, start=1):
        entry = {"i": k, "rows": list(idx.rows), "cols": list(idx.cols)}
        if args.expand:
            entry["element"] = to_document(cat.generators[k - 1])
        out["generators"].append(entry)
    if not cat.complete:
        out["note"] = "plus the infinite family of 0-stratum primes <u(V)>, V irreducible in d variables"
    _emit(out)


def cmd_minor(args) -> None:
    shape = Shape(args.m, args.n)
    try:
        idx = MinorIndex(_int_list(args.rows), _int_list(args.cols))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(to_document(quantum_minor(shape, idx)))


def cmd_mul(args) -> None:
    a, b = _read_element(args.lhs), _read_element(args.rhs)
    if type(a) is not type(b):
        raise InputError("both operands must have the same kind")
    _emit(to_document(a * b))


def cmd_normal_check(args) -> None:
    x = _read_element(args.inp)
    if not isinstance(x, MatElement):
        raise InputError("normal-check needs a pbw element")
    if x.is_zero():
        raise InputError("the zero element is not considered")
    ratios = q_normal_check(x)
    if ratios is None:
        print("not q-normal")
        raise CheckFailed("element failed the per-generator single-ratio test")
    _emit({"q_normal": True, "ratios": [
        {"generator": [i, a], "ratio": _ratio_json(r)}
        for (i, a), r in zip(x.shape.generators(), ratios)]})


def cmd_restore(args) -> None:
    shape = Shape(args.m, args.n)
    gens = restore_generators(shape)
    out = {"m": args.m, "n": args.n, "generators": [
        {"generator": [i, a], "element": to_document(gens[(i, a)])}
        for i, a in shape.generators()]}
    if args.verify:
        emb, nt = verify_embedding(shape), verify_normalT(shape)
        out["embedding"], out["normalT"] = emb, nt
        _emit(out)
        if not (emb and nt):
            raise CheckFailed("restoration checks failed")
        return
    _emit(out)


def cmd_center(args) -> None:
    basis = center_basis(Shape(args.m, args.n))
    _emit({"m": args.m, "n": args.n, "d": basis.d,
           "vectors": [list(v) for v in basis.vectors],
           "certificate": "ker(B^T) membership, count = stratum dimension, minor gcd 1"})


def cmd_hprime(args) -> None:
    m, n = args.m, args.n
    if v2(m) != v2(n):
        raise InputError(f"({m},{n}) has v2(m) != v2(n): only the {m + n - 1} primes <b_i> exist")
    d = gcd(m, n)
    try:
        V = parse_poly(args.poly, d)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    u = build_u(m, n, V, verify=False)
    ratios = q_normal_check(u)
    _emit({"V": format_poly(V), "u": to_document(u), "q_normal": ratios is not None,
           "ratios": [_ratio_json(r) for r in ratios] if ratios else None})
    if ratios is None:
        raise CheckFailed("u failed the q-normality check")


def cmd_verify(args) -> None:
    results = run_suite(args.suite, args.max_size)
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} cases passed")
    if failed:
        raise CheckFailed(f"{failed} verification cases failed")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quantmat",
                                description="Exact computations in quantum matrices O_q(M_{m,n}).")
    sub = p.add_subparsers(dest="command", required=True)

    def shape_cmd(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.set_defaults(func=fn)
        return sp

    sp = shape_cmd("primitivity", cmd_primitivity, "is O_q(M_{m,n}) primitive")
    sp.add_argument("--method", choices=["formula", "rank", "both"], default="both")
    sp.add_argument("--json", action="store_true")
    shape_cmd("stratum-dim", cmd_stratum_dim, "dimension of the 0-stratum")
    sp = shape_cmd("b-gens", cmd_b_gens, "H-invariant height-one prime generators b_i")
    sp.add_argument("--expand", action="store_true")
    sp = shape_cmd("minor", cmd_minor, "expand a quantum minor")
    sp.add_argument("--rows", required=True)
    sp.add_argument("--cols", required=True)
    sp = sub.add_parser("mul", help="multiply two element documents")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.set_defaults(func=cmd_mul)
    sp = sub.add_parser("normal-check", help="per-generator q-normality ratios")
    sp.add_argument("--in", dest="inp", required=True)
    sp.set_defaults(func=cmd_normal_check)
    sp = shape_cmd("restore", cmd_restore, "generators Y written in the quantum torus")
    sp.add_argument("--verify", action="store_true")
    shape_cmd("center", cmd_center, "exponents of the central Delta_j")
    sp = shape_cmd("hprime", cmd_hprime, "normal generator u of a 0-stratum height-one prime")
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("verify", help="run invariant suites")
    sp.add_argument("--suite", choices=["all", *SUITES], default="all")
    sp.add_argument("--max-size", type=int, default=12)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        args.func(args)
    except CheckFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (InputError, DocumentError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
