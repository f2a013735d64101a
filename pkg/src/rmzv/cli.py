"""Command-line front end.

    rmzv eval -- -1 -1          exact gζ(-1,-1)
    rmzv eval 1 1               T-polynomial for gζ(1,1)
    rmzv table 4 4              grid of gζ(-s1,-s2)
    rmzv expand --s 0,0 --r auto
    rmzv check stuffle --max-depth 3 --max-weight 6

Exit codes: 0 ok, 1 a check failed, 2 argument outside the domain,
3 internal invariant violated (pole at d = 0).
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .birkhoff import phi_minus, phi_plus, phi_plus_closed
from .hopf import Direction, Word, quasi_shuffle, quasi_shuffle_exponents, stuffle_oracle
from .laurent import EmptyWindow, OutOfWindow, coeff_at, render
from .ratfunc import PoleAtZero, eval_at_delta_zero
from .renorm import (
    BoundExceeded,
    SymbolicValue,
    UnsupportedSignature,
    gzeta,
    gzeta_nonpos,
    gzeta_positive,
    numeric_value,
    symbolic_mul,
)
from .zreg import z_nonpos

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3

# table entries that are fixed independently of this code
TABLE_ANCHORS = {
    (1, 1): Fraction(1, 288),
    (1, 2): Fraction(-1, 240),
    (2, 1): Fraction(-1, 240),
    (1, 3): Fraction(83, 64512),
    (3, 1): Fraction(-71, 35840),
    (1, 4): Fraction(1, 504),
    (2, 2): Fraction(0),
    (4, 4): Fraction(0),
    (6, 6): Fraction(0),
    (3, 3): Fraction(1, 28800),
    (5, 5): Fraction(1, 127008),
    (7, 7): Fraction(1, 115200),
    (6, 5): Fraction(-691, 65520),
}


class DomainError(ValueError):
    pass


def rational_str(q) -> str:
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def _ints(text: str) -> List[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _direction(text: str) -> Direction:
    return Direction(Fraction(text))


def _render_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Ordered map, optionally across worker processes."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- eval ----------------------------------------------------------------------


def _parse_numeric(text: Optional[str]) -> Optional[float]:
    if text is None:
        return None
    name, _, value = text.partition("=")
    if name.strip() != "T" or not value:
        raise DomainError("--numeric expects T=<value>, got %r" % text)
    return float(value)


def cmd_eval(args) -> tuple:
    s = _gather_s(args)
    value = gzeta(s)
    t_value = _parse_numeric(args.numeric)
    result = {}
    if isinstance(value, SymbolicValue):
        result["exact"] = str(value)
        result["terms"] = value.to_json()
        if t_value is not None:
            result["numeric"] = numeric_value(value, t_value, args.tol)
            result["T"] = t_value
        text = str(value) if t_value is None else repr(result["numeric"])
    else:
        result["exact"] = rational_str(value)
        text = result["exact"]
        if t_value is not None:
            result["numeric"] = float(value)
            text = repr(result["numeric"])
    return {"s": s, "numeric": args.numeric, "tol": args.tol}, result, [], text


# -- table ---------------------------------------------------------------------


def _table_cell(ij):
    i, j = ij
    return rational_str(gzeta_nonpos((-i, -j)))


def cmd_table(args) -> tuple:
    n1, n2 = args.max_s1, args.max_s2
    if not (1 <= n1 <= 8 and 1 <= n2 <= 8):
        raise DomainError("table sizes must lie in 1..8")
    cells = [(i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1)]
    flat = _pmap(_table_cell, cells, args.jobs)
    entries = [flat[r * n2 : (r + 1) * n2] for r in range(n1)]
    result = {
        "rows": list(range(1, n1 + 1)),
        "columns": list(range(1, n2 + 1)),
        "entries": entries,
    }
    width = max(len(x) for x in flat)
    lines = ["s1\\s2 " + " ".join(str(j).rjust(width) for j in result["columns"])]
    for i, row in zip(result["rows"], entries):
        lines.append(str(i).ljust(6) + " ".join(x.rjust(width) for x in row))
    return {"max_s1": n1, "max_s2": n2}, result, [], "\n".join(lines)


# -- expand --------------------------------------------------------------------


def cmd_expand(args) -> tuple:
    s = _gather_s(args)
    if any(x > 0 for x in s):
        raise DomainError("expand needs all exponents <= 0")
    auto = args.r is None or args.r.strip() == "auto"
    if auto:
        word = Word.deformed(s)
    else:
        dirs = [_direction(x) for x in args.r.replace(",", " ").split()]
        if len(dirs) != len(s):
            raise DomainError("need one direction per exponent")
        word = Word.of(s, dirs)
    hi = args.order
    z = z_nonpos(word, hi)
    minus = phi_minus(word, hi)
    plus = phi_plus(word, max(hi, 0))
    result = {
        "word": str(word),
        "window": [z.lo, hi],
        "Z": render(z),
        "phi_minus": render(minus),
        "phi_plus": render(plus),
    }
    c0 = coeff_at(plus, 0)
    result["constant"] = str(c0)
    lines = [
        "word      %s" % (word,),
        "Z         %s" % result["Z"],
        "phi_minus %s" % result["phi_minus"],
        "phi_plus  %s" % result["phi_plus"],
        "e^0 of phi_plus: %s" % c0,
    ]
    if auto:
        limit = rational_str(eval_at_delta_zero(c0))
        result["limit"] = limit
        lines.append("d -> 0: %s" % limit)
    inp = {"s": s, "r": "auto" if auto else [str(d) for d in word.directions], "order": hi}
    return inp, result, [], "\n".join(lines)


# -- check suites ----------------------------------------------------------------


def _nonpos_words(max_depth: int, max_weight: int, low: int):
    for k in range(1, max_depth + 1):
        for w in itertools.product(range(low, 1), repeat=k):
            if -sum(w) <= max_weight:
                yield w


def _stuffle_instance(pair):
    a, b = pair
    lhs = gzeta_nonpos(a) * gzeta_nonpos(b)
    rhs = sum(c * gzeta_nonpos(w) for w, c in quasi_shuffle_exponents(a, b).items())
    return {
        "identity": "g%s * g%s = sum over stuffle" % (list(a), list(b)),
        "lhs": rational_str(lhs),
        "rhs": rational_str(rhs),
        "ok": lhs == rhs,
    }


def suite_stuffle(args) -> List[dict]:
    low = -min(args.max_weight, 4)
    words = list(_nonpos_words(args.max_depth - 1, args.max_weight, low))
    pairs = [
        (a, b)
        for a in words
        for b in words
        if len(a) + len(b) <= args.max_depth and -sum(a) - sum(b) <= args.max_weight
    ]
    return _pmap(_stuffle_instance, pairs, args.jobs)


def suite_table(args) -> List[dict]:
    out = []
    for (i, j), want in sorted(TABLE_ANCHORS.items()):
        got = gzeta_nonpos((-i, -j))
        out.append(
            {
                "identity": "g(%d,%d)" % (-i, -j),
                "lhs": rational_str(got),
                "rhs": rational_str(want),
                "ok": got == want,
            }
        )
    return out


def _random_nonpos_word(rng: random.Random, depth: int, max_weight: int) -> Word:
    while True:
        s = [-rng.randint(0, 3) for _ in range(depth)]
        if -sum(s) <= max_weight:
            break
    if rng.random() < 0.5:
        dirs = [Direction(-x, 1) for x in s]
    else:
        dirs = [Direction(rng.randint(1, 4)) for _ in s]
    return Word.of(s, dirs)


def suite_oracle(args) -> List[dict]:
    rng = random.Random(args.seed)
    out = []
    for n in range(args.instances):
        w = _random_nonpos_word(rng, rng.randint(1, args.max_depth), args.max_weight)
        ok = phi_plus(w, 0) == phi_plus_closed(w, 0)
        out.append({"identity": "phi_plus = closed form on %s" % (w,), "ok": ok})
    for n in range(args.instances):
        k = rng.randint(0, args.max_depth)
        l = rng.randint(0, max(0, min(args.max_depth, 6 - k)))
        a = Word.of([rng.randint(-3, 3) for _ in range(k)], [rng.randint(1, 4) for _ in range(k)])
        b = Word.of([rng.randint(-3, 3) for _ in range(l)], [rng.randint(1, 4) for _ in range(l)])
        ok = quasi_shuffle(a, b) == stuffle_oracle(a, b)
        out.append({"identity": "quasi_shuffle = stuffle_oracle on %s, %s" % (a, b), "ok": ok})
    return out


def _positive_words(max_depth: int, max_weight: int):
    for k in range(1, max_depth + 1):
        for w in itertools.product(range(1, max_weight + 1), repeat=k):
            if sum(w) <= max_weight:
                yield w


def suite_positive(args) -> List[dict]:
    words = list(_positive_words(args.max_depth - 1, args.max_weight))
    out = []
    for a in words:
        for b in words:
            if len(a) + len(b) > args.max_depth or sum(a) + sum(b) > args.max_weight:
                continue
            lhs = symbolic_mul(gzeta_positive(a), gzeta_positive(b))
            rhs = SymbolicValue()
            for w, c in quasi_shuffle_exponents(a, b).items():
                rhs = rhs + gzeta_positive(w) * c
            out.append(
                {
                    "identity": "g%s * g%s = sum over stuffle" % (list(a), list(b)),
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                    "ok": lhs == rhs,
                }
            )
    return out


SUITES = {
    "stuffle": suite_stuffle,
    "table": suite_table,
    "oracle": suite_oracle,
    "positive": suite_positive,
}


def cmd_check(args) -> tuple:
    checks = SUITES[args.suite](args)
    failed = sum(1 for c in checks if not c["ok"])
    result = {"suite": args.suite, "instances": len(checks), "failed": failed, "ok": failed == 0}
    lines = ["%s  %s" % ("PASS" if c["ok"] else "FAIL", c["identity"]) for c in checks]
    lines.append("%s: %d instances, %d failed" % (args.suite, len(checks), failed))
    inp = {
        "suite": args.suite,
        "max_depth": args.max_depth,
        "max_weight": args.max_weight,
    }
    return inp, result, checks, "\n".join(lines)


# -- plumbing --------------------------------------------------------------------


def _gather_s(args) -> List[int]:
    s: List[int] = []
    if getattr(args, "s", None):
        s.extend(_ints(args.s))
    s.extend(getattr(args, "args", None) or [])
    if not s:
        raise DomainError("no arguments given")
    return s


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rmzv", description="Renormalized multiple zeta values.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate gζ(s)")
    e.add_argument("args", nargs="*", type=int, help="arguments (put negatives after --)")
    e.add_argument("--s", help="comma-separated arguments")
    e.add_argument("--numeric", metavar="T=<v>", help="substitute floats, with T=<v>")
    e.add_argument("--tol", type=float, default=1e-10)
    e.set_defaults(fn=cmd_eval)

    t = sub.add_parser("table", parents=[common], help="grid of gζ(-s1,-s2)")
    t.add_argument("max_s1", type=int, nargs="?", default=8)
    t.add_argument("max_s2", type=int, nargs="?", default=7)
    t.set_defaults(fn=cmd_table)

    x = sub.add_parser("expand", parents=[common], help="dump Z, phi_- and phi_+")
    x.add_argument("args", nargs="*", type=int)
    x.add_argument("--s", help="comma-separated exponents <= 0")
    x.add_argument("--r", help="comma-separated rational directions, or 'auto' for |s|+d")
    x.add_argument("--order", type=int, default=2, help="highest e-power shown")
    x.set_defaults(fn=cmd_expand)

    c = sub.add_parser("check", parents=[common], help="run an identity suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--max-depth", type=int, default=3)
    c.add_argument("--max-weight", type=int, default=6)
    c.add_argument("--instances", type=int, default=50, help="random instances (oracle suite)")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(fn=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        inp, result, checks, text = args.fn(args)
    except (UnsupportedSignature, BoundExceeded, DomainError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    except (EmptyWindow, OutOfWindow) as exc:
        print("error: window too small: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    except PoleAtZero as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        doc = {"command": args.command, "input": inp, "result": result, "checks": checks}
        print(_render_json(doc))
    else:
        print(text)
    if args.command == "check" and not result["ok"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
