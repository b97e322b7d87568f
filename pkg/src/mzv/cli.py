"""Command-line front end: evaluate, shuffle, verify, orbits, relations.

Exit codes: 0 all checks passed, 1 a mathematical check failed or was
numerically unstable, 2 usage or parse error.  Every command can emit a
JSON report with --json; long sweeps stream one JSON line per instance
before the final report.  The default precision is 100 digits, or the
MZV_DEFAULT_DIGITS environment variable when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from mpmath import mp, mpf

from .evaluate import (
    InsertionVector,
    PrecisionContext,
    insertion_vectors,
    zeta,
    cyclic_sum_residual,
    dressed_residual,
    insertion_swap_residual,
    zagier_residual,
)
from .identities import (
    ab_power_shuffle,
    dressed_factorial_identity,
    dressed_shuffle_identity,
    euler_decomposition,
    orbit_count,
    signed_binomial_sum,
    zagier_factorial_identity,
    zagier_shuffle_identity,
)
from .relations import PrecisionError, build_family, default_scan_context, relation_scan
from .words import (
    AdmissibilityError,
    Composition,
    Word,
    admissible_compositions,
    shuffle_words,
)

PASS = "pass"
FAIL = "fail"


@dataclass
class RunReport:
    command: str
    inputs: dict
    status: str
    data: object
    residuals: list = field(default_factory=list)  # (instance, decimal-string) pairs
    digits: int = 0
    elapsed_ms: int = 0

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "status": self.status,
                "data": self.data,
                "residuals": [[k, v] for k, v in self.residuals],
                "digits": self.digits,
                "elapsed_ms": self.elapsed_ms,
            }
        )


def _default_digits() -> int:
    return int(os.environ.get("MZV_DEFAULT_DIGITS", "100"))


def _fmt_residual(r) -> str:
    with mp.workdps(15):
        return mp.nstr(mpf(r), 3)


def _threshold(digits: int) -> mpf:
    return mpf(10) ** (-(digits - 10))


def parse_word(text: str) -> Word:
    """Parse a word with power shorthand: 'AABB', '(AB)^3', 'A^2B^2'."""
    text = text.strip()
    pos = 0

    def parse_seq(nested: bool) -> str:
        nonlocal pos
        out = []
        while pos < len(text):
            ch = text[pos]
            if ch in "AB":
                unit = ch
                pos += 1
            elif ch == "(":
                pos += 1
                unit = parse_seq(nested=True)
                if pos >= len(text) or text[pos] != ")":
                    raise ValueError(f"unbalanced parenthesis in word {text!r}")
                pos += 1
            elif ch == ")" and nested:
                break
            else:
                raise ValueError(f"unexpected character {ch!r} in word {text!r}")
            if pos < len(text) and text[pos] == "^":
                pos += 1
                start = pos
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                if start == pos:
                    raise ValueError(f"missing exponent in word {text!r}")
                unit = unit * int(text[start:pos])
            out.append(unit)
        return "".join(out)

    letters = parse_seq(nested=False)
    if pos != len(text):
        raise ValueError(f"trailing characters in word {text!r}")
    return Word(letters)


def parse_composition(text: str) -> Composition:
    try:
        return Composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse composition {text!r}: {exc}") from None


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse vector {text!r}: expected comma-separated integers")


def parse_range(text: str) -> list[int]:
    """'1..4' as an inclusive range, '3' as a singleton."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _emit(report: RunReport, args, lines: list[str]) -> int:
    if args.json:
        print(report.to_json_line())
    else:
        for line in lines:
            print(line)
    return 0 if report.status in (PASS, "found", "none") else 1


def _residual_report(command, inputs, pairs, digits, started, args, extra_data=None):
    """Build a pass/fail report from (instance, mpf residual) pairs."""
    limit = _threshold(digits)
    status = PASS if all(r < limit for _, r in pairs) else FAIL
    report = RunReport(
        command=command,
        inputs=inputs,
        status=status,
        data=extra_data,
        residuals=[(k, _fmt_residual(r)) for k, r in pairs],
        digits=digits,
        elapsed_ms=int((time.monotonic() - started) * 1000),
    )
    lines = [f"{k}: residual {_fmt_residual(r)}" for k, r in pairs]
    lines.append(f"{command}: {status} ({len(pairs)} instance(s) at {digits} digits)")
    return report, lines


def cmd_eval(args) -> int:
    started = time.monotonic()
    comp = parse_composition(args.composition)
    ctx = PrecisionContext(args.digits)
    value = zeta(comp, ctx)
    text = value.to_str(args.digits)
    report = RunReport(
        command="eval",
        inputs={"composition": str(comp), "digits": args.digits},
        status=PASS,
        data={"value": text},
        digits=args.digits,
        elapsed_ms=int((time.monotonic() - started) * 1000),
    )
    return _emit(report, args, [text])


def cmd_shuffle(args) -> int:
    started = time.monotonic()
    left = parse_word(args.left)
    right = parse_word(args.right)
    poly = shuffle_words(left, right)
    lines = [str(poly)]
    data = {"polynomial": poly.to_json()}
    if args.as_zeta:
        combo = poly.as_zeta_combination()
        zeta_text = " + ".join(f"{c}*zeta({comp})" for c, comp in combo)
        lines.append(zeta_text)
        data["zeta"] = [[str(c), list(comp.parts)] for c, comp in combo]
    report = RunReport(
        command="shuffle",
        inputs={"left": left.letters, "right": right.letters},
        status=PASS,
        data=data,
        elapsed_ms=int((time.monotonic() - started) * 1000),
    )
    return _emit(report, args, lines)


def _exact_pairs(pairs) -> list:
    """Exact checks as residual pairs: 0 for equal, 1 for mismatch."""
    return [(label, mpf(0) if ok else mpf(1)) for label, ok in pairs]


def _verify_zagier(args, ctx):
    return [(f"n={n}", zagier_residual(n, ctx).value) for n in parse_range(args.n)]


def _verify_dressed(args, ctx):
    return [(f"n={n}", dressed_residual(n, ctx).value) for n in parse_range(args.n)]


def _cyclic_instances(max_weight: int):
    for n in range(0, max_weight // 4 + 1):
        for total in range((max_weight - 4 * n) // 2 + 1):
            yield from insertion_vectors(n, total)


def _verify_cyclic(args, ctx):
    if args.vector is None and not getattr(args, "all", False):
        raise ValueError("cyclic needs --vector m0,m1,... or --all")
    if args.vector is not None:
        vectors = [InsertionVector(parse_vector(args.vector))]
    else:
        vectors = list(_cyclic_instances(args.max_weight))
    pairs = []
    for vec in vectors:
        res = cyclic_sum_residual(vec, ctx).value
        pairs.append((str(vec), res))
        if args.vector is None:
            _stream(args, str(vec), res)
    return pairs

def _verify_swap(args, ctx):
    if args.vector is None:
        raise ValueError("swap needs --vector a1,a2,a3,b1,b2")
    entries = parse_vector(args.vector)
    if len(entries) != 5:
        raise ValueError("swap vectors have exactly five entries a1,a2,a3,b1,b2")
    res = insertion_swap_residual(*entries, ctx).value
    return [(",".join(map(str, entries)), res)]


def _verify_lemmas(args, ctx):
    top = args.n_max
    even = all(lhs == rhs for lhs, rhs in map(zagier_factorial_identity, range(top + 1)))
    odd = all(lhs == rhs for lhs, rhs in map(dressed_factorial_identity, range(top + 1)))
    delta = all(signed_binomial_sum(n) == (1 if n == 0 else 0) for n in range(top + 1))
    return _exact_pairs(
        [
            (f"zagier-factorial n<={top}", even),
            (f"dressed-factorial n<={top}", odd),
            (f"binomial-delta n<={top}", delta),
        ]
    )


def _verify_powers(args, ctx):
    ab = Word("AB")
    pairs = []
    for total in range(args.max_blocks + 1):
        for p in range(total + 1):
            q = total - p
            ok = ab_power_shuffle(p, q) == shuffle_words(ab.repeat(p), ab.repeat(q))
            pairs.append((f"p={p},q={q}", ok))
    return _exact_pairs(pairs)


def _verify_symbolic(args, ctx):
    pairs = []
    for n in range(args.n_max + 1):
        lhs, rhs = zagier_shuffle_identity(n)
        pairs.append((f"zagier-words n={n}", lhs == rhs))
    for n in range(args.n_max + 1):
        lhs, rhs = dressed_shuffle_identity(n)
        pairs.append((f"dressed-words n={n}", lhs == rhs))
    return _exact_pairs(pairs)


def _verify_euler(args, ctx):
    pairs = []
    for s in range(2, args.max_weight // 2 + 1):
        for t in range(s, args.max_weight - s + 1):
            expected = euler_decomposition(s, t)
            shuffled = shuffle_words(
                Word("A" * (s - 1) + "B"), Word("A" * (t - 1) + "B")
            ).as_zeta_combination()
            if expected != shuffled:
                pairs.append((f"s={s},t={t}", mpf(1)))
                continue
            lhs = zeta((s,), ctx).value * zeta((t,), ctx).value
            rhs = mp.fsum(c * zeta(comp, ctx).value for c, comp in expected)
            pairs.append((f"s={s},t={t}", abs(lhs - rhs)))
    return pairs


def _verify_dual(args, ctx):
    pairs = []
    for weight in range(2, args.max_weight + 1):
        for comp in admissible_compositions(weight):
            res = abs(zeta(comp, ctx).value - zeta(comp.dual(), ctx).value)
            pairs.append((str(comp), res))
            _stream(args, str(comp), res)
    return pairs


_VERIFY_TARGETS = {
    "zagier": _verify_zagier,
    "dressed": _verify_dressed,
    "cyclic": _verify_cyclic,
    "swap": _verify_swap,
    "lemmas": _verify_lemmas,
    "powers": _verify_powers,
    "symbolic": _verify_symbolic,
    "euler": _verify_euler,
    "dual": _verify_dual,
}


def _stream(args, label: str, residual) -> None:
    if args.json:
        print(json.dumps({"instance": label, "residual": _fmt_residual(residual)}))
    else:
        print(f"{label}: residual {_fmt_residual(residual)}")


def cmd_verify(args) -> int:
    started = time.monotonic()
    ctx = PrecisionContext(args.digits)
    with mp.workdps(ctx.working_digits):
        pairs = _VERIFY_TARGETS[args.target](args, ctx)
    report, lines = _residual_report(
        f"verify {args.target}",
        {k: v for k, v in vars(args).items()
         if k not in ("func", "json", "command") and v is not None},
        pairs,
        args.digits,
        started,
        args,
    )
    streamed = args.target in ("cyclic", "dual") and args.vector is None
    if streamed:
        lines = lines[-1:]  # instances were already streamed
    return _emit(report, args, lines)


def cmd_orbits(args) -> int:
    started = time.monotonic()
    count = orbit_count(args.n, args.M)
    report = RunReport(
        command="orbits",
        inputs={"n": args.n, "M": args.M},
        status=PASS,
        data={"orbits": count},
        elapsed_ms=int((time.monotonic() - started) * 1000),
    )
    return _emit(report, args, [str(count)])


def cmd_relations(args) -> int:
    started = time.monotonic()
    if args.digits is not None:
        ctx = PrecisionContext(args.digits)
    else:
        ctx = default_scan_context(len(build_family(args.n, args.M)))
    try:
        scan = relation_scan(args.n, args.M, ctx, args.max_norm)
    except PrecisionError as exc:
        print(f"unstable: {exc}", file=sys.stderr)
        return 1
    orbits = orbit_count(args.n, args.M)
    payload = scan.to_json_dict()
    payload["orbit_count"] = orbits
    payload["delta"] = scan.count - orbits
    report = RunReport(
        command="relations",
        inputs={"n": args.n, "M": args.M, "max_norm": args.max_norm},
        status="found" if scan.count else "none",
        data=payload,
        digits=scan.digits,
        elapsed_ms=int((time.monotonic() - started) * 1000),
    )
    lines = [f"entries: {' '.join(scan.family.labels())}"]
    lines += [f"relation: {list(rel)}" for rel in scan.relations]
    lines.append(
        f"found {scan.count} independent relation(s) at {scan.digits} digits; "
        f"cyclic-type predicts {orbits} (delta {scan.count - orbits})"
    )
    return _emit(report, args, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzv",
        description="Shuffle-algebra combinatorics and high-precision numerics of multiple zeta values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--digits", type=int, default=_default_digits(),
                       help="decimal digits of precision (default 100 or MZV_DEFAULT_DIGITS)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p_eval = sub.add_parser("eval", help="evaluate a multiple zeta value")
    p_eval.add_argument("composition", help="comma-separated arguments, e.g. 3,1")
    add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_shuffle = sub.add_parser("shuffle", help="shuffle product of two words")
    p_shuffle.add_argument("left", help="word, e.g. AABB or (AB)^3")
    p_shuffle.add_argument("right")
    p_shuffle.add_argument("--as-zeta", action="store_true",
                           help="also print the zeta-value combination")
    p_shuffle.add_argument("--json", action="store_true")
    p_shuffle.set_defaults(func=cmd_shuffle)

    p_verify = sub.add_parser("verify", help="verify an identity family")
    p_verify.add_argument("target", choices=sorted(_VERIFY_TARGETS))
    p_verify.add_argument("--n", default="1..3", help="range like 1..3 (zagier, dressed)")
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=None,
                          help="upper bound for exact checks (lemmas, symbolic)")
    p_verify.add_argument("--vector", default=None, help="insertion vector, e.g. 0,2,1")
    p_verify.add_argument("--all", action="store_true", help="sweep all cyclic instances")
    p_verify.add_argument("--max-weight", dest="max_weight", type=int, default=None,
                          help="weight cap for sweeps (cyclic: 18, dual: 8, euler: 10)")
    p_verify.add_argument("--max-blocks", dest="max_blocks", type=int, default=8,
                          help="cap on p+q for the powers target")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_orbits = sub.add_parser("orbits", help="dihedral orbit count of insertion vectors")
    p_orbits.add_argument("--n", type=int, required=True)
    p_orbits.add_argument("--M", type=int, required=True)
    p_orbits.add_argument("--json", action="store_true")
    p_orbits.set_defaults(func=cmd_orbits)

    p_rel = sub.add_parser("relations", help="PSLQ relation scan for an insertion family")
    p_rel.add_argument("--n", type=int, required=True)
    p_rel.add_argument("--M", type=int, required=True)
    p_rel.add_argument("--digits", type=int, default=None,
                       help="target digits (default: policy, at least 300)")
    p_rel.add_argument("--max-norm", dest="max_norm", type=int, default=10**6)
    p_rel.add_argument("--json", action="store_true")
    p_rel.set_defaults(func=cmd_relations)

    return parser


_TARGET_DEFAULT_WEIGHT = {"cyclic": 18, "dual": 8, "euler": 10}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n_max", None) is None:
        args.n_max = 50 if getattr(args, "target", "") == "lemmas" else 4
    if getattr(args, "max_weight", None) is None:
        args.max_weight = _TARGET_DEFAULT_WEIGHT.get(getattr(args, "target", ""), 18)
    try:
        return args.func(args)
    except (AdmissibilityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrecisionError as exc:
        print(f"unstable: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
