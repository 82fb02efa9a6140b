"""Command-line front end.

JSON reports go to stdout (or ``--out``); human-readable text and timing go
to stderr so the JSON is byte-identical across identical runs.

Exit codes: 0 success, 1 failed check or unmet precondition, 2 bad input,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from collections.abc import Sequence
from pathlib import Path

from skewaqc import aqc, codes, gf4, reproduce, rs_concat, smap
from skewaqc.codefile import CodeFileError, format_code, load_code
from skewaqc.codes import BudgetExceeded
from skewaqc.skew import is_skew_cyclic

BUDGET_ENV = "SKEWAQC_BUDGET"

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return codes.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"{BUDGET_ENV} must be an integer, got {raw!r}", EXIT_PARSE) from None


def _load(spec: str):
    try:
        return load_code(spec)
    except (CodeFileError, ValueError) as exc:
        raise CliError(f"{spec}: {exc}", EXIT_PARSE) from None
    except OSError as exc:
        raise CliError(f"{spec}: {exc.strerror}", EXIT_PARSE) from None


def _digest(specs: Sequence[str]) -> str:
    h = hashlib.sha256()
    for s in specs:
        p = Path(s)
        h.update(p.read_bytes() if p.is_file() else s.encode())
        h.update(b"\0")
    return h.hexdigest()[:16]


def _code_summary(code) -> dict:
    add = codes.as_additive(code)
    out = {"n": add.n, "kappa": add.kappa, "linear": isinstance(code, codes.LinearCodeF4)}
    if isinstance(code, codes.LinearCodeF4):
        out["k"] = code.k
    return out


# ----------------------------------------------------------------------------
# commands; each returns (outputs, verdicts, human text)


def cmd_mindist(args) -> tuple[dict, dict, str]:
    code = _load(args.file)
    w = codes.weight_enumerator(code, args.budget)
    d = w.min_distance
    summary = _code_summary(code)
    dim = f"{summary['k']}" if "k" in summary else f"kappa={summary['kappa']}"
    text = f"[{code.n}, {dim}, {d}]\nW = {w}"
    return {"code": summary, "min_distance": d, "weight_enumerator": w.to_json()}, {}, text


def cmd_apply_s(args) -> tuple[dict, dict, str]:
    code = _load(args.file)
    image = smap.s_apply_code(code)
    d = codes.min_distance(image, args.budget)
    out = {"n": image.n, "log2_size": image.kappa, "min_distance": d}
    verdicts = {}
    lines = [f"S(C): ({image.n}, 2^{image.kappa}, {d})"]
    if is_skew_cyclic(code) and code.n > 0:
        relabelled, kind = smap.equivalent_shift_image(code)
        out["shift_kind"] = kind
        verdicts["shift_invariance"] = True
        perm = "Sigma'" if code.n % 2 else "Sigma''"
        lines.append(f"{perm}(S(C)) is {kind}")
    if args.image:
        Path(args.image).write_text(format_code(image))
        out["image_file"] = args.image
    return out, verdicts, "\n".join(lines)


def _params_report(p: aqc.AqcParams) -> tuple[dict, dict, str]:
    check = aqc.singleton_check(p)
    out = {"params": p.to_json(), "text": str(p)}
    return out, {"singleton": check.holds}, f"{p}   (Singleton {'equality' if check.equality else 'holds' if check else 'VIOLATED'})"


def cmd_aqc(args) -> tuple[dict, dict, str]:
    try:
        if args.construction == "nested":
            return _params_report(aqc.derive_from_nested(_load(args.c1), _load(args.c2), args.budget))
        if args.construction == "via-s":
            return _params_report(aqc.derive_via_s(_load(args.inner), _load(args.outer), budget=args.budget))
        if args.construction == "s-dual":
            return _params_report(aqc.derive_from_s_dual(_load(args.code), args.budget))
        if args.construction == "mds":
            c, d, p = aqc.mds_construction(args.n, seed=args.seed, budget=args.budget)
            out, verdicts, text = _params_report(p)
            out["full_weight_word"] = "".join(gf4.format_symbol(a) for a in c.rows[0])
            return out, verdicts, text
        return _cmd_rs(args)
    except aqc.PreconditionError as exc:
        raise CliError(f"precondition failed: {exc}", EXIT_FAIL) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _cmd_rs(args) -> tuple[dict, dict, str]:
    if args.table:
        rows = rs_concat.reproduce_table(args.m)
        return {"m": args.m, "rows": [r.to_json() for r in rows]}, {}, rs_concat.format_table(rows).rstrip()
    if args.k is None:
        raise CliError("aqc rs needs --k or --table", EXIT_PARSE)
    try:
        p = rs_concat.concatenated_rs_params(args.m, args.k)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    return _params_report(p)


def cmd_reproduce(args) -> tuple[dict, dict, str]:
    runner = reproduce.RUNNERS[args.target]
    checks = runner(n_max=args.n_max, seed=args.seed) if args.target == "properties" else runner()
    verdicts = {c.name: c.ok for c in checks}
    passed = sum(c.ok for c in checks)
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + ("" if c.ok else f"  ({c.detail})") for c in checks]
    lines.append(f"{args.target}: {passed}/{len(checks)} checks passed")
    return {"checks": [c.to_json() for c in checks]}, verdicts, "\n".join(lines)


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewaqc",
        description="Codes over GF(4), the doubling map S and asymmetric quantum code parameters.",
    )
    parser.add_argument("--seed", type=int, default=aqc.DEFAULT_SEED, help="seed for the randomized codeword search")
    parser.add_argument("--budget", type=int, default=None, help=f"max codewords to enumerate (env {BUDGET_ENV}, default 2^24)")
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    parser.add_argument("--quiet", action="store_true", help="suppress the human-readable text on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mindist", help="minimum distance and weight enumerator of a code")
    p.add_argument("file", help="code file, or rep<n> / eqn4 / eqn7")
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("apply-s", help="image of a code under S")
    p.add_argument("file")
    p.add_argument("--image", help="write the image code file here")
    p.set_defaults(func=cmd_apply_s)

    p = sub.add_parser("aqc", help="derive asymmetric quantum code parameters")
    csub = p.add_subparsers(dest="construction", required=True)
    q = csub.add_parser("nested", help="from C1, C2 with trace_dual(C1) inside C2")
    q.add_argument("--c1", required=True)
    q.add_argument("--c2", required=True)
    q = csub.add_parser("via-s", help="from C inside D through S")
    q.add_argument("--inner", required=True, help="the code C")
    q.add_argument("--outer", required=True, help="the code D containing C")
    q = csub.add_parser("s-dual", help="C1 = C2 = trace dual of S(C)")
    q.add_argument("--code", required=True)
    q = csub.add_parser("mds", help="the [[n, n-2, 2/2]] family")
    q.add_argument("--n", type=int, required=True)
    q = csub.add_parser("rs", help="concatenated extended RS codes")
    q.add_argument("--m", type=int, required=True, choices=(1, 2, 3))
    q.add_argument("--k", type=int)
    q.add_argument("--table", action="store_true", help="every k from 1 to 4^m")
    p.set_defaults(func=cmd_aqc)

    p = sub.add_parser("reproduce", help="run a reproduction suite")
    p.add_argument("target", choices=reproduce.SUITES)
    p.add_argument("--n-max", type=int, default=8, help="largest random code length (properties)")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.budget is None:
            args.budget = _default_budget()
        outputs, verdicts, text = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"error: enumeration budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    argv_list = list(sys.argv[1:] if argv is None else argv)
    inputs = [v for k in ("file", "c1", "c2", "inner", "outer", "code") if (v := getattr(args, k, None))]
    report = {
        "command": argv_list,
        "inputs_digest": _digest(inputs),
        "seed": args.seed,
        "outputs": outputs,
        "verdicts": verdicts,
        "ok": all(verdicts.values()),
    }
    payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    if not args.quiet:
        print(text, file=sys.stderr)
        print(f"({time.perf_counter() - start:.3f} s)", file=sys.stderr)
    return EXIT_OK if report["ok"] else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
