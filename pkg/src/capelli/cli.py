"""Command-line front end.

Every command prints a short human report, or with ``--json`` one JSON
object ``{command, ring, inputs, result, trace?, elapsed_ms}``.

Exit codes: 0 ok, 1 parse error, 2 precondition or domain error,
3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import admissible as adm
from . import criteria, oracle, witness
from .errors import DomainError, OracleBudgetExceeded, ParseError, PreconditionError
from .poly import format_poly, parse_poly
from .rings import Kind, Ring, ring_from_name

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; that code is taken by precondition errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _ring(args) -> Ring:
    if args.command == "cyclotomic" and args.q is not None and args.ring == "z":
        args.ring = "fq"  # `cyclotomic --n 8 --q 7` reads naturally without --ring
    if args.ring == "fq" and args.q is None:
        raise ParseError("--ring fq needs --q")
    if args.ring != "fq" and args.q is not None:
        raise ParseError("--q only applies to --ring fq")
    return ring_from_name(args.ring, args.q)


def _elem(R: Ring, text: str):
    return R.parse(text)


def _n_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError("expected a comma-separated list of integers", text, 0) from None


def _trace_json(tr: criteria.ConditionTrace) -> dict:
    R = tr.ring
    return {
        "m": tr.m,
        "a": R.format(tr.a),
        "b": R.format(tr.b),
        "n": tr.n,
        "verdict": tr.verdict,
        "rows": [
            {"branch": str(r.branch), "u": R.format(r.u), "A_holds": r.A_holds, "B_holds": r.B_holds}
            for r in tr.rows
        ],
    }


def _factorization_json(F: oracle.PolyFactorization) -> dict:
    return {
        "unit": F.ring.format(F.unit),
        "factors": [{"factor": format_poly(g), "multiplicity": e} for g, e in F.factors],
    }


# -- commands: each returns (inputs, result, trace) ------------------------------------------


def cmd_check(args, R):
    f = parse_poly(args.poly, R)
    v = criteria.theorem_1_1_check(f, args.n, verify_input_irreducible=args.verify, max_work=args.max_work)
    result = {
        "status": v.status.value,
        "criterion": v.status.value,
        "direction": v.direction.value if v.direction else None,
    }
    if args.oracle_confirm:
        v = criteria.resolve_with_oracle(v, f, args.n, args.max_work)
        result["status"] = v.status.value
        if v.certificate is not None:
            result["factorization"] = _factorization_json(v.certificate)
    names = ("direct", "dual")
    trace = {name: _trace_json(t) for name, t in zip(names, v.traces)}
    return {"poly": format_poly(f), "n": args.n}, result, trace


def cmd_admissible(args, R):
    a, b = _elem(R, args.a), _elem(R, args.b)
    spec = adm.admissible_spec(args.m, a, b, R)
    ns = _n_list(args.n) if args.n else []
    result = {
        "e": spec.e,
        "shape": spec.shape.value,
        "unit_coefficients": adm.unit_coefficients(a, b, R),
        "inadmissible_primes": list(spec.inadmissible_primes) if spec.inadmissible_primes is not None else None,
        "excluded_odd_primes": list(spec.excluded_odd_primes) if spec.excluded_odd_primes is not None else None,
    }
    if spec.units_only:
        # Cofinite case: list the admissible odd primes instead.
        result["admissible_odd_primes"] = list(spec.admissible_odd_primes)
        result["bad_prime_bound"] = None
    else:
        result["bad_prime_bound"] = adm.corollary_5_1_bound(args.m, a, b, R)
    result["membership"] = [{"n": n, "member": adm.membership(n, spec)} for n in ns]
    inputs = {"a": R.format(a), "b": R.format(b), "m": args.m, "n": ns}
    return inputs, result, None


def cmd_oracle(args, R):
    f = parse_poly(args.poly, R)
    F = oracle.factor(f, args.max_work)
    result = {"irreducible": F.is_irreducible, **_factorization_json(F)}
    return {"poly": format_poly(f)}, result, None


def cmd_witness(args, R):
    f = parse_poly(args.poly, R)
    w = witness.extract_witness(f, args.n, args.max_work)
    if w is None:
        result = {"reducible": False}
    else:
        ok = witness.verify_witness(f, args.n, w)
        pa = witness.assess_pstar(w, R, args.max_work)
        result = {
            "reducible": True,
            "branch": str(w.branch),
            "p": w.p,
            "u": R.format(w.u),
            "S": [format_poly(s) for s in w.S],
            "P": format_poly(w.P),
            "Pstar": format_poly(w.Pstar),
            "verified": w.equation if ok else None,
            "pstar": {"remark": pa.remark, "oracle_irreducible": pa.oracle_irreducible},
        }
    return {"poly": format_poly(f), "n": args.n}, result, None


def cmd_capelli(args, R):
    if R.kind is Kind.PRIME_FIELD:
        raise PreconditionError("capelli works over the fraction fields of z and zi")
    a_num, a_den = _elem(R, args.a), _elem(R, args.den)
    cert = criteria.capelli2_reducible(a_num, a_den, args.n, R)
    if cert is None:
        result = {"reducible": False}
    else:
        c = R.format(cert.c_num) if cert.c_den == R.one else f"({R.format(cert.c_num)})/({R.format(cert.c_den)})"
        result = {"reducible": True, "case": cert.case, "t": cert.t, "c": c}
    return {"a_num": R.format(a_num), "a_den": R.format(a_den), "n": args.n}, result, None


def cmd_cyclotomic(args, R):
    rec = witness.cyclotomic(args.n, R)
    result = {"phi": format_poly(rec.phi_n), "euler_phi": rec.euler_phi}
    if args.q is not None:
        d, count = witness.cyclotomic_factor_count(args.n, args.q)
        result.update(d=d, count=count)
    return {"n": args.n, "q": args.q}, result, None


COMMANDS = {
    "check": cmd_check,
    "admissible": cmd_admissible,
    "oracle": cmd_oracle,
    "witness": cmd_witness,
    "capelli": cmd_capelli,
    "cyclotomic": cmd_cyclotomic,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", choices=["z", "zi", "fq"], default="z")
    common.add_argument("--q", type=int, help="field size for --ring fq (a prime)")
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument(
        "--max-work",
        type=int,
        default=oracle.DEFAULT_MAX_WORK,
        help=f"oracle work budget (default {oracle.DEFAULT_MAX_WORK})",
    )

    parser = _Parser(prog="capelli", description="Irreducibility of f(X^n) over Z, Z[i] and F_q.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="run the irreducibility criterion")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="confirm f is irreducible with the oracle first")
    p.add_argument("--oracle-confirm", action="store_true", help="resolve silent cases with the oracle")

    p = sub.add_parser("admissible", parents=[common], help="admissible primes and exponent set")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", help="comma-separated exponents to test for membership")

    p = sub.add_parser("oracle", parents=[common], help="factor a polynomial by brute force")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("witness", parents=[common], help="reducibility certificate for f(X^n)")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("capelli", parents=[common], help="decide X^n - a for a = num/den")
    p.add_argument("--a", required=True)
    p.add_argument("--den", default="1")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("cyclotomic", parents=[common], help="cyclotomic polynomial and factor shape mod q")
    p.add_argument("--n", type=int, required=True)
    return parser


def _human(report: dict) -> str:
    lines = [f"{report['command']} over {report['ring']}"]
    for k, v in report["inputs"].items():
        lines.append(f"  {k}: {v}")
    for k, v in report["result"].items():
        if k == "S":
            lines += [f"S{j}: {s}" for j, s in enumerate(v)]
        elif k == "factorization":
            lines.append(f"unit: {v['unit']}")
            lines += [f"factor: {d['factor']}" + (f" ^{d['multiplicity']}" if d["multiplicity"] > 1 else "") for d in v["factors"]]
        elif k == "factors":
            lines += [f"factor: {d['factor']}" + (f" ^{d['multiplicity']}" if d["multiplicity"] > 1 else "") for d in v]
        elif k == "membership":
            lines += [f"n={d['n']}: {'member' if d['member'] else 'not member'}" for d in v]
        elif isinstance(v, dict):
            lines += [f"{k}.{kk}: {vv}" for kk, vv in v.items()]
        else:
            lines.append(f"{k}: {v}")
    for name, tr in (report.get("trace") or {}).items():
        lines.append(f"trace {name}: C(m={tr['m']}, a={tr['a']}, b={tr['b']}, n={tr['n']}) = {tr['verdict']}")
        for r in tr["rows"]:
            lines.append(f"  {r['branch']:>5}  u={r['u']:<3}  A={r['A_holds']!s:<5}  B={r['B_holds']}")
    lines.append(f"elapsed_ms: {report['elapsed_ms']}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        R = _ring(args)
        inputs, result, trace = COMMANDS[args.command](args, R)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleBudgetExceeded as exc:
        print(f"oracle budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PreconditionError, DomainError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    report = {"command": args.command, "ring": R.name, "inputs": inputs, "result": result}
    if trace is not None:
        report["trace"] = trace
    report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    print(json.dumps(report) if args.json else _human(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
