"""Command-line front end.

Arrangements come from a text file or a built-in family; engines run behind
subcommands and cross-validate each other under ``verify``.  Output is the
canonical text rendering by default, or a structured JSON document with
``--json``.  Any integrity-alarm failure exits nonzero with a diagnostic
naming the originating module.

File format:
    dim 2
    1 -1 = 0
    1/2 1 = 1
or
    family catalan n=3
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .arrangement import Arrangement, Hyperplane
from .egf import family_egf
from .errors import CapExceededError, InputError, ToolkitError
from .families import FAMILY_NAMES, build_family
from .fq_engine import certify_prime, coboundary_at_prime
from .interpolation import default_primes, recover_characteristic, recover_coboundary
from .polynomials import bounded_regions, regions, to_json_dict, tutte_from_coboundary
from .subset_engine import DEFAULT_CAP, coboundary_by_definition
from .symmetric_engine import (
    Stabilizer,
    coboundary_closed_form,
    extract_representatives,
    partition_solutions,
    solutions_mod_q,
)


def parse_arrangement_text(text: str, where: str = "<input>") -> Arrangement:
    lines = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise InputError(f"{where}: empty arrangement file")
    no, head = lines[0]
    tokens = head.split()
    if tokens[0] == "family":
        if len(tokens) != 3 or not tokens[2].startswith("n="):
            raise InputError(f"{where}:{no}: expected 'family <name> n=<k>'")
        try:
            n = int(tokens[2][2:])
        except ValueError:
            raise InputError(f"{where}:{no}: bad family size {tokens[2][2:]!r}") from None
        if len(lines) > 1:
            raise InputError(f"{where}:{lines[1][0]}: extra content after family line")
        return build_family(tokens[1], n)
    if tokens[0] != "dim" or len(tokens) != 2:
        raise InputError(f"{where}:{no}: first line must be 'dim <n>' or 'family <name> n=<k>'")
    try:
        dim = int(tokens[1])
    except ValueError:
        raise InputError(f"{where}:{no}: bad dimension {tokens[1]!r}") from None
    hyperplanes = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if "=" not in parts:
            raise InputError(f"{where}:{no}: missing '=' in hyperplane line")
        at = parts.index("=")
        if at != dim or len(parts) != dim + 2:
            raise InputError(
                f"{where}:{no}: expected {dim} coefficients, '=', and one right-hand side")
        try:
            coeffs = [Fraction(tok) for tok in parts[:at]]
            rhs = Fraction(parts[at + 1])
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{where}:{no}: bad rational: {exc}") from None
        try:
            hyperplanes.append(Hyperplane(coeffs, rhs))
        except InputError as exc:
            raise InputError(f"{where}:{no}: {exc.args[0]}") from None
    return Arrangement(dim, hyperplanes)


def parse_arrangement(path: str) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement_text(fh.read(), where=path)


def _load(args) -> Arrangement:
    if args.file and args.family:
        raise InputError("give either --file or --family, not both")
    if args.file:
        return parse_arrangement(args.file)
    if args.family:
        if args.n is None:
            raise InputError("--family requires --n")
        return build_family(args.family, args.n)
    raise InputError("no arrangement given; use --file or --family/--n")


def _emit(args, poly, plain: str | None = None):
    if args.json:
        print(json.dumps(to_json_dict(poly), sort_keys=True))
    else:
        print(plain if plain is not None else str(poly))


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad prime list {text!r}") from None


def cmd_tutte(args) -> int:
    a = _load(args)
    primes = _parse_primes(args.primes) if args.primes else None
    cb = recover_coboundary(a, primes, jobs=args.threads)
    _emit(args, tutte_from_coboundary(cb, a.rank))
    return 0


def cmd_coboundary(args) -> int:
    a = _load(args)
    if args.q is not None and args.symbolic:
        raise InputError("--q and --symbolic are mutually exclusive")
    if args.q is not None:
        _emit(args, coboundary_at_prime(a, args.q, jobs=args.threads, unsafe=args.unsafe))
    else:
        primes = _parse_primes(args.primes) if args.primes else None
        _emit(args, recover_coboundary(a, primes, jobs=args.threads))
    return 0


def cmd_characteristic(args) -> int:
    a = _load(args)
    primes = _parse_primes(args.primes) if args.primes else None
    _emit(args, recover_characteristic(a, primes, jobs=args.threads))
    return 0


def cmd_regions(args) -> int:
    a = _load(args)
    chi = recover_characteristic(a, jobs=args.threads)
    r = regions(chi, a.dim)
    b = bounded_regions(chi, a.rank)
    if args.json:
        print(json.dumps({"regions": r, "bounded": b}, sort_keys=True))
    else:
        print(f"regions: {r}, bounded: {b}")
    return 0


def cmd_egf(args) -> int:
    if not args.family:
        raise InputError("egf works on named families; use --family")
    u = family_egf(args.family, args.q, args.order)
    if args.json:
        doc = {"family": args.family, "q": args.q, "order": u.order,
               "coefficients": [to_json_dict(c) for c in u.coeffs]}
        print(json.dumps(doc, sort_keys=True))
    else:
        for n, c in enumerate(u.coeffs):
            print(f"u_{n} = {c}")
    return 0


def cmd_solutions(args) -> int:
    a = _load(args)
    reps = extract_representatives(a)
    sols = []
    for i, e in enumerate(reps, start=1):
        print(f"E{i}: {e}")
        stab = Stabilizer.of_equation(e)
        print(f"  stabilizer order: {len(stab)}")
        here = solutions_mod_q(e, args.q)
        sols.extend(here)
        body = ", ".join(f"({', '.join(map(str, s.values))})x{s.orbit_size}" for s in here)
        print(f"  solutions mod {args.q}: {body}")
    partition = partition_solutions(sols)
    print("partition:")
    for support, block in zip(partition.supports, partition.blocks):
        residues = "{" + ", ".join(map(str, sorted(support))) + "}"
        body = ", ".join(f"({', '.join(map(str, s.values))})" for s in block)
        print(f"  residues {residues}: {body}")
    return 0


def cmd_verify(args) -> int:
    a = _load(args)
    qs = [args.q] if args.q is not None else list(default_primes(a, 1))
    overall_ok = True
    for q in qs:
        if not args.unsafe and not certify_prime(a, q):
            print(f"q={q}: failed certification")
            overall_ok = False
            continue
        results = {}
        t0 = time.perf_counter()
        try:
            results["subset"] = coboundary_by_definition(a, cap=args.cap).substitute(0, q)
            subset_note = f"{time.perf_counter() - t0:.3f}s"
        except CapExceededError:
            subset_note = "skipped (size > cap)"
        t0 = time.perf_counter()
        results["fq"] = coboundary_at_prime(a, q, jobs=args.threads, unsafe=args.unsafe)
        fq_note = f"{time.perf_counter() - t0:.3f}s"
        t0 = time.perf_counter()
        try:
            results["closed-form"] = coboundary_closed_form(a, q)
            closed_note = f"{time.perf_counter() - t0:.3f}s"
        except ToolkitError as exc:
            closed_note = f"skipped ({exc.args[0]})"
        print(f"q={q}: subset {subset_note}; fq {fq_note}; closed-form {closed_note}")
        values = list(results.values())
        ok = all(v == values[0] for v in values)
        overall_ok = overall_ok and ok
        label = "==".join(results)
        print(f"{label}: {'OK' if ok else 'MISMATCH'}")
        if not ok:
            for name, v in results.items():
                print(f"  {name}: {v}")
    return 0 if overall_ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arrpoly",
        description="Exact Tutte, coboundary and characteristic polynomials "
                    "of rational hyperplane arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--file", help="arrangement file")
        sp.add_argument("--family", choices=FAMILY_NAMES, help="built-in family name")
        sp.add_argument("--n", type=int, help="family dimension")
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.add_argument("--threads", type=int, default=1, help="worker processes")
        sp.add_argument("--unsafe", action="store_true",
                        help="skip prime certification checks")

    sp = sub.add_parser("tutte", help="Tutte polynomial (symbolic)")
    common(sp)
    sp.add_argument("--primes", help="explicit primes, e.g. '5,7'")
    sp.set_defaults(fn=cmd_tutte)

    sp = sub.add_parser("coboundary", help="coboundary polynomial")
    common(sp)
    sp.add_argument("--q", type=int, help="evaluate at this prime")
    sp.add_argument("--symbolic", action="store_true", help="interpolate over primes")
    sp.add_argument("--primes", help="explicit primes for --symbolic")
    sp.set_defaults(fn=cmd_coboundary)

    sp = sub.add_parser("characteristic", help="characteristic polynomial (symbolic)")
    common(sp)
    sp.add_argument("--primes", help="explicit primes")
    sp.set_defaults(fn=cmd_characteristic)

    sp = sub.add_parser("regions", help="region counts via the characteristic polynomial")
    common(sp)
    sp.set_defaults(fn=cmd_regions)

    sp = sub.add_parser("egf", help="family generating function at a prime")
    common(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--order", type=int, default=8)
    sp.set_defaults(fn=cmd_egf)

    sp = sub.add_parser("verify", help="cross-engine equality report")
    common(sp)
    sp.add_argument("--q", type=int, help="prime to compare at")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                    help="subset-engine size cap")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("solutions", help="representative equations, solutions, partition")
    common(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.set_defaults(fn=cmd_solutions)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ToolkitError as exc:
        print(f"error {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
