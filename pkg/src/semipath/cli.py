"""Command-line front end: instance files in, JSON reports out.

Commands:

* ``solve``     run one algorithm on one instance file, optionally checking
                the residual and counting semiring operations.
* ``bench``     run an algorithm over generated instances of growing size
                and report mean operation counts plus growth ratios.
* ``semirings`` list the registered instance names.

Exit codes: 0 success, 2 parse/request error, 3 solver hit an undefined
scalar operation (or a non-stabilizing series), 4 residual check failed.
"""

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass

from .bordering import bordering_solve, series_closure
from .errors import (
    BadSentinel,
    IncompatibleRequest,
    NotStabilized,
    ParseError,
    SemipathError,
    SolverUndefined,
)
from .matrices import Matrix, SymToeplitz
from .semirings import (
    NEG_INF,
    POS_INF,
    CountingSemiring,
    OpCounter,
    REGISTRY,
    get_semiring,
)
from .toeplitz import VARIANT_RECOMPUTE, VARIANTS, durbin, levinson, residual_check

ALGORITHMS = ("durbin", "levinson", "bordering", "series")

DEFAULT_SEED = 42
SEED_ENV_VAR = "SEMIPATH_SEED"

_SENTINEL_NAMES = {"-inf": NEG_INF, "inf": POS_INF}

EXIT_OK = 0
EXIT_REQUEST = 2
EXIT_UNDEFINED = 3
EXIT_RESIDUAL = 4


@dataclass
class InstanceFile:
    """Decoded instance: semiring name, diagonal scalar, generator/rhs
    column r, and (for arbitrary-rhs problems) the column b."""

    semiring: str
    r0: object
    r: list
    b: list = None

    @property
    def size(self):
        return len(self.b) if self.b is not None else len(self.r)


def decode_value(sr, raw, where):
    """One JSON scalar -> carrier value, with strict carrier checking."""
    if isinstance(raw, str):
        if raw not in _SENTINEL_NAMES:
            raise ParseError(f"{where}: expected a number or 'inf'/'-inf', got {raw!r}")
        v = _SENTINEL_NAMES[raw]
        if not sr.contains(v):
            raise BadSentinel(f"{where}: sentinel {raw!r} is not in the {sr.name} carrier")
        return v
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ParseError(f"{where}: expected a number, got {raw!r}")
    if not sr.contains(raw):
        raise ParseError(f"{where}: {raw!r} is outside the {sr.name} carrier")
    return raw


def encode_value(v):
    """Carrier value -> JSON scalar (infinities become strings)."""
    if v == NEG_INF:
        return "-inf"
    if v == POS_INF:
        return "inf"
    return v


def _reject_json_constant(token):
    raise ParseError(f"bare {token} is not allowed; use the string sentinels 'inf'/'-inf'")


def parse_instance(path):
    """Read and validate one instance file.

    The file is a single JSON object with fields ``semiring``, ``r0``,
    ``r`` and optionally ``b``; anything else is rejected.  Without ``b``
    the instance is a self-generated (Yule-Walker style) problem; with
    ``b`` it is a full Bellman problem and r must have length len(b) - 1.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f, parse_constant=_reject_json_constant)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None

    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    allowed = {"semiring", "r0", "r", "b"}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ParseError(f"{path}: unknown field(s): {', '.join(unknown)}")
    for key in ("semiring", "r0", "r"):
        if key not in doc:
            raise ParseError(f"{path}: missing required field {key!r}")

    if not isinstance(doc["semiring"], str):
        raise ParseError(f"{path}: 'semiring' must be a string")
    sr = get_semiring(doc["semiring"])

    r0 = decode_value(sr, doc["r0"], "r0")
    if not isinstance(doc["r"], list):
        raise ParseError(f"{path}: 'r' must be an array")
    r = [decode_value(sr, raw, f"r[{i}]") for i, raw in enumerate(doc["r"])]

    b = None
    if "b" in doc:
        if not isinstance(doc["b"], list):
            raise ParseError(f"{path}: 'b' must be an array")
        b = [decode_value(sr, raw, f"b[{i}]") for i, raw in enumerate(doc["b"])]
        if len(b) < 1:
            raise ParseError(f"{path}: 'b' must be non-empty")
        if len(r) != len(b) - 1:
            raise ParseError(
                f"{path}: 'r' must have length len(b) - 1 = {len(b) - 1}, got {len(r)}"
            )
    elif len(r) < 1:
        raise ParseError(f"{path}: 'r' must be non-empty")

    return InstanceFile(semiring=sr.name, r0=r0, r=r, b=b)


def encode_instance(inst):
    """InstanceFile -> the JSON object it was parsed from (round trip)."""
    doc = {
        "semiring": inst.semiring,
        "r0": encode_value(inst.r0),
        "r": [encode_value(v) for v in inst.r],
    }
    if inst.b is not None:
        doc["b"] = [encode_value(v) for v in inst.b]
    return doc


def _toeplitz_parts(inst):
    """Matrix generator tail and right-hand side implied by the instance."""
    if inst.b is not None:
        return list(inst.r), list(inst.b)
    return list(inst.r[:-1]), list(inst.r)


def run_solve(inst, algorithm, variant=VARIANT_RECOMPUTE, check=False, count=False):
    """Dispatch one solve and assemble the report dict.

    The residual check (when requested) runs on the unwrapped instance so
    operation counts reflect the solve alone.
    """
    if algorithm not in ALGORITHMS:
        raise IncompatibleRequest(f"unknown algorithm {algorithm!r}")
    if algorithm == "durbin" and inst.b is not None:
        raise IncompatibleRequest("durbin solves the self-generated problem; remove 'b'")
    if algorithm == "levinson" and inst.b is None:
        raise IncompatibleRequest("levinson needs an explicit right-hand side 'b'")

    base = get_semiring(inst.semiring)
    counter = OpCounter()
    sr = CountingSemiring(base, counter) if count else base
    tail, rhs = _toeplitz_parts(inst)

    started = time.perf_counter()
    if algorithm == "durbin":
        solution = durbin(sr, inst.r0, inst.r, variant)
    elif algorithm == "levinson":
        solution = levinson(sr, inst.r0, inst.r, inst.b, variant)
    elif algorithm == "bordering":
        T = SymToeplitz(inst.r0, tail, sr).expand()
        solution = bordering_solve(T, rhs).to_flat()
    else:
        T = SymToeplitz(inst.r0, tail, sr).expand()
        closure = series_closure(T)
        solution = closure.mul(Matrix.column(rhs, sr)).to_flat()
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    report = dict(counter.as_dict())
    if check:
        report["residual_ok"] = residual_check(
            SymToeplitz(inst.r0, tail, base), solution, rhs
        )
    report["solution"] = [encode_value(v) for v in solution]
    report["algorithm"] = algorithm
    report["variant"] = variant
    report["semiring"] = inst.semiring
    report["elapsed"] = elapsed_ms
    return report


def random_yule_walker(sr, n, rng):
    """Random solvable self-generated instance of size n: (r0, r).

    max-plus draws integer entries from [-10, 0] so every pivot closure
    exists; nonneg-real scales positive draws so that r0 plus twice the
    tail sum stays below 0.9, keeping the classical solve well posed.  The
    complete instances accept any values.
    """
    name = sr.name
    if name == "max-plus":
        vals = [rng.randint(-10, 0) for _ in range(n + 1)]
    elif name in ("max-plus-complete", "max-min"):
        vals = [rng.randint(-10, 10) for _ in range(n + 1)]
    elif name == "boolean":
        vals = [rng.randint(0, 1) for _ in range(n + 1)]
    elif name == "nonneg-real":
        raw = [rng.random() + 1e-3 for _ in range(n + 1)]
        total = raw[0] + 2 * sum(raw[1:])
        scale = rng.uniform(0.2, 0.85) / total
        vals = [v * scale for v in raw]
    else:
        raise IncompatibleRequest(f"no instance generator for {name}")
    return vals[0], vals[1:]


def random_bellman(sr, n, rng):
    """Random solvable Bellman instance of size n: (r0, r, b)."""
    if n == 1:
        r0, _ = random_yule_walker(sr, 1, rng)
        r = []
    else:
        r0, r = random_yule_walker(sr, n - 1, rng)
    name = sr.name
    if name == "max-plus":
        b = [rng.randint(-10, 0) for _ in range(n)]
    elif name in ("max-plus-complete", "max-min"):
        b = [rng.randint(-10, 10) for _ in range(n)]
    elif name == "boolean":
        b = [rng.randint(0, 1) for _ in range(n)]
    else:
        b = [rng.random() for _ in range(n)]
    return r0, r, b


def run_bench(semiring_name, algorithm, sizes, seeds, variant=VARIANT_RECOMPUTE):
    """Mean operation counts per size, with the growth ratio of the
    multiplication count against the previous size."""
    if algorithm not in ALGORITHMS:
        raise IncompatibleRequest(f"unknown algorithm {algorithm!r}")
    if not sizes:
        raise IncompatibleRequest("need at least one size")
    if any(n < 1 for n in sizes):
        raise IncompatibleRequest("sizes must be positive")
    if sorted(sizes) != list(sizes):
        raise IncompatibleRequest("sizes must be ascending")
    if seeds < 1:
        raise IncompatibleRequest("need at least one seed")

    base = get_semiring(semiring_name)
    try:
        base_seed = int(os.environ.get(SEED_ENV_VAR, str(DEFAULT_SEED)))
    except ValueError:
        raise IncompatibleRequest(f"{SEED_ENV_VAR} must be an integer") from None
    rows = []
    prev_mul = None
    for size in sizes:
        totals = OpCounter()
        elapsed_total = 0.0
        for i in range(seeds):
            rng = random.Random(f"{base_seed}:{semiring_name}:{size}:{i}")
            if algorithm == "durbin":
                r0, r = random_yule_walker(base, size, rng)
                inst = InstanceFile(semiring=semiring_name, r0=r0, r=r)
            else:
                r0, r, b = random_bellman(base, size, rng)
                inst = InstanceFile(semiring=semiring_name, r0=r0, r=r, b=b)
            report = run_solve(inst, algorithm, variant=variant, count=True)
            totals.add_count += report["add_count"]
            totals.mul_count += report["mul_count"]
            totals.closure_count += report["closure_count"]
            totals.inverse_count += report["inverse_count"]
            elapsed_total += report["elapsed"]
        mean_mul = totals.mul_count / seeds
        rows.append({
            "size": size,
            "seeds": seeds,
            "add_count": totals.add_count / seeds,
            "mul_count": mean_mul,
            "closure_count": totals.closure_count / seeds,
            "inverse_count": totals.inverse_count / seeds,
            "elapsed": elapsed_total / seeds,
            "mul_ratio": None if prev_mul is None else mean_mul / prev_mul,
        })
        prev_mul = mean_mul
    return {
        "algorithm": algorithm,
        "variant": variant,
        "semiring": semiring_name,
        "seed": base_seed,
        "rows": rows,
    }


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="semipath",
        description="Solvers for Bellman equations over semirings, with "
        "quadratic-cost symmetric-Toeplitz specializations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance file")
    solve.add_argument("--semiring", required=True, help="instance name; must match the file")
    solve.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    solve.add_argument("--variant", default=VARIANT_RECOMPUTE, choices=VARIANTS)
    solve.add_argument("--check", action="store_true", help="verify sol = T sol + rhs")
    solve.add_argument("--count-ops", action="store_true", help="count semiring operations")
    solve.add_argument("--input", required=True, help="path to the JSON instance file")

    bench = sub.add_parser("bench", help="operation-count scaling over generated instances")
    bench.add_argument("--semiring", required=True)
    bench.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    bench.add_argument("--variant", default=VARIANT_RECOMPUTE, choices=VARIANTS)
    bench.add_argument("--sizes", required=True, help="comma-separated ascending sizes")
    bench.add_argument("--seeds", required=True, type=int, help="instances per size")

    sub.add_parser("semirings", help="list registered semiring names")
    return parser


def _fail(exc, code):
    print(json.dumps({"error": type(exc).__name__, "message": str(exc),
                      "step": getattr(exc, "step", None)}), file=sys.stderr)
    return code


def main(argv=None):
    args = _build_parser().parse_args(argv)

    if args.command == "semirings":
        print(json.dumps(list(REGISTRY)))
        return EXIT_OK

    if args.command == "bench":
        try:
            sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        except ValueError:
            return _fail(IncompatibleRequest(f"bad --sizes value {args.sizes!r}"), EXIT_REQUEST)
        try:
            table = run_bench(args.semiring, args.algorithm, sizes, args.seeds, args.variant)
        except (ParseError, IncompatibleRequest) as exc:
            return _fail(exc, EXIT_REQUEST)
        except (SolverUndefined, NotStabilized) as exc:
            return _fail(exc, EXIT_UNDEFINED)
        print(json.dumps(table))
        return EXIT_OK

    # solve
    try:
        inst = parse_instance(args.input)
        if inst.semiring != args.semiring:
            raise IncompatibleRequest(
                f"--semiring {args.semiring!r} does not match the file's {inst.semiring!r}"
            )
        report = run_solve(
            inst, args.algorithm, variant=args.variant,
            check=args.check, count=args.count_ops,
        )
    except (ParseError, IncompatibleRequest) as exc:
        return _fail(exc, EXIT_REQUEST)
    except (SolverUndefined, NotStabilized) as exc:
        return _fail(exc, EXIT_UNDEFINED)
    except SemipathError as exc:
        return _fail(exc, EXIT_REQUEST)
    print(json.dumps(report))
    if args.check and not report["residual_ok"]:
        return EXIT_RESIDUAL
    return EXIT_OK


def console_entry():
    raise SystemExit(main())


if __name__ == "__main__":
    console_entry()
