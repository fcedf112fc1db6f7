"""Command-line front end: ``sig4 eval|periods|verify``.

Exit codes: 0 success, 2 usage/domain/pole error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import checks, shen
from . import weierstrass as W
from .classical_elliptic import jacobi_complex, make_frame
from .errors import Sig4Error
from .hypergeom import f2, f4

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAIL = 3

PERIOD_TOL = 1e-10
CSV_HEADER = ("lambda", "check", "residual", "tolerance", "pass")
FUNCTIONS = ("dd", "d_real", "wp", "sn", "cn", "dn", "f2", "f4")
SUITES = ("ode", "thm2", "routes", "periods", "transfer", "all")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepConfig:
    grid_size: int
    lambda_min: float
    lambda_max: float
    tolerance: float | None
    output_path: str | None
    format: str

    def __post_init__(self):
        if self.grid_size < 1:
            raise UsageError(f"grid size must be >= 1, got {self.grid_size}")
        if not (0.0 < self.lambda_min < 1.0 and 0.0 < self.lambda_max < 1.0):
            raise UsageError("lambda range must lie inside (0, 1)")
        if self.grid_size > 1 and not self.lambda_min < self.lambda_max:
            raise UsageError("need lambda_min < lambda_max")
        if self.tolerance is not None and not self.tolerance > 0.0:
            raise UsageError(f"tolerance must be positive, got {self.tolerance}")
        if self.format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.format!r}")

    def grid(self) -> list[float]:
        if self.grid_size == 1:
            return [self.lambda_min]
        step = (self.lambda_max - self.lambda_min) / (self.grid_size - 1)
        return [self.lambda_min + j * step for j in range(self.grid_size)]


def _default_tolerance() -> float | None:
    raw = os.environ.get("SIG4_TOL")
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"SIG4_TOL={raw!r} is not a number") from None


def format_value(value: complex | float) -> str:
    value = complex(value)
    if value.imag == 0.0:
        return f"{value.real:.15g}"
    return f"{value.real:.15g}{value.imag:+.15g}j"


def parse_z(text: str | None, frame: shen.ShenFrame | None) -> complex:
    if text is None:
        raise UsageError("--z is required for this function")
    token = text.strip().replace(" ", "")
    if token in ("omega", "omega'", "omega_prime", "omega+omega'"):
        if frame is None:
            raise UsageError(f"--z {token} needs --kappa")
        hp = frame.half_periods
        return {
            "omega": complex(hp.omega),
            "omega'": hp.omega_prime,
            "omega_prime": hp.omega_prime,
            "omega+omega'": hp.omega + hp.omega_prime,
        }[token]
    try:
        return complex(token.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse --z {text!r} as a complex number") from None


def cmd_eval(args) -> int:
    func = args.function
    if func in ("f2", "f4"):
        if args.x is None:
            raise UsageError(f"{func} needs --x")
        print(format_value((f2 if func == "f2" else f4)(args.x)))
        return EXIT_OK
    if args.kappa is None:
        raise UsageError(f"{func} needs --kappa")
    if func in ("sn", "cn", "dn"):
        z = parse_z(args.z, None)
        triple = jacobi_complex(z, make_frame(args.kappa))
        print(format_value(getattr(triple, func)))
        return EXIT_OK
    frame = shen.make_shen_frame(args.kappa)
    z = parse_z(args.z, frame)
    if func == "dd":
        value = shen.dd_via_wp(z, frame)
    elif func == "wp":
        value = W.wp(z, frame.midpoints, frame.jacobi)
    else:
        if z.imag != 0.0:
            raise UsageError("d_real needs a real --z")
        value = shen.d_real(z.real, frame.modulus)
    print(format_value(value))
    return EXIT_OK


def cmd_periods(args) -> int:
    if args.kappa is None:
        raise UsageError("periods needs --kappa")
    tol = args.tol if args.tol is not None else _default_tolerance()
    tol = PERIOD_TOL if tol is None else tol
    m = shen.Modulus.from_kappa(args.kappa)
    via_f4 = shen.periods_via_f4(m)
    via_f2 = shen.make_shen_frame(m).half_periods
    dev = abs(via_f4.omega - via_f2.omega)
    dev_p = abs(via_f4.omega_prime - via_f2.omega_prime)
    rows = [
        ("omega (F4)", via_f4.omega),
        ("omega (F2/AGM)", via_f2.omega),
        ("-i omega' (F4)", via_f4.omega_prime.imag),
        ("-i omega' (F2/AGM)", via_f2.omega_prime.imag),
        ("omega deviation", dev),
        ("omega' deviation", dev_p),
        ("-i omega'/omega", via_f4.omega_prime.imag / via_f4.omega),
    ]
    for label, value in rows:
        print(f"{label:<20} {value:.15g}")
    ok = dev < tol and dev_p < tol
    print(f"{'status':<20} {'pass' if ok else 'FAIL'} (tol {tol:g})")
    return EXIT_OK if ok else EXIT_FAIL


def _evaluate_point(item):
    lam, suite, tol_override = item
    rows = []
    for name, func, default_tol in checks.suite_checks(suite):
        tol = default_tol if tol_override is None else tol_override
        try:
            residual = checks.nan_safe(float(func(lam)))
        except Sig4Error:
            residual = math.inf
        rows.append(
            {
                "lambda": lam,
                "check": name,
                "residual": residual,
                "tolerance": tol,
                "pass": residual < tol,
            }
        )
    return rows


def run_sweep(suite: str, cfg: SweepConfig, jobs: int = 1) -> list[dict]:
    """All rows for ``suite``, in grid order whatever the worker count."""
    tol = cfg.tolerance if cfg.tolerance is not None else _default_tolerance()
    items = [(lam, suite, tol) for lam in cfg.grid()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_evaluate_point, items))
    else:
        chunks = [_evaluate_point(item) for item in items]
    return [row for chunk in chunks for row in chunk]


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                repr(row["lambda"]),
                row["check"],
                repr(row["residual"]),
                repr(row["tolerance"]),
                "true" if row["pass"] else "false",
            ]
        )
    return buf.getvalue()


def cmd_verify(args) -> int:
    cfg = SweepConfig(
        grid_size=args.grid,
        lambda_min=args.lambda_min,
        lambda_max=args.lambda_max,
        tolerance=args.tol,
        output_path=args.out,
        format=args.format,
    )
    rows = run_sweep(args.suite, cfg, jobs=args.jobs)
    text = render(rows, cfg.format)
    if cfg.output_path:
        with open(cfg.output_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = sum(not row["pass"] for row in rows)
    print(
        f"{args.suite}: {len(rows) - failed}/{len(rows)} checks passed",
        file=sys.stderr,
    )
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sig4", description="Signature-four elliptic function toolkit."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function")
    p_eval.add_argument("function", choices=FUNCTIONS)
    p_eval.add_argument("--kappa", type=float, help="modulus in (0, 1); Jacobi modulus for sn/cn/dn")
    p_eval.add_argument("--z", help="complex argument, e.g. 0.6+0.3j, or omega, omega', omega+omega'")
    p_eval.add_argument("--x", type=float, help="argument of f2/f4 in [0, 1)")
    p_eval.set_defaults(handler=cmd_eval)

    p_per = sub.add_parser("periods", help="half-periods by the F4 and F2/AGM routes")
    p_per.add_argument("--kappa", type=float, required=True)
    p_per.add_argument("--tol", type=float)
    p_per.set_defaults(handler=cmd_periods)

    p_ver = sub.add_parser("verify", help="run a residual sweep over a lambda grid")
    p_ver.add_argument("suite", choices=SUITES)
    p_ver.add_argument("--grid", type=int, default=99)
    p_ver.add_argument("--lambda-min", type=float, default=0.01)
    p_ver.add_argument("--lambda-max", type=float, default=0.99)
    p_ver.add_argument("--tol", type=float, help="override every check tolerance")
    p_ver.add_argument("--out", help="write the report here instead of stdout")
    p_ver.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ver.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_ver.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (UsageError, Sig4Error) as exc:
        print(f"sig4: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
