"""
Command-line front end: ``padic-jets``.

Subcommands:
    bound KIND       evaluate a counting bound (mm, ml-red, ml-points, chabauty,
                     gamma, determinantal, disc-assembly)
    frobenius CURVE  Frobenius/Verschiebung matrices plus zeta cross-checks
    coleman CURVE    (n_i, k_i) sequence, slopes and the unramified verdict
    stoll CURVE      vanishing table n(s) for a subspace of differentials

Exit codes: 0 success, 1 input or parse error, 2 hypothesis violation,
3 precision exhaustion. Every run writes a manifest to ``--run-dir``
(default ``$PADIC_JETS_RUN_DIR`` or ``./padic_jets_runs``), or next to
``--output`` when one is given.

Usage:
    padic-jets bound ml-red --g 2 --r 0 --p 5
    padic-jets frobenius curves/g2p7a.json
    padic-jets coleman --curve-name g2p5a --omega 1,0 --point 0,1 --lambda 2/9
    padic-jets stoll curves/g2p5a.json --basis "1"
"""

import argparse
import json
import logging
import os
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import bounds
from .catalog import get_curve
from .derham import (
    DEFAULT_PRECISION,
    DifferentialModP,
    HyperellipticCurve,
    cartier_matrix,
    is_ordinary,
    weil_bound_ok,
    zeta_numerator_bruteforce,
)
from .errors import InputError, PadicJetsError, exit_code_for
from .points import FINITE, CurvePointBar, rational_points, residue_field
from .series import polygon_tsv
from .utils import atomic_write_json, atomic_write_text, dumps, input_hash

logger = logging.getLogger("padic_jets")

DEFAULT_RUN_DIR = "./padic_jets_runs"

BOUND_KINDS = ("mm", "ml-red", "ml-points", "chabauty", "gamma", "determinantal", "disc-assembly")


# ── environment ───────────────────────────────────────────────────────────────

def _get_run_dir(run_dir: Optional[str] = None) -> str:
    """Resolve the manifest directory from arg, env, or default."""
    return run_dir or os.environ.get("PADIC_JETS_RUN_DIR") or DEFAULT_RUN_DIR


def _get_precision(precision: Optional[int] = None, file_precision: Optional[int] = None) -> int:
    """Resolve N from the flag, the curve file, $PADIC_JETS_PRECISION, or the default."""
    if precision is not None:
        return precision
    if file_precision is not None:
        try:
            return int(file_precision)
        except (TypeError, ValueError):
            raise InputError(f"curve precision must be an integer, got {file_precision!r}") from None
    env = os.environ.get("PADIC_JETS_PRECISION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"PADIC_JETS_PRECISION must be an integer, got {env!r}") from None
    return DEFAULT_PRECISION


def _configure_logging(verbose: bool) -> None:
    level = os.environ.get("PADIC_JETS_LOG_LEVEL")
    if not verbose and not level:
        return
    logging.basicConfig(
        level=(level or "INFO").upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


# ── run manifest ──────────────────────────────────────────────────────────────

@dataclass
class RunManifest:
    """Provenance record written once per invocation."""

    command: List[str]
    subcommand: str
    inputs_hash: str = ""
    precision: Dict[str, Optional[int]] = field(default_factory=dict)
    versions: Dict[str, str] = field(default_factory=dict)
    outputs: List[str] = field(default_factory=list)
    wall_time: float = 0.0
    exit_code: int = 0

    def to_dict(self) -> Dict:
        return {
            "command": list(self.command),
            "subcommand": self.subcommand,
            "inputs_hash": self.inputs_hash,
            "precision": dict(self.precision),
            "versions": dict(self.versions),
            "outputs": list(self.outputs),
            "wall_time": round(self.wall_time, 6),
            "exit_code": self.exit_code,
        }


def _versions() -> Dict[str, str]:
    import numpy
    import sympy

    from . import __version__

    return {
        "padic_jets": __version__,
        "python": platform.python_version(),
        "sympy": sympy.__version__,
        "numpy": numpy.__version__,
    }


def _manifest_path(args: argparse.Namespace, manifest: RunManifest) -> str:
    if args.output:
        return args.output + ".manifest.json"
    name = f"{manifest.subcommand}-{(manifest.inputs_hash or 'unhashed')[:16]}.manifest.json"
    return os.path.join(_get_run_dir(args.run_dir), name)


# ── input parsing ─────────────────────────────────────────────────────────────

def _read_curve_file(path: str) -> Dict:
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object, got {type(data).__name__}")
    return data


def _curve_spec(path: Optional[str], curve_name: Optional[str]) -> Dict:
    """The curve description from a file or the stored catalog."""
    if path and curve_name:
        raise InputError("give either a curve file or --curve-name, not both")
    if curve_name:
        return get_curve(curve_name).to_dict() | {"label": curve_name}
    if not path:
        raise InputError("a curve file or --curve-name is required")
    return _read_curve_file(path)


def _build_curve(spec: Dict, precision: Optional[int]) -> HyperellipticCurve:
    data = dict(spec)
    data["precision"] = _get_precision(precision, spec.get("precision"))
    return HyperellipticCurve.from_dict(data)


def _int_list(text: str, what: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None


def _parse_lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--lambda must be a rational c/d, got {text!r}") from None


def _parse_coordinate(text: str, field_ctx):
    digits = _int_list(text.replace(":", ","), "point coordinate")
    if not digits or len(digits) > field_ctx.f:
        raise InputError(f"coordinate {text!r} needs 1 to {field_ctx.f} digits")
    return field_ctx.element(digits)


def _parse_point(curve: HyperellipticCurve, text: Optional[str], degree: int) -> CurvePointBar:
    """``infinity``, ``x,0`` (Weierstrass) or ``x,y``; extension digits joined by ``:``."""
    if text is None:
        for pt in rational_points(curve, degree):
            if pt.kind == FINITE:
                return pt
        raise InputError(f"no finite non-Weierstrass point over F_{curve.p}^{degree}")
    if text.strip().lower() in ("inf", "infinity"):
        return CurvePointBar.infinity()
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"--point must be 'x,y' or 'infinity', got {text!r}")
    fld = residue_field(curve.p, degree)
    x, y = (_parse_coordinate(part, fld) for part in parts)
    pt = CurvePointBar.weierstrass(x) if y.is_zero() else CurvePointBar.finite(x, y)
    if not pt.lies_on(curve):
        raise InputError(f"point {pt} is not on the reduced curve")
    return pt


def _parse_basis(curve: HyperellipticCurve, text: str) -> List[DifferentialModP]:
    """Semicolon-separated polynomials h, each comma-separated low-to-high."""
    fld = residue_field(curve.p, 1)
    out = []
    for chunk in text.split(";"):
        coeffs = _int_list(chunk, "--basis polynomial")
        if len(coeffs) > curve.g:
            raise InputError(f"holomorphic h has degree < g = {curve.g}, got {len(coeffs)} coefficients")
        coeffs = coeffs + [0] * (curve.g - len(coeffs))
        out.append(DifferentialModP(tuple(fld.element(c) for c in coeffs), curve.g))
    return out


def _require(args: argparse.Namespace, kind: str, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"--{name.replace('_', '-')} is required for bound {kind}")


# ── commands ──────────────────────────────────────────────────────────────────

def cmd_bound(args: argparse.Namespace, manifest: RunManifest) -> Dict:
    kind = args.kind
    manifest.inputs_hash = input_hash({"bound": kind, **_bound_inputs(args)})
    if kind == "mm":
        _require(args, kind, "g", "p")
        report = bounds.buium_mm_bound(args.g, args.p)
    elif kind == "ml-red":
        _require(args, kind, "g", "r", "p")
        report = bounds.mordell_lang_reduction_bound(args.g, args.r, args.p)
    elif kind == "ml-points":
        _require(args, kind, "g", "r", "p")
        report = bounds.mordell_lang_point_bound(args.g, args.r, args.p)
    elif kind == "chabauty":
        _require(args, kind, "residue_points", "g")
        report = bounds.coleman_chabauty_bound(args.residue_points, args.g)
    elif kind == "gamma":
        _require(args, kind, "g", "r", "p")
        report = bounds.gamma_mod_p_bound(args.g, args.r, args.p)
    elif kind == "disc-assembly":
        _require(args, kind, "red_bound", "stoll_total")
        report = bounds.chabauty_disc_assembly(args.red_bound, args.stoll_total)
    else:
        _require(args, kind, "n", "m", "g", "d")
        result = bounds.determinantal_condition(args.n, args.m, args.g, args.d)
        return {"kind": kind, "inputs": _bound_inputs(args), **result.to_dict()}
    return {"kind": kind, **report.to_dict()}


def _bound_inputs(args: argparse.Namespace) -> Dict:
    names = ("g", "r", "p", "residue_points", "n", "m", "d", "red_bound", "stoll_total")
    return {name: getattr(args, name) for name in names if getattr(args, name) is not None}


def _frobenius_report(spec: Dict, precision: Optional[int], working_precision: Optional[int],
                      jobs: int) -> Dict:
    """Matrices and cross-checks for one curve (top-level so worker processes can run it)."""
    curve = _build_curve(spec, precision)
    fs = curve.frobenius(working_precision)
    modulus = curve.p ** fs.precision
    L = zeta_numerator_bruteforce(curve, jobs=jobs)
    charpoly = fs.charpoly()
    V_mod_p = [[x % curve.p for x in row[:curve.g]] for row in fs.V[:curve.g]]
    checks = {
        "fv_equals_p": fs.fv_ok,
        "holomorphic_lattice": fs.lattice_ok,
        "charpoly_matches_zeta": charpoly == [c % modulus for c in reversed(L)],
        "verschiebung_matches_cartier": V_mod_p == cartier_matrix(curve),
        "weil_bound": weil_bound_ok(L, curve.p),
        "ordinary": is_ordinary(curve),
    }
    for name, ok in checks.items():
        if not ok and name != "ordinary":
            logger.warning(f"{curve!r}: cross-check {name} failed")
    out = fs.to_dict()
    out.update({
        "curve": curve.to_dict(),
        "label": spec.get("label"),
        "charpoly": charpoly,
        "zeta_numerator": L,
        "checks": checks,
    })
    return out


def cmd_frobenius(args: argparse.Namespace, manifest: RunManifest) -> Dict:
    paths = args.curves or [None]
    specs = [_curve_spec(path, args.curve_name) for path in paths]
    manifest.inputs_hash = input_hash({"curves": specs, "precision": args.precision,
                                       "working_precision": args.working_precision})
    manifest.precision.update(precision=args.precision, working_precision=args.working_precision)
    if len(specs) > 1 and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_frobenius_report, s, args.precision, args.working_precision, 1)
                       for s in specs]
            reports = [f.result() for f in futures]
    else:
        reports = [_frobenius_report(s, args.precision, args.working_precision, args.jobs)
                   for s in specs]
    manifest.precision["certified"] = min(r["precision"] for r in reports)
    return reports[0] if len(reports) == 1 else {"curves": reports}


def cmd_coleman(args: argparse.Namespace, manifest: RunManifest) -> Dict:
    from .coleman import ColemanEngine

    spec = _curve_spec(args.curve, args.curve_name)
    curve = _build_curve(spec, args.precision)
    zbar = _parse_point(curve, args.point, args.degree)
    coords = _int_list(args.omega, "--omega") if args.omega else [1]
    if len(coords) > curve.dimension:
        raise InputError(f"--omega has {len(coords)} coordinates, H^1_dR has dimension {curve.dimension}")
    omega = curve.class_from(coords + [0] * (curve.dimension - len(coords)))
    manifest.inputs_hash = input_hash({
        "curve": curve.to_dict(), "point": zbar.to_dict(), "omega": coords,
        "length": args.length, "lambda": args.lam, "literal_k0": args.literal_k0,
        "expansion": args.expansion,
    })
    manifest.precision["precision"] = curve.precision

    engine = ColemanEngine(curve, args.length, literal_k0=args.literal_k0)
    seq = engine.sequence(omega, zbar)
    out = seq.to_dict()
    out.update({"point": zbar.to_dict(), "omega": coords, "label": spec.get("label")})
    if args.lam is not None:
        verdict = engine.unramified_test(zbar, _parse_lambda(args.lam))
        out.update(verdict.to_dict())
        out["lambda"] = args.lam
    if args.expansion:
        exp = engine.disc_expansion(zbar, omega, args.expansion)
        out["expansion"] = exp.to_dict()
        out["_polygon_tsv"] = polygon_tsv(exp.series)
    manifest.precision["certified"] = seq.certified_precision
    return out


def cmd_stoll(args: argparse.Namespace, manifest: RunManifest) -> Dict:
    spec = _curve_spec(args.curve, args.curve_name)
    curve = _build_curve(spec, args.precision)
    subspace = _parse_basis(curve, args.basis)
    manifest.inputs_hash = input_hash({"curve": curve.to_dict(), "basis": args.basis,
                                       "scan_degree": args.scan_degree})
    report = bounds.stoll_vanishing_sum(curve, subspace)
    out = report.to_dict()
    out["label"] = spec.get("label")
    if args.scan_degree:
        out["scan"] = {"degree": args.scan_degree,
                       "total": bounds.points_vanishing_scan(curve, subspace, args.scan_degree)}
    return out


# ── rendering ─────────────────────────────────────────────────────────────────

def _tsv(command: str, payload: Dict) -> str:
    lines: List[str] = []
    if command == "frobenius":
        lines.append("curve\tmatrix\trow\tcol\tvalue")
        for index, report in enumerate(payload.get("curves", [payload])):
            for name in ("frobenius", "verschiebung"):
                for r, row in enumerate(report[name]):
                    lines.extend(f"{index}\t{name}\t{r}\t{c}\t{v}" for c, v in enumerate(row))
    elif command == "coleman":
        lines.append("i\tn\tk\tvaluation")
        vals = payload["valuations"]
        for i, (n, k) in enumerate(zip(payload["n"], payload["k"])):
            lines.append(f"{i}\t{n}\t{k}\t{vals[n] if n < len(vals) else ''}")
        if "verdict" in payload:
            lines.append(f"verdict\t{payload['verdict']}\t{payload['reason']}\t")
        if "_polygon_tsv" in payload:
            lines.append("")
            lines.append(payload["_polygon_tsv"].rstrip("\n"))
    elif command == "stoll":
        lines.append("kind\tfactor\tpoints\tn")
        for row in payload["rows"]:
            factor = ",".join(str(c) for c in row["factor"])
            lines.append(f"{row['kind']}\t{factor}\t{row['points']}\t{row['n']}")
        lines.append(f"total\t\t\t{payload['total']}")
    else:
        lines.append("key\tvalue")
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, dict):
                lines.extend(f"{key}.{k}\t{value[k]}" for k in sorted(value))
            elif isinstance(value, list):
                lines.append(f"{key}\t{';'.join(str(v) for v in value)}")
            else:
                lines.append(f"{key}\t{value}")
    return "\n".join(lines) + "\n"


def render(command: str, payload: Dict, fmt: str) -> str:
    if fmt == "tsv":
        return _tsv(command, payload)
    return dumps({k: v for k, v in payload.items() if not k.startswith("_")})


# ── parser ────────────────────────────────────────────────────────────────────

class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"ERROR: {message}", file=sys.stderr)
        sys.exit(1)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "tsv"], default="json",
                        help="Output format (default: json).")
    parser.add_argument("--output", default=None,
                        help="Write the primary output here instead of stdout.")
    parser.add_argument("--run-dir", default=None,
                        help="Manifest directory. Defaults to $PADIC_JETS_RUN_DIR or ./padic_jets_runs")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr.")


def _add_curve_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--curve-name", default=None, help="Use a stored curve instead of a file.")
    parser.add_argument("--precision", type=int, default=None,
                        help="p-adic precision N. Defaults to the file value, "
                             "$PADIC_JETS_PRECISION, or 10.")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padic-jets",
                     description="p-adic jets, Frobenius on hyperelliptic curves and counting bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="Evaluate a counting bound.")
    p_bound.add_argument("kind", choices=BOUND_KINDS)
    for name in ("g", "r", "p", "n", "m", "d"):
        p_bound.add_argument(f"--{name}", type=int, default=None)
    p_bound.add_argument("--residue-points", type=int, default=None)
    p_bound.add_argument("--red-bound", type=int, default=None)
    p_bound.add_argument("--stoll-total", type=int, default=None)
    _add_common(p_bound)
    p_bound.set_defaults(handler=cmd_bound)

    p_frob = sub.add_parser("frobenius", help="Frobenius matrix with zeta cross-checks.")
    p_frob.add_argument("curves", nargs="*", help="Curve JSON files, processed in order.")
    _add_curve_args(p_frob)
    p_frob.add_argument("--working-precision", type=int, default=None)
    p_frob.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1).")
    _add_common(p_frob)
    p_frob.set_defaults(handler=cmd_frobenius)

    p_col = sub.add_parser("coleman", help="Coleman sequence and unramified verdict.")
    p_col.add_argument("curve", nargs="?", default=None)
    _add_curve_args(p_col)
    p_col.add_argument("--omega", default=None, help="Class coordinates, comma-separated (default: 1).")
    p_col.add_argument("--point", default=None,
                       help="'x,y', 'x,0' or 'infinity'; extension digits joined by ':'.")
    p_col.add_argument("--degree", type=int, default=1, help="Residue degree of the point.")
    p_col.add_argument("--length", type=int, default=5)
    p_col.add_argument("--lambda", dest="lam", default=None, help="Valuation c/d to test.")
    p_col.add_argument("--literal-k0", action="store_true")
    p_col.add_argument("--expansion", type=int, default=None, metavar="TERMS",
                       help="Also expand the integral on the disc to this many terms.")
    _add_common(p_col)
    p_col.set_defaults(handler=cmd_coleman)

    p_stoll = sub.add_parser("stoll", help="Vanishing table for a subspace of differentials.")
    p_stoll.add_argument("curve", nargs="?", default=None)
    _add_curve_args(p_stoll)
    p_stoll.add_argument("--basis", required=True,
                         help="Polynomials h separated by ';', coefficients low-to-high.")
    p_stoll.add_argument("--scan-degree", type=int, default=None,
                         help="Also scan X(F_p^k) pointwise as a cross-check.")
    _add_common(p_stoll)
    p_stoll.set_defaults(handler=cmd_stoll)
    return parser


# ── entry point ───────────────────────────────────────────────────────────────

def main(argv: Optional[Sequence[str]] = None) -> None:
    """Run one padic-jets command; exits non-zero on failure."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    handler: Callable = args.handler
    manifest = RunManifest(command=argv, subcommand=args.command)
    start = time.monotonic()
    code = 0
    try:
        if getattr(args, "jobs", 1) < 1:
            raise InputError("--jobs must be at least 1")
        payload = handler(args, manifest)
        text = render(args.command, payload, args.format)
        if args.output:
            atomic_write_text(args.output, text)
            manifest.outputs.append(args.output)
        else:
            sys.stdout.write(text)
            manifest.outputs.append("<stdout>")
    except PadicJetsError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        code = exit_code_for(exc)
    finally:
        manifest.wall_time = time.monotonic() - start
        manifest.exit_code = code
        manifest.versions = _versions()
        try:
            atomic_write_json(_manifest_path(args, manifest), manifest.to_dict())
        except OSError as exc:
            logger.warning(f"could not write run manifest: {exc}")
    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()
