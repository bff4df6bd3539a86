"""Command-line front end emitting plot-ready CSV/JSON artifacts.

Subcommands: inversion, wigner, purity, revival, validate.
Exit codes: 0 success or all checks passed, 1 usage error, 2 validation
failure, 3 I/O error.

Data files are written atomically (temp file + rename), so a failed run
never leaves a partial artifact. Floats use 17-significant-digit formatting
for lossless round trips. The optional --plot flag renders a PNG next to
the data file; the data bytes never depend on it.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

import numpy as np

from . import observables, oracle
from .hilbert import CutoffError, FockCutoff, cutoff_for_coherent
from .jc import JcParams, ResonanceError
from .numerics import plane_rule
from .wigner import AxisSpec, wigner_grid

FMT = ".17g"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to status 2; contract wants 1
        raise _UsageError(message)


def _f(x: float) -> str:
    return format(x, FMT)


def _write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".jcphase-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _add_shared(parser):
    parser.add_argument("--omega", type=float, default=1.0, help="field frequency")
    parser.add_argument("--Omega", type=float, default=1.0, help="qubit splitting")
    parser.add_argument("--g", type=float, default=1.0, help="coupling strength")
    parser.add_argument("--alpha-re", type=float, default=1.0, help="Re of coherent amplitude")
    parser.add_argument("--alpha-im", type=float, default=0.0, help="Im of coherent amplitude")
    parser.add_argument("--alpha", type=float, default=None,
                        help="shorthand for a real coherent amplitude (overrides --alpha-re)")
    parser.add_argument("--fock", type=int, default=None, metavar="R",
                        help="use the Fock level R instead of a coherent field")
    parser.add_argument("--cutoff", type=int, default=None,
                        help="Fock truncation override (default: auto rule)")
    parser.add_argument("--t-max", type=float, default=30.0, help="end of the time window")
    parser.add_argument("--steps", type=int, default=600,
                        help="number of steps; the grid has steps+1 samples")
    parser.add_argument("--out", type=str, default=None, help="output path")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--seed", type=int, default=12345, help="campaign seed")
    parser.add_argument("--plot", action="store_true",
                        help="also render a PNG figure next to the data file")


def build_parser() -> _Parser:
    parser = _Parser(prog="jcphase", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_inv = sub.add_parser("inversion", help="occupation probabilities and inversion")
    _add_shared(p_inv)

    p_wig = sub.add_parser("wigner", help="Wigner function grids")
    _add_shared(p_wig)
    p_wig.add_argument("--t", type=float, default=0.0, help="evaluation time")
    p_wig.add_argument("--reduced", choices=("field", "qubit", "none"), default="field")
    p_wig.add_argument("--grid", type=str, default=None,
                       help="axis spec like 're=-4:4:64,im=-4:4:64,theta=1.57,phi=0'")

    p_pur = sub.add_parser("purity", help="reduced-field purity over time")
    _add_shared(p_pur)
    p_pur.add_argument("--paper-series", action="store_true",
                       help="add the closed-form series column for comparison")

    p_rev = sub.add_parser("revival", help="revival times and detected peaks")
    _add_shared(p_rev)
    p_rev.add_argument("--k-max", type=int, default=3, help="highest revival order")

    p_val = sub.add_parser("validate", help="run the cross-validation campaign")
    _add_shared(p_val)
    p_val.add_argument("--points", type=int, default=200, help="phase points per check")
    p_val.add_argument("--times", type=int, default=10, help="time samples per check")
    p_val.add_argument("--purity-pairs", type=int, default=50)
    p_val.add_argument("--gt-max", type=float, default=20.0)
    return parser


def _params(args) -> JcParams:
    try:
        return JcParams(args.omega, args.Omega, args.g)
    except ValueError as exc:
        raise _UsageError(f"--omega/--Omega/--g: {exc}") from exc


def _alpha(args) -> complex:
    if args.alpha is not None:
        return complex(args.alpha, 0.0)
    return complex(args.alpha_re, args.alpha_im)


def _cutoff(args, alpha: complex) -> FockCutoff:
    if args.cutoff is not None:
        try:
            return FockCutoff(args.cutoff)
        except ValueError as exc:
            raise _UsageError(f"--cutoff: {exc}") from exc
    if args.fock is not None:
        return FockCutoff(args.fock + 12)
    return cutoff_for_coherent(alpha)


def _times(args) -> np.ndarray:
    if args.steps < 1:
        raise _UsageError("--steps must be >= 1")
    if args.t_max <= 0:
        raise _UsageError("--t-max must be positive")
    return np.linspace(0.0, args.t_max, args.steps + 1)


def _require_resonant(args, params: JcParams):
    try:
        params.require_resonant()
    except ResonanceError as exc:
        raise _UsageError(f"--omega/--Omega: {exc}") from exc


def cmd_inversion(args) -> int:
    params = _params(args)
    _require_resonant(args, params)
    alpha = _alpha(args)
    cutoff = _cutoff(args, alpha)
    times = _times(args)
    pe = observables.p_excited(times, alpha, params, cutoff, fock=args.fock)
    pg = observables.p_ground(times, alpha, params, cutoff, fock=args.fock)
    z = pe - pg
    lines = ["t,Pe,Pg,Z"]
    for row in zip(times, pe, pg, z):
        lines.append(",".join(_f(v) for v in row))
    out = args.out or "inversion.csv"
    _write_atomic(out, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        plotting.save_curves(times, {"Pe": pe, "Pg": pg, "Z": z},
                             _png_path(out), title="atomic inversion")
    print(f"wrote {out} ({times.size} rows)")
    return EXIT_OK


def _parse_grid_spec(text: str | None, defaults: dict) -> list:
    """Parse 'name=min:max:count' or 'name=value' comma-separated specs."""
    spec = dict(defaults)
    if text:
        for chunk in text.split(","):
            if "=" not in chunk:
                raise _UsageError(f"--grid: malformed entry {chunk!r}")
            name, _, body = chunk.partition("=")
            key = {"re": "re_beta", "im": "im_beta"}.get(name.strip(), name.strip())
            parts = body.split(":")
            try:
                if len(parts) == 1:
                    spec[key] = (float(parts[0]), float(parts[0]), 1)
                elif len(parts) == 3:
                    spec[key] = (float(parts[0]), float(parts[1]), int(parts[2]))
                else:
                    raise ValueError("expected value or min:max:count")
            except ValueError as exc:
                raise _UsageError(f"--grid {chunk!r}: {exc}") from exc
    unknown = set(spec) - {"theta", "phi", "re_beta", "im_beta"}
    if unknown:
        raise _UsageError(f"--grid: unknown axes {sorted(unknown)}")
    return [AxisSpec(name, lo, hi, count) for name, (lo, hi, count) in spec.items()]


def cmd_wigner(args) -> int:
    params = _params(args)
    _require_resonant(args, params)
    alpha = _alpha(args)
    cutoff = _cutoff(args, alpha)
    span = abs(alpha) + 3.0 if args.fock is None else math.sqrt(args.fock + 1) + 3.0
    if args.reduced == "field":
        kind = "reduced_field"
        defaults = {"re_beta": (-span, span, 64), "im_beta": (-span, span, 64)}
    elif args.reduced == "qubit":
        kind = "reduced_qubit"
        defaults = {"theta": (0.0, math.pi, 64), "phi": (0.0, 2 * math.pi, 64)}
    else:
        kind = "fock_mode" if args.fock is not None else "full"
        defaults = {
            "theta": (math.pi / 2, math.pi / 2, 1),
            "phi": (0.0, 0.0, 1),
            "re_beta": (-span, span, 64),
            "im_beta": (-span, span, 64),
        }
    axes = _parse_grid_spec(args.grid, defaults)
    try:
        grid = wigner_grid(axes, args.t, alpha, params, cutoff, kind=kind, fock=args.fock)
    except (CutoffError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc
    out = args.out or f"wigner.{args.format}"
    _write_atomic(out, grid.to_json() + "\n" if args.format == "json" else grid.to_csv(FMT))
    if args.plot:
        from . import plotting

        plotting.save_wigner_heatmap(grid, _png_path(out))
    print(f"wrote {out} ({grid.values.size} values)")
    return EXIT_OK


def cmd_purity(args) -> int:
    params = _params(args)
    _require_resonant(args, params)
    alpha = _alpha(args)
    if args.fock is not None:
        raise _UsageError("--fock: purity is defined for the coherent initial state")
    cutoff = _cutoff(args, alpha)
    times = _times(args)
    xi = np.array([
        observables.purity_phase_space(t, alpha, params, cutoff) for t in times
    ])
    columns = ["t", "xi_phase_space"]
    data = [times, xi]
    if args.paper_series:
        columns.append("xi_paper_series")
        data.append(np.array([
            observables.purity_paper_series(t, alpha, params, cutoff) for t in times
        ]))
    lines = [",".join(columns)]
    for row in zip(*data):
        lines.append(",".join(_f(v) for v in row))
    asym = observables.purity_asymptote(alpha)
    lines.append(f"# purity_asymptote = {_f(asym)}")
    out = args.out or "purity.csv"
    _write_atomic(out, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        curves = {"xi_phase_space": xi}
        if args.paper_series:
            curves["xi_paper_series"] = data[2]
        plotting.save_curves(times, curves, _png_path(out),
                             title="reduced-field purity",
                             hlines={"asymptote": asym})
    print(f"wrote {out} ({times.size} rows)")
    return EXIT_OK


def cmd_revival(args) -> int:
    params = _params(args)
    _require_resonant(args, params)
    alpha = _alpha(args)
    if args.fock is not None:
        raise _UsageError("--fock: revivals need a coherent field (spread of Fock levels)")
    if abs(alpha) == 0:
        raise _UsageError("--alpha: revival times are undefined for the vacuum")
    if args.k_max < 1:
        raise _UsageError("--k-max must be >= 1")
    cutoff = _cutoff(args, alpha)
    lines = ["k,t_rev_predicted,t_peak_detected,env_peak"]
    rows = []
    for k in range(1, args.k_max + 1):
        t_rev = observables.revival_times(k, alpha, params)
        t_peak, height = observables.detect_revival_peak(alpha, params, cutoff, k=k)
        rows.append((k, t_rev, t_peak, height))
        lines.append(f"{k},{_f(t_rev)},{_f(t_peak)},{_f(height)}")
    out = args.out or "revival.csv"
    _write_atomic(out, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        t_hi = 1.4 * observables.revival_times(args.k_max, alpha, params)
        times = np.linspace(0.0, t_hi, 4000)
        z = observables.atomic_inversion(times, alpha, params, cutoff)
        plotting.save_curves(times, {"Z": z}, _png_path(out), title="collapse and revival")
    print(f"wrote {out} ({len(rows)} revival orders)")
    return EXIT_OK


def cmd_validate(args) -> int:
    config = oracle.CampaignConfig(
        alphas=(0.0, 1.0, 2.0),
        gt_max=args.gt_max,
        n_times=args.times,
        n_points=args.points,
        n_purity_pairs=args.purity_pairs,
        seed=args.seed,
        omega=args.omega,
        g=args.g,
    )
    report = oracle.crosscheck_campaign(config)
    out = args.out or "validate.json"
    _write_atomic(out, report.to_json())
    for record in report.records:
        status = "PASS" if record.passed else "FAIL"
        print(f"{status} {record.name}: max_abs_error={record.max_abs_error:.3e} "
              f"tol={record.tolerance:.1e}")
    print(f"wrote {out} ({'all passed' if report.passed else 'FAILURES PRESENT'})")
    return EXIT_OK if report.passed else EXIT_VALIDATION


def _png_path(out: str) -> str:
    stem, _ = os.path.splitext(out)
    return stem + ".png"


_COMMANDS = {
    "inversion": cmd_inversion,
    "wigner": cmd_wigner,
    "purity": cmd_purity,
    "revival": cmd_revival,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"jcphase: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"jcphase: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResonanceError, CutoffError, ValueError) as exc:
        print(f"jcphase: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"jcphase: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
