"""Command-line front end.

Subcommands: compute, classify, fig1, fig2, scatter, threshold, oracle.
Ranges are written ``min:max:count`` (inclusive, evenly spaced).  Output goes
to ``--output`` if given, else to ``$CVERGO_OUTPUT_DIR/<command>.<ext>`` if
that variable is set, else to stdout.

Exit status: 0 success, 1 numerical failure, 2 usage / precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys

import numpy as np

from . import fock_oracle
from .correlations import correlation_report
from .energetics import ModePair, ergotropy_report
from .exceptions import CVErgoError, InvalidParamsError, SubtractionFromVacuumError
from .phase_space import BlochMessiahParams, standard_form, symplectic_eigenvalues
from .states import (
    SamplerRanges,
    StateRecord,
    Family,
    bell_mixture_cm,
    compose_bloch_messiah,
    fock_superposition_cm,
    load_state,
    moments_from_cm,
    photon_subtracted_tms,
    random_params,
    tms,
    tms_bloch_messiah,
)
from .witnesses import (
    GridSpec,
    classify,
    photon_subtracted_surface,
    ppt_separable,
    reg_threshold_search,
    sv_witness,
)

log = logging.getLogger("cvergo")

OUTPUT_ENV = "CVERGO_OUTPUT_DIR"


class UsageError(Exception):
    pass


def parse_range(text):
    try:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected min:max:count, got {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError("range count must be >= 2")
    if not hi > lo:
        raise argparse.ArgumentTypeError("range needs max > min")
    return lo, hi, n


def parse_grid(text):
    try:
        nk, nz = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NKxNZ, got {text!r}") from None
    if nk < 2 or nz < 2:
        raise argparse.ArgumentTypeError("grid sizes must be >= 2")
    return nk, nz


def _axis(spec):
    lo, hi, n = spec
    return np.linspace(lo, hi, n)


def _fmt(x):
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    if x is None:
        return ""
    return str(x)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else None
    if isinstance(obj, np.bool_):
        return bool(obj)
    if hasattr(obj, "value") and not isinstance(obj, (int, str)):
        return obj.value
    if isinstance(obj, str) and hasattr(obj, "value"):
        return obj.value
    return obj


def _rows_to_text(header, rows, fmt):
    if fmt == "json":
        data = [dict(zip(header, (_jsonable(v) for v in row))) for row in rows]
        return json.dumps(data, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _emit(args, text, ext):
    path = args.output
    if path is None and os.environ.get(OUTPUT_ENV):
        os.makedirs(os.environ[OUTPUT_ENV], exist_ok=True)
        path = os.path.join(os.environ[OUTPUT_ENV], f"{args.command}.{ext}")
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _modes(args):
    if args.alpha is not None:
        return ModePair.from_ratio(args.alpha, args.omega_a)
    return ModePair(args.omega_a, args.omega_b)


# ---------------------------------------------------------------------------
# state selection shared by compute / classify


def _state_from_args(args):
    if args.state_file:
        record, modes = load_state(args.state_file)
        if args.alpha is not None or args.omega_b != 1.0 or args.omega_a != 1.0:
            modes = _modes(args)
        return record, modes
    modes = _modes(args)
    fam = args.family
    if fam == "bloch-messiah":
        p = BlochMessiahParams(args.k, args.gamma, args.z_a, args.z_b, args.theta,
                               args.phi_a, args.phi_b)
        return StateRecord(compose_bloch_messiah(p), Family.BLOCH_MESSIAH, True, vars_of(p)), modes
    if fam == "tms":
        return StateRecord(tms(args.k, args.r), Family.TMS, True, {"k": args.k, "r": args.r}), modes
    if fam == "tms-z":
        p = tms_bloch_messiah(args.k, args.z, args.gamma)
        return StateRecord(compose_bloch_messiah(p), Family.BLOCH_MESSIAH, True, vars_of(p)), modes
    if fam == "photon-subtracted":
        return photon_subtracted_tms(args.k, args.z), modes
    if fam == "fock":
        return fock_superposition_cm(args.n, args.m), modes
    if fam == "bell":
        return bell_mixture_cm(args.n, args.lam), modes
    raise UsageError("give --state-file or --family")


def vars_of(params):
    return dict(params.__dict__)


def cmd_compute(args):
    record, modes = _state_from_args(args)
    sigma = record.sigma
    spec = symplectic_eigenvalues(sigma)
    sf = standard_form(sigma)
    out = {
        "family": record.family.value,
        "gaussian": record.gaussian,
        "params": record.params,
        "modes": {"omega_a": modes.omega_a, "omega_b": modes.omega_b},
        "spectrum": {"nu_plus": spec.nu_plus, "nu_minus": spec.nu_minus},
        "standard_form": vars_of(sf),
        "energy": ergotropy_report(sigma, modes).as_dict(),
        "correlations": vars_of(correlation_report(sigma)),
    }
    _emit(args, json.dumps(_jsonable(out), indent=2, sort_keys=True) + "\n", "json")


def cmd_classify(args):
    record, modes = _state_from_args(args)
    sigma = record.sigma
    ok, sv = sv_witness(moments_from_cm(sigma))
    out = {"family": record.family.value, "gaussian": record.gaussian,
           "sv_value": sv, "sv_entangled": ok}
    if record.gaussian:
        v = classify(sigma, modes)
        out.update(vars_of(v))
    else:
        sep, value = ppt_separable(sigma)
        # PPT is only necessary for non-Gaussian states
        out.update({"verdict": "EntangledCertified" if (ok or not sep) else "Indeterminate",
                    "ppt_value": value, "ppt_separable": sep,
                    "source": "sv_or_ppt_violation"})
    _emit(args, json.dumps(_jsonable(out), indent=2, sort_keys=True) + "\n", "json")


FIG1_HEADER = ["k", "z", "reg", "b_sep", "b_ent", "b_sep_minus_reg",
               "ppt_value", "ppt_separable", "verdict"]


def fig1_rows(gamma, alpha, k_axis, z_axis):
    modes = ModePair.from_ratio(alpha)
    rows = []
    for k in k_axis:
        for z in z_axis:
            sigma = compose_bloch_messiah(tms_bloch_messiah(float(k), float(z), gamma))
            v = classify(sigma, modes)
            rows.append([float(k), float(z), v.reg_value, v.bound_sep, v.bound_ent,
                         v.bound_sep - v.reg_value, v.ppt_value, v.ppt_separable,
                         v.verdict.value])
    return rows


def cmd_fig1(args):
    gamma = args.gamma
    k_spec = args.k_range or (1.01 + abs(gamma), 3.0 + abs(gamma), 150)
    if k_spec[0] - abs(gamma) < 1.0 + 1e-9:
        raise UsageError(f"k range must start above 1 + |gamma| = {1 + abs(gamma)}")
    if args.z_range[0] <= 0:
        raise UsageError("z range must be positive")
    if args.alpha < 1:
        raise UsageError("alpha must be >= 1")
    rows = fig1_rows(gamma, args.alpha, _axis(k_spec), _axis(args.z_range))
    _emit(args, _rows_to_text(FIG1_HEADER, rows, args.format), args.format)


FIG2_HEADER = ["k", "z", "reg", "sv_value", "sv_entangled", "reg_above_threshold"]


def cmd_fig2(args):
    k_lo = args.k_range[0]
    z_lo, z_hi, _ = args.z_range
    if k_lo < 1.0 or z_lo <= 0 or z_hi > 1.0:
        raise UsageError("need k >= 1 and 0 < z <= 1")
    ks, zs = _axis(args.k_range), _axis(args.z_range)
    reg, sv, valid = photon_subtracted_surface(ks, zs, args.alpha)
    rows = []
    for i, k in enumerate(ks):
        for j, z in enumerate(zs):
            if not valid[i, j]:
                rows.append([float(k), float(z), None, None, None, None])
                continue
            r = float(reg[i, j])
            rows.append([float(k), float(z), r, float(sv[i, j]), bool(sv[i, j] < -1e-12),
                         bool(r > args.threshold)])
    _emit(args, _rows_to_text(FIG2_HEADER, rows, args.format), args.format)


SCATTER_HEADER = ["index", "theta", "z_a", "z_b", "phi_a", "phi_b", "nu_plus", "nu_minus",
                  "reg", "b_sep", "b_ent", "ppt_value", "ppt_separable", "verdict"]


def scatter_rows(n, k, gamma, alpha, seed, z_min=0.05):
    modes = ModePair.from_ratio(alpha)
    ranges = SamplerRanges(z_min=z_min)
    rows = []
    for i in range(n):
        p = random_params(k, gamma, ranges, seed, i)
        sigma = compose_bloch_messiah(p)
        spec = symplectic_eigenvalues(sigma)
        v = classify(sigma, modes)
        rows.append([i, p.theta, p.z_a, p.z_b, p.phi_a, p.phi_b, spec.nu_plus, spec.nu_minus,
                     v.reg_value, v.bound_sep, v.bound_ent, v.ppt_value, v.ppt_separable,
                     v.verdict.value])
    return rows


def cmd_scatter(args):
    if args.k - abs(args.gamma) < 1.0:
        raise UsageError("need k - |gamma| >= 1")
    if args.n < 1:
        raise UsageError("--n must be positive")
    rows = scatter_rows(args.n, args.k, args.gamma, args.alpha, args.seed, args.z_min)
    _emit(args, _rows_to_text(SCATTER_HEADER, rows, args.format), args.format)


def cmd_threshold(args):
    nk, nz = args.grid
    grid = GridSpec(k_min=args.k_min, k_max=args.k_max, n_k=nk, z_min=args.z_min, n_z=nz,
                    alpha=args.alpha)
    thr, (k, z) = reg_threshold_search(grid)
    out = {"threshold": thr, "k": k, "z": z, "grid": f"{nk}x{nz}",
           "k_range": [grid.k_min, grid.k_max], "z_range": [grid.z_min, grid.z_max]}
    if args.format == "json":
        text = json.dumps(out, indent=2) + "\n"
    else:
        text = f"threshold {thr:.6f} at k={k:.6f} z={z:.6f} (grid {nk}x{nz})\n"
    _emit(args, text, "json" if args.format == "json" else "txt")


ORACLE_HEADER = ["family", "n", "m", "lambda", "std_gap", "gaussian_ergotropy",
                 "gaussian_reg_closed", "gaussian_reg_pipeline"]


def cmd_oracle(args):
    modes = ModePair()
    rows = []
    for n in range(args.max_n + 1):
        for m in range(args.max_n + 1):
            rec = fock_superposition_cm(n, m)
            erg = ergotropy_report(rec.sigma, modes).gaussian_ergotropy_global
            rows.append(["fock", n, m, None, fock_oracle.std_gap_fock_superposition(n, m),
                         erg, None, None])
    for n in range(args.bell_n + 1):
        for lam in np.linspace(0.0, 1.0, args.n_lambda):
            lam = float(lam)
            rows.append(["bell", n, None, lam, fock_oracle.std_gap_bell_mixture(lam), None,
                         fock_oracle.gaussian_reg_bell_mixture(lam, n),
                         fock_oracle.pipeline_reg_bell_mixture(lam, n)])
    _emit(args, _rows_to_text(ORACLE_HEADER, rows, args.format), args.format)


# ---------------------------------------------------------------------------


def _add_common(p, fmt=True):
    p.add_argument("-o", "--output", help="output file (default: stdout or $%s)" % OUTPUT_ENV)
    if fmt:
        p.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_modes(p, alpha_default=None):
    p.add_argument("--omega-a", type=float, default=1.0)
    p.add_argument("--omega-b", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=alpha_default,
                   help="frequency ratio omega_b/omega_a (overrides --omega-b)")


def _add_state(p):
    p.add_argument("--state-file")
    p.add_argument("--family", choices=("bloch-messiah", "tms", "tms-z", "photon-subtracted",
                                        "fock", "bell"))
    for name, default in (("k", 1.0), ("gamma", 0.0), ("z-a", 1.0), ("z-b", 1.0),
                          ("theta", 0.0), ("phi-a", 0.0), ("phi-b", 0.0), ("r", 0.0),
                          ("z", 1.0), ("lam", 0.5)):
        p.add_argument(f"--{name}", type=float, default=default)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)


def build_parser():
    parser = argparse.ArgumentParser(prog="cvergo", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="energetics and correlations of one state (JSON)")
    _add_state(p)
    _add_modes(p)
    _add_common(p, fmt=False)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="entanglement verdict for one state (JSON)")
    _add_state(p)
    _add_modes(p)
    _add_common(p, fmt=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fig1", help="REG vs separability bound over a TMS (k, z) grid")
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--k-range", type=parse_range, default=None,
                   help="default 1.01+|gamma|:3+|gamma|:150")
    p.add_argument("--z-range", type=parse_range, default=(0.05, 1.0, 150))
    _add_common(p)
    p.set_defaults(func=cmd_fig1)

    p = sub.add_parser("fig2", help="photon-subtracted TMS: REG and SV value over (k, z)")
    p.add_argument("--k-range", type=parse_range, default=(1.01, 2.4, 140))
    p.add_argument("--z-range", type=parse_range, default=(0.01, 1.0, 100))
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--threshold", type=float, default=1.11)
    _add_common(p)
    p.set_defaults(func=cmd_fig2)

    p = sub.add_parser("scatter", help="random Bloch-Messiah ensemble with REG bounds")
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--k", type=float, default=2.5)
    p.add_argument("--gamma", type=float, default=0.5)
    p.add_argument("--alpha", type=float, default=10.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--z-min", type=float, default=0.05)
    _add_common(p)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("threshold", help="largest REG among SV-undetected photon-subtracted states")
    p.add_argument("--grid", type=parse_grid, default=(200, 200))
    p.add_argument("--k-min", type=float, default=GridSpec.k_min)
    p.add_argument("--k-max", type=float, default=GridSpec.k_max)
    p.add_argument("--z-min", type=float, default=GridSpec.z_min)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("oracle", help="Fock-family checks: standard vs Gaussian gaps")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--bell-n", type=int, default=3)
    p.add_argument("--n-lambda", type=int, default=101)
    _add_common(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except (UsageError, InvalidParamsError, SubtractionFromVacuumError) as exc:
        print(f"cvergo {args.command}: {exc}", file=sys.stderr)
        return 2
    except CVErgoError as exc:
        where = getattr(args, "state_file", None) or getattr(args, "family", None) or args.command
        print(f"cvergo {args.command}: numerical error for {where}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"cvergo {args.command}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
