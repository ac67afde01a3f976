"""Command-line front end: ``metric-ripple SUBCOMMAND [flags]``.

Subcommands: table1, cobweb, two-slit, geodesic, pulse, check.
Exit codes: 0 success, 1 validation/usage error, 2 non-convergence or
oracle failure.

Config files are flat ``key = value`` text, one pair per line, ``#``
comments. Command-line flags override file values.
"""
import argparse
from dataclasses import dataclass, fields, replace, asdict
import math
import os
import sys

import numpy as np

from . import checks, fringe, geodesic, interference, pulse
from .constants import CODATA
from .gauge import check_tt
from .metric import GaussianPacket, SymTensor3

MODES = ("table1", "cobweb", "two-slit", "geodesic", "pulse", "check")
EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


class ScenarioError(ValueError):
    pass


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Scenario:
    mode: str = "table1"
    # two-slit geometry (Table I)
    d: float = interference.TABLE1_D_SLITS
    D: float = interference.TABLE1_SCREEN
    lam: float = interference.TABLE1_WAVELENGTH
    # packet; omega = None means c * k'
    a11: float = 0.0
    a12: float = math.sqrt(interference.TABLE1_A12_SQUARED)
    a13: float = 0.0
    a22: float = 0.0
    a23: float = 0.0
    a33: float = 0.0
    sigma: float = interference.DEFAULT_SIGMA
    omega: float | None = None
    z_center: float = 0.0
    y0: float | None = None
    # fringe map; a2 is A_12**2 given directly (sqrt(6e-6)**2 != 6e-6 in floats)
    a2: float = interference.TABLE1_A12_SQUARED
    x0: float = fringe.TABLE1_SEED
    n_iter: int = len(fringe.TABLE1_COLUMN1) - 1
    tol: float = fringe.DEFAULT_TOL
    max_iter: int = fringe.DEFAULT_MAX_ITER
    literal_table_d: bool = False
    exact_pi: bool = False
    # geodesic; t_end/dt = None means one period / steps_per_period
    position0: tuple = (0.0, 6e-6, 0.0)
    velocity0: tuple = (0.0, 0.0, 0.0)
    t_end: float | None = None
    dt: float | None = None
    steps_per_period: int = 1000
    sampling: str = "initial"
    # pulse
    a: float = 1.0
    m: float = CODATA.electron_mass
    dt_interaction: float = pulse.DEFAULT_DT_INTERACTION
    convention: str = "standard"
    regularization: float = 0.0
    check_oracle: bool = False
    oracle_samples: int = 200
    seed: int = 0
    # output
    profile: tuple | None = None
    out: str = "."


ALIASES = {"lambda": "lam", "max-iter": "max_iter"}
_FIELDS = {f.name: f for f in fields(Scenario)}


def _parse_bool(text):
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def parse_profile(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("profile must be MIN:MAX:N")
    lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    return (lo, hi, n)


def _convert(name, raw):
    if name in ("mode", "convention", "sampling", "out"):
        return raw.strip()
    if name in ("literal_table_d", "exact_pi", "check_oracle"):
        return _parse_bool(raw)
    if name in ("n_iter", "max_iter", "steps_per_period", "oracle_samples", "seed"):
        return int(raw)
    if name in ("position0", "velocity0"):
        vals = tuple(float(v) for v in raw.split(","))
        if len(vals) != 3:
            raise ValueError("expected three comma-separated numbers")
        return vals
    if name == "profile":
        return parse_profile(raw)
    if name in ("omega", "t_end", "dt", "y0") and raw.strip().lower() in ("", "none", "auto"):
        return None
    return float(raw)


def parse_config_text(text, source="<config>"):
    """Parse ``key = value`` lines into a dict of converted values."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"{source}:{lineno}: expected 'key = value'")
        key, raw = (s.strip() for s in line.split("=", 1))
        name = ALIASES.get(key, key)
        if name not in _FIELDS:
            raise ScenarioError(f"{source}:{lineno}: unknown key {key!r}")
        try:
            values[name] = _convert(name, raw)
        except ValueError as exc:
            raise ScenarioError(f"{source}:{lineno}: bad value for {key!r}: {exc}") from None
    return values


def validate(sc):
    """Raise ``ScenarioError`` naming the first field that breaks a precondition."""
    def bad(name, why):
        raise ScenarioError(f"invalid {name!r}: {why}")

    if sc.mode not in MODES:
        bad("mode", f"must be one of {', '.join(MODES)}")
    for name in ("d", "D", "lam", "sigma", "m", "dt_interaction", "tol", "a2"):
        val = getattr(sc, name)
        if not (val > 0):
            bad(name, "must be > 0")
    for name in ("max_iter", "n_iter", "steps_per_period", "oracle_samples"):
        if getattr(sc, name) < 1:
            bad(name, "must be >= 1")
    if sc.omega is not None and not sc.omega >= 0:
        bad("omega", "must be >= 0")
    if sc.dt is not None and not sc.dt > 0:
        bad("dt", "must be > 0")
    if sc.t_end is not None and not sc.t_end >= 0:
        bad("t_end", "must be >= 0")
    if sc.regularization < 0:
        bad("regularization", "must be >= 0")
    if sc.convention not in pulse.CONVENTIONS:
        bad("convention", f"must be one of {', '.join(pulse.CONVENTIONS)}")
    if sc.sampling not in geodesic.SAMPLING_MODES:
        bad("sampling", f"must be one of {', '.join(geodesic.SAMPLING_MODES)}")
    if sc.profile is not None:
        lo, hi, n = sc.profile
        if n < 2:
            bad("profile", "N must be >= 2")
        if not lo < hi:
            bad("profile", "MIN must be < MAX")
    amps = [getattr(sc, f"a{jk}") for jk in ("11", "12", "13", "22", "23", "33")]
    if any(abs(v) >= 1 for v in amps):
        bad("a12" if abs(sc.a12) >= 1 else "amplitude", "entries must satisfy |A_jk| < 1")
    for name in ("position0", "velocity0"):
        if not all(math.isfinite(v) for v in getattr(sc, name)):
            bad(name, "must be finite")
    return sc


def load_scenario(path=None, overrides=None):
    """Build a validated Scenario from an optional config file plus overrides."""
    values = {}
    if path is not None:
        if not os.path.isfile(path):
            raise ScenarioError(f"config file not found: {path}")
        with open(path, encoding="utf-8") as fh:
            values.update(parse_config_text(fh.read(), source=str(path)))
    values.update(overrides or {})
    return validate(replace(Scenario(), **values))


# -- building library objects from a scenario ---------------------------------

def _packet(sc):
    k = 2 * math.pi / sc.lam
    omega = CODATA.c * k if sc.omega is None else sc.omega
    amp = SymTensor3.from_components(a11=sc.a11, a12=sc.a12, a13=sc.a13,
                                     a22=sc.a22, a23=sc.a23, a33=sc.a33)
    return GaussianPacket(amp, k, omega, sc.z_center, sc.sigma)


def _fringe_map(sc):
    pi_value = math.pi if sc.exact_pi else fringe.TABLE1_PI
    d = fringe.TABLE1_LITERAL_D if sc.literal_table_d else sc.d
    return fringe.FringeMap.from_geometry(sc.a2, sc.lam, d, sc.D, pi_value)


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(v)
    return f"{float(v):.8e}"


def _csv(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


# -- subcommands: each returns (exit code, summary lines, {filename: text}) ---

def _cmd_table1(sc):
    fmap = _fringe_map(sc)
    trace = fringe.iterate(fmap, sc.x0, sc.n_iter)
    sol = fringe.solve_fixed_point(fmap, sc.x0, sc.tol, sc.max_iter)
    files = {"iterates.csv": _csv(["n", "x"], enumerate(trace.iterates))}
    lines = [f"map: a2 = {fmap.a2:.6e} m, c = {fmap.c:.6e} 1/m"
             + (" (literal d = 0.5e-11 m)" if sc.literal_table_d else "")]
    if not sol.converged:
        lines.append(f"fixed point: NOT converged after {sc.max_iter} iterations")
        return EXIT_FAILED, lines, files
    lines.append(f"fixed point: {sol.fixed_point:.2e} m ({sol.fixed_point:.8e} m, "
                 f"{len(sol.iterates) - 1} iterations, residual {sol.residual:.2e} m)")
    lines.append(f"|f'(x*)| = {abs(sol.slope):.4f}")
    lines.extend(sol.notes)
    if sol.attracting:
        lines.append(f"fringe width 2x*: {2 * sol.fixed_point:.4e} m")
    if len(trace.iterates) >= 6:
        lines.append(f"fringe width 2*row6 (transient convention): {2 * trace.iterates[5]:.4e} m")
    return EXIT_OK, lines, files


def _cmd_cobweb(sc):
    fmap = _fringe_map(sc)
    pts = fringe.cobweb_data(fmap, sc.x0, sc.n_iter)
    x = np.linspace(0.0, max(fmap.a2, abs(sc.x0)) * 1.1, 201)
    files = {"cobweb.csv": _csv(["x", "y"], pts),
             "map_curve.csv": _csv(["x", "f_x"], zip(x, fmap(x)))}
    return EXIT_OK, [f"cobweb: {len(pts)} vertices from x0 = {sc.x0:.4e} m"], files


def _cmd_two_slit(sc):
    setup = interference.TwoSlitSetup(sc.d, sc.D, sc.lam, _packet(sc))
    lo, hi, n = sc.profile or (-2e-5, 2e-5, 401)
    y0 = sc.y0 if sc.y0 is not None else abs(sc.a12)
    samples = interference.screen_profile(setup, lo, hi, n, y0=y0)
    rows = [(s.x, s.delta_z, s.displacement, s.psi[0, 1].real, s.psi[0, 1].imag)
            for s in samples]
    files = {"profile.csv": _csv(["x", "delta_z", "displacement", "psi12_re", "psi12_im"], rows)}
    lines = [f"on-axis displacement: {interference.displacement_x(setup, y0, 0.0):.6e} m",
             f"fringe spacing lambda*D/d: {setup.fringe_spacing:.6e} m",
             f"samples: {n} over [{lo:.3e}, {hi:.3e}] m"]
    return EXIT_OK, lines, files


def _cmd_geodesic(sc):
    p = _packet(sc)
    report = check_tt(p.amplitude, (0.0, 0.0, 1.0), 1e-12)
    if not report.passed:
        raise ScenarioError(f"invalid 'amplitude': {report}")
    if p.omega > 0:
        t_end = sc.t_end if sc.t_end is not None else p.period
        dt = sc.dt if sc.dt is not None else p.period / sc.steps_per_period
    else:
        t_end = sc.t_end if sc.t_end is not None else 1.0
        dt = sc.dt if sc.dt is not None else t_end / sc.steps_per_period
    try:
        traj = geodesic.integrate_deviation(p, sc.position0, sc.velocity0, t_end, dt,
                                            sc.sampling)
        err = geodesic.deviation_report(p, sc.position0, sc.velocity0, t_end, dt,
                                        sc.sampling)
    except ValueError as exc:
        raise ScenarioError(f"invalid 'dt': {exc}") from None
    closed = np.array([geodesic.closed_form_position(p, sc.position0, sc.velocity0, t,
                                                     sc.sampling) for t in traj.t])
    rows = np.column_stack([traj.t, traj.positions, closed])
    files = {"trajectory.csv": _csv(["t", "x", "y", "z", "closed_x", "closed_y", "closed_z"],
                                    rows)}
    scale = max(float(np.linalg.norm(sc.position0)), 1e-300)
    lines = [str(report),
             f"steps: {len(traj) - 1}, dt = {dt:.4e} s, t_end = {t_end:.4e} s",
             f"max |closed form - RK4|: {err:.4e} m ({err / scale:.4e} relative to |x0|)"]
    return EXIT_OK, lines, files


def _cmd_pulse(sc):
    params = pulse.TransferParams(sc.a, sc.m, sc.dt_interaction)
    inp = pulse.PulseInput.free_electron(sc.lam, m=sc.m)
    lo, hi, n = sc.profile or (-5e-11, 5e-11, 401)
    xs = np.linspace(lo, hi, n)
    vals = pulse.psi_out(xs, 0.0, inp, params, sc.convention, sc.regularization)
    files = {"pulse.csv": _csv(["x", "re", "im", "abs"],
                               zip(xs, vals.real, vals.imag, np.abs(vals)))}
    lines = [f"alpha = {params.alpha.imag:.6e}i m^2 ({sc.convention} convention)",
             f"pulse speed v = {inp.v:.6e} m/s, k' = {inp.k_prime:.6e} 1/m"]
    code = EXIT_OK
    if sc.check_oracle:
        res = checks.gaussian_oracle(sc.oracle_samples, sc.seed)
        lines.append(f"max closed-vs-quadrature relative error: {res.value:.3e} "
                     f"(limit 1e-6) {'ok' if res.passed else 'FAILED'}")
        if not res.passed:
            code = EXIT_FAILED
    return code, lines, files


def _cmd_check(sc):
    results = checks.run_all()
    lines = [r.line() for r in results]
    rows = ["name,value,limit,passed"]
    rows += [f"\"{r.name}\",{_fmt(r.value)},{_fmt(r.limit)},{int(r.passed)}" for r in results]
    code = EXIT_OK if all(r.passed for r in results) else EXIT_FAILED
    return code, lines, {"check.csv": "\n".join(rows) + "\n"}


COMMANDS = {
    "table1": _cmd_table1,
    "cobweb": _cmd_cobweb,
    "two-slit": _cmd_two_slit,
    "geodesic": _cmd_geodesic,
    "pulse": _cmd_pulse,
    "check": _cmd_check,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--config", metavar="PATH")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--tol", type=float)
    common.add_argument("--max-iter", type=int, dest="max_iter")
    common.add_argument("--profile", metavar="MIN:MAX:N")
    common.add_argument("--x0", type=float)
    common.add_argument("--lambda", type=float, dest="lam")
    common.add_argument("--convention", choices=pulse.CONVENTIONS)
    common.add_argument("--literal-table-d", action="store_true", default=None,
                        dest="literal_table_d")
    common.add_argument("--exact-pi", action="store_true", default=None, dest="exact_pi",
                        help="use full-precision pi in the fringe map gain")
    common.add_argument("--check-oracle", action="store_true", default=None,
                        dest="check_oracle")
    common.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        help="override any config key")
    common.add_argument("--show-config", action="store_true")

    parser = _Parser(prog="metric-ripple",
                     description="Metric-perturbation two-slit model: numerics and oracles.")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    for name in MODES:
        sub.add_parser(name, parents=[common])
    return parser


def _overrides(args):
    out = {}
    for item in args.set:
        if "=" not in item:
            raise ScenarioError(f"--set expects KEY=VALUE, got {item!r}")
        out.update(parse_config_text(item, source="--set"))
    for name in ("out", "tol", "max_iter", "x0", "lam", "convention",
                 "literal_table_d", "exact_pi", "check_oracle"):
        val = getattr(args, name)
        if val is not None:
            out[name] = val
    if args.profile is not None:
        try:
            out["profile"] = parse_profile(args.profile)
        except ValueError as exc:
            raise ScenarioError(f"invalid 'profile': {exc}") from None
    out["mode"] = args.command
    return out


def _show_config(sc):
    return [f"{k} = {v}" for k, v in asdict(sc).items()]


def _write_outputs(out_dir, files):
    os.makedirs(out_dir, exist_ok=True)
    for name, text in files.items():
        path = os.path.join(out_dir, name)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)


def _join_negative_values(argv):
    # argparse mistakes "--profile -2e-5:2e-5:401" for two flags
    out = []
    it = iter(argv)
    for arg in it:
        if arg in ("--profile", "--x0", "--lambda", "--tol"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{arg}={nxt}")
                continue
            out.append(arg)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(arg)
    return out


def run(argv=None, stdout=None, stderr=None):
    """Run one CLI invocation and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _join_negative_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage() + "metric-ripple: error: missing subcommand")
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INVALID

    try:
        sc = load_scenario(args.config, _overrides(args))
        if args.show_config:
            print("\n".join(_show_config(sc)), file=stdout)
            return EXIT_OK
        code, lines, files = COMMANDS[sc.mode](sc)
    except ValueError as exc:
        print(f"metric-ripple: {exc}", file=stderr)
        return EXIT_INVALID
    print("\n".join(lines), file=stdout)
    _write_outputs(sc.out, files)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
