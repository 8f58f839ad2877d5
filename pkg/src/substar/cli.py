"""Command-line interface.

Exit codes: 0 evidence/verdict holds, 2 verdict false (counterexample,
failed hypothesis, threshold gap too large), 3 inconclusive (series
truncation guard tripped), 4 bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import warnings
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import criteria, presets
from .errors import ParameterOutOfTheorem, SubstarError
from .power_series import DEFAULT_ORDER, load_series
from .regions import Region, car_margin, region_boundary, sector_margin
from .special_functions import (
    BesselParams,
    KummerParams,
    bessel_u_series,
    bessel_u_sum,
    kummer_series,
    kummer_sum,
    ode_residual_bessel,
    ode_residual_kummer,
)
from .subordination import (
    DEFAULT_RADII,
    DEFAULT_SAMPLES,
    ZF_PRIME_OVER_F,
    ScaledMap,
    SeriesMap,
    TransformSpec,
    apply_transform,
    check_subordination,
)

EXIT_OK, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with "verdict false"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    order: int = DEFAULT_ORDER
    radii: tuple = DEFAULT_RADII
    samples: int = DEFAULT_SAMPLES
    tgrid: int = criteria.TGRID
    out: str | None = None
    format: str = "json"

    def validate(self):
        for name in ("order", "samples", "tgrid"):
            if int(getattr(self, name)) <= 0:
                raise UsageError(f"{name} must be positive")
        r = list(self.radii)
        if not r or any(not 0 < x < 1 for x in r) or any(b <= a for a, b in zip(r, r[1:])):
            raise UsageError("radii must be increasing values in (0, 1)")
        if self.format not in ("json", "csv"):
            raise UsageError("format must be json or csv")
        return self


def _parse_radii(text):
    try:
        return tuple(float(x) for x in str(text).split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad radii list {text!r}") from None


def resolve_config(args) -> RunConfig:
    """Defaults, then the JSON config file, then command-line flags."""
    cfg = RunConfig()
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        unknown = set(data) - set(asdict(cfg))
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        for key, value in data.items():
            setattr(cfg, key, tuple(value) if key == "radii" else value)
    for key in ("order", "samples", "tgrid", "out", "format"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    if getattr(args, "radii", None) is not None:
        cfg.radii = _parse_radii(args.radii)
    return cfg.validate()


def parse_complex(text: str) -> complex:
    s = text.strip().replace(" ", "").replace("I", "j").replace("i", "j")
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def _emit(payload: dict, cfg: RunConfig, stream=None):
    stream = stream or sys.stdout
    if cfg.format == "csv":
        text = "key,value\n" + "".join(f"{k},{json.dumps(v)}\n" for k, v in _flatten(payload))
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    stream.write(text)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    else:
        yield prefix, obj


def _fmt(x: float) -> str:
    # +0.0 folds negative zero so files stay byte-stable
    return f"{float(x) + 0.0:.12g}"


def write_curve(path: Path, t, w):
    w = np.asarray(w, dtype=complex)
    lines = ["t,u,v"] + [f"{_fmt(tt)},{_fmt(ww.real)},{_fmt(ww.imag)}" for tt, ww in zip(t, w)]
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


# -- classify ---------------------------------------------------------------

_CLASS_RE = re.compile(r"^S\*(?:(\()(.*)\)|(\[)(.*)\])?$")


def class_region(name: str, alpha: float | None) -> Region:
    """S* -> Re w > 0; S*(a) -> Re w > a; S*[a] -> sector; SSC -> cardioid."""
    if name.upper() in ("SSC", "S*_C", "SC"):
        return Region.cardioid()
    m = _CLASS_RE.match(name.strip())
    if not m:
        raise UsageError(f"unknown class {name!r}")
    inner = m.group(2) if m.group(1) else m.group(4)
    if inner is None:
        return Region.half_plane()
    if inner.strip().lower() in ("", "a", "alpha", "α"):
        if alpha is None:
            raise UsageError(f"class {name} needs --alpha")
        val = alpha
    else:
        try:
            val = float(inner)
        except ValueError:
            raise UsageError(f"bad order in class {name!r}") from None
    return Region.half_plane(val) if m.group(1) else Region.sector(val)


def _function_params(args):
    return {k: getattr(args, k) for k in ("a", "c", "p", "b", "gamma") if getattr(args, k, None) is not None}


def _need(args, names, what):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{what} needs --{' --'.join(missing)}")


def _load_f(args, cfg):
    if args.f:
        try:
            return SeriesMap(load_series(args.f).truncate(cfg.order), name=args.f)
        except (OSError, json.JSONDecodeError, TypeError) as exc:
            raise UsageError(f"cannot read coefficients from {args.f}: {exc}") from None
    if not args.preset:
        raise UsageError("give --f FILE or --preset NAME")
    if args.preset == "kummer":
        _need(args, ("a", "c"), "preset kummer")
    if args.preset == "bessel":
        _need(args, ("p", "b", "c"), "preset bessel")
    return presets.function_in_a(args.preset, **_function_params(args))


def _exit_for(verdict: str) -> int:
    return {"holds": EXIT_OK, "inconclusive": EXIT_INCONCLUSIVE}.get(verdict, EXIT_FALSE)


def cmd_classify(args, cfg: RunConfig) -> int:
    f = _load_f(args, cfg)
    target = class_region(args.cls, args.alpha)
    p = apply_transform(f, TransformSpec(ZF_PRIME_OVER_F), order=cfg.order)
    report = check_subordination(p, target, cfg.radii, cfg.samples)
    payload = {"function": f.name, "class": args.cls, **report.to_dict()}
    _emit(payload, cfg)
    return _exit_for(report.verdict)


# -- curves -----------------------------------------------------------------

def _image(pmap, r, samples):
    t = np.linspace(-math.pi, math.pi, samples)
    return t, np.asarray(pmap(r * np.exp(1j * t)))


def _figure_items(args):
    """(tag, map, alpha or None) per curve of the requested figure."""
    if args.figure == "fig1":
        return [("q1", presets.q1(), None), ("q2", presets.q2(), None)]
    if args.figure == "fig2":
        if args.a is not None or args.c is not None:
            _need(args, ("a", "c"), "fig2 with custom parameters")
            alpha = args.alpha if args.alpha is not None else criteria.kummer_alpha_min(args.a, args.c) + 0.01
            return [("phi", presets.kummer(args.a, args.c), alpha)]
        return [("phi1", presets.kummer(2, 6), 1 / math.sqrt(6) + 0.01),
                ("phi2", presets.kummer(5, 10), math.sqrt(5) / 4 + 0.01)]
    if args.p is not None or args.b is not None or args.c is not None:
        _need(args, ("p", "b", "c"), "fig3 with custom parameters")
        alpha = args.alpha if args.alpha is not None else criteria.bessel_alpha_min(args.p, args.b, args.c) + 0.01
        return [("u", presets.bessel(args.p, args.b, args.c), alpha)]
    return [("u2", presets.bessel(2, 2, 6), 3 / 5 + 0.01), ("u7", presets.bessel(7, 6, 10), 5 / 19 + 0.01)]


def _region_from_args(args) -> Region:
    if args.region in ("car", "cardioid"):
        return Region.cardioid()
    if args.region == "sector":
        _need(args, ("alpha",), "region sector")
        return Region.sector(args.alpha)
    return Region.half_plane(args.alpha or 0.0)


def cmd_curves(args, cfg: RunConfig) -> int:
    samples = cfg.samples if args.samples is not None or cfg.samples != DEFAULT_SAMPLES else 512
    if args.region:
        region = _region_from_args(args)
        t, w = region_boundary(region, samples)
        if cfg.out:
            write_curve(Path(cfg.out), t, w)
        else:
            sys.stdout.write("t,u,v\n" + "".join(f"{_fmt(a)},{_fmt(b.real)},{_fmt(b.imag)}\n" for a, b in zip(t, w)))
        return EXIT_OK
    if not args.figure:
        raise UsageError("curves needs --figure or --region")
    outdir = Path(cfg.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    r = cfg.radii[-1]
    files, checks, ok = [], {}, True
    items = _figure_items(args)
    if args.figure == "fig1":
        t, w = region_boundary(Region.cardioid(), samples)
        path = outdir / "fig1_cardioid.csv"
        write_curve(path, t, w)
        files.append(str(path))
    for tag, pmap, alpha in items:
        if alpha is not None:
            t, w = region_boundary(Region.sector(alpha), samples)
            path = outdir / f"{args.figure}_{tag}_sector.csv"
            write_curve(path, t, w)
            files.append(str(path))
        t, w = _image(pmap, r, samples)
        path = outdir / f"{args.figure}_{tag}_image.csv"
        write_curve(path, t, w)
        files.append(str(path))
        margin = float(np.min(car_margin(w) if alpha is None else sector_margin(w, alpha)))
        checks[tag] = {"function": pmap.name, "alpha": alpha, "radius": r, "min_margin": margin}
        ok &= margin > 0
    json.dump({"figure": args.figure, "files": files, "checks": checks}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if ok else EXIT_FALSE


# -- verify -----------------------------------------------------------------

def _load_p(args, cfg):
    if args.series:
        try:
            return SeriesMap(load_series(args.series).truncate(cfg.order), name=args.series)
        except (OSError, json.JSONDecodeError, TypeError) as exc:
            raise UsageError(f"cannot read coefficients from {args.series}: {exc}") from None
    if not args.preset:
        raise UsageError("give --series FILE or --preset NAME")
    if args.preset == "kummer":
        _need(args, ("a", "c"), "preset kummer")
    elif args.preset == "bessel":
        _need(args, ("p", "b", "c"), "preset bessel")
    elif args.preset == "mobius":
        _need(args, ("gamma",), "preset mobius")
    pmap = presets.function_p(args.preset, **_function_params(args))
    if args.dilate is not None:
        pmap = ScaledMap(pmap, args.dilate)
    return pmap


def cmd_verify(args, cfg: RunConfig) -> int:
    _need(args, ("alpha",), "verify")
    if args.theorem == "2.1":
        if args.preset == "kummer":
            _need(args, ("a", "c"), "preset kummer")
            triple = criteria.kummer_triple(args.a, args.c, args.alpha)
        elif args.preset == "bessel":
            _need(args, ("p", "b", "c"), "preset bessel")
            triple = criteria.bessel_triple(args.p, args.b, args.c, args.alpha)
        else:
            raise UsageError("theorem 2.1 supports --preset kummer or bessel")
        pmap = presets.function_p(args.preset, **_function_params(args))
        res = criteria.verify_theorem21(triple, pmap, cfg.radii, cfg.samples)
        payload = {
            "theorem": "2.1",
            "function": pmap.name,
            "alpha": args.alpha,
            "margin": res["margin"],
            "hypothesis_holds": res["hypothesis_holds"],
            "subordination": res["report"].to_dict(),
            "verdict": res["verdict"],
        }
        _emit(payload, cfg)
        return _exit_for(res["verdict"])
    if args.beta is None and args.theorem != "2.1":
        raise UsageError(f"theorem {args.theorem} needs --beta")
    pmap = _load_p(args, cfg)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ParameterOutOfTheorem)
        rep = criteria.implication_check(args.theorem, pmap, args.alpha, args.beta, args.k, cfg.radii, cfg.samples)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if rep.premise.inconclusive or rep.conclusion.inconclusive:
        verdict = "inconclusive"
    elif not rep.implication_ok:
        verdict = "counterexample"
    elif not rep.premise_holds:
        verdict = "premise-fails"
    else:
        verdict = "holds"
    payload = {"theorem": args.theorem, "function": pmap.name, "alpha": args.alpha, "beta": args.beta,
               "k": args.k, **rep.to_dict(), "verdict": verdict}
    _emit(payload, cfg)
    return _exit_for(verdict)


# -- threshold --------------------------------------------------------------

def cmd_threshold(args, cfg: RunConfig) -> int:
    th = args.theorem
    if th == "3.1":
        _need(args, ("alpha",), "threshold 3.1")
        res = criteria.thm31_min_beta(args.alpha, cfg.tgrid, trace=args.trace)
    elif th in ("3.2", "3.2b"):
        _need(args, ("alpha",), "threshold 3.2")
        res = criteria.thm32b_min_beta(args.alpha, cfg.tgrid, trace=args.trace)
    elif th == "kummer":
        _need(args, ("a", "c"), "threshold kummer")
        res = criteria.corollary_alpha_threshold("kummer", {"a": args.a, "c": args.c}, cfg.tgrid)
    elif th == "bessel":
        _need(args, ("p", "b", "c"), "threshold bessel")
        res = criteria.corollary_alpha_threshold("bessel", {"p": args.p, "b": args.b, "c": args.c}, cfg.tgrid)
    else:
        raise UsageError(f"no threshold for theorem {th!r}")
    payload = res.to_dict()
    payload["tolerance"] = args.tol
    payload["verdict"] = "holds" if res.gap is not None and res.gap <= args.tol else "gap-exceeds-tolerance"
    _emit(payload, cfg)
    return _exit_for(payload["verdict"])


# -- special ----------------------------------------------------------------

def _special_params(args):
    if args.kind == "kummer":
        _need(args, ("a", "c"), "kind kummer")
        return KummerParams(args.a, args.c)
    _need(args, ("p", "b", "c"), "kind bessel")
    return BesselParams(args.p, args.b, args.c)


def cmd_special(args, cfg: RunConfig) -> int:
    params = _special_params(args)
    kummer = args.kind == "kummer"
    if args.action == "eval":
        if args.z is None:
            raise UsageError("special eval needs --z")
        z = parse_complex(args.z)
        value, terms = (kummer_sum if kummer else bessel_u_sum)(params, z)
        _emit({"value": [value.real, value.imag], "terms_used": terms}, cfg)
    elif args.action == "series":
        s = (kummer_series if kummer else bessel_u_series)(params, cfg.order)
        _emit({"order": s.order, "coeffs": [[c.real, c.imag] for c in s.coeffs]}, cfg)
    else:
        res = (ode_residual_kummer if kummer else ode_residual_bessel)(params, cfg.order)
        _emit({"order": cfg.order, "residual": res}, cfg)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("run configuration")
    g.add_argument("--config", help="JSON file with order/radii/samples/tgrid/out/format")
    g.add_argument("--order", type=int, help=f"series truncation order (default {DEFAULT_ORDER})")
    g.add_argument("--radii", "--r", dest="radii", help="comma-separated radii ladder in (0,1)")
    g.add_argument("--samples", "--m", dest="samples", type=int, help="samples per circle / curve")
    g.add_argument("--tgrid", type=int, help="t-grid size for threshold predicates")
    g.add_argument("--out", help="output file (curves: directory for figures)")
    g.add_argument("--format", choices=("json", "csv"))

    fparams = argparse.ArgumentParser(add_help=False)
    fp = fparams.add_argument_group("function parameters")
    fp.add_argument("--a", type=float)
    fp.add_argument("--c", type=float)
    fp.add_argument("--p", type=float)
    fp.add_argument("--b", type=float)
    fp.add_argument("--gamma", type=float, help="exponent for the mobius preset")
    fp.add_argument("--alpha", type=float)

    parser = _Parser(prog="substar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[common, fparams], help="test z f'/f against a starlike class")
    c.add_argument("--f", help="JSON coefficients of f (list of [re, im])")
    c.add_argument("--preset", choices=("f1", "f2", "identity", "kummer", "bessel"))
    c.add_argument("--class", dest="cls", required=True, help="S*, S*(alpha), S*[alpha] or SSC")
    c.set_defaults(func=cmd_classify)

    cv = sub.add_parser("curves", parents=[common, fparams], help="export boundary and image curves as CSV")
    cv.add_argument("--figure", choices=("fig1", "fig2", "fig3"))
    cv.add_argument("--region", choices=("car", "cardioid", "sector", "halfplane"))
    cv.set_defaults(func=cmd_curves)

    v = sub.add_parser("verify", parents=[common, fparams], help="check a theorem instance numerically")
    v.add_argument("--theorem", required=True, choices=("2.1", "3.1", "3.2", "3.3", "3.4", "3.5"))
    v.add_argument("--preset", choices=("kummer", "bessel", "q1", "q2", "one", "mobius"))
    v.add_argument("--series", help="JSON coefficients of p (p(0) = 1)")
    v.add_argument("--beta", type=float)
    v.add_argument("--k", type=int, choices=(0, 1, 2))
    v.add_argument("--dilate", type=float, help="use p(lam z) instead of p(z)")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("threshold", parents=[common, fparams], help="closed-form vs brute-force thresholds")
    t.add_argument("--theorem", required=True, choices=("3.1", "3.2", "3.2b", "kummer", "bessel"))
    t.add_argument("--tol", type=float, default=1e-4, help="allowed |analytic - brute| (default 1e-4)")
    t.add_argument("--trace", action="store_true", help="include the bisection trace")
    t.set_defaults(func=cmd_threshold)

    s = sub.add_parser("special", parents=[common, fparams], help="Kummer / Bessel evaluation")
    s.add_argument("action", choices=("eval", "series", "residual"))
    s.add_argument("--kind", required=True, choices=("kummer", "bessel"))
    s.add_argument("--z", help='complex argument, e.g. "0.3+0.1i"')
    s.set_defaults(func=cmd_special)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg)
    except (UsageError, SubstarError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
