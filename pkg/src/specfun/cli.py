"""Command-line front end: point values, CSV tables, figure data and identity runs.

Exit codes: 0 success, 1 unexpected verification outcome, 2 domain error or
unknown key, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from dataclasses import dataclass
from typing import Callable

from . import bessel, gamma as gamma_mod, hypergeom, integral_fns, orthopoly
from .errors import (
    DepthExceeded,
    DivergenceError,
    DomainError,
    NonConvergence,
    SpecfunError,
    UnknownFigure,
    UnknownIdentity,
)
from .numkernel import DEFAULT_TOL, ComplexValue, EvalResult, ToleranceSpec


# ---------------------------------------------------------------------------
# function catalog


@dataclass(frozen=True)
class FunctionSpec:
    """A catalog entry: parameters come first, the grid argument last.

    Parameters
    ----------
    name : str
        Canonical key used on the command line.
    func : callable
        ``func(*params, x, tol=...)`` or ``func(*params, x)``.
    params : tuple of (str, type)
        Ordered parameter names with ``int`` or ``float`` conversion.
    takes_tol : bool
        Whether ``func`` accepts a ``tol`` keyword.
    summary : str
        One-line description shown by ``specfun list``.
    """

    name: str
    func: Callable
    params: tuple = ()
    takes_tol: bool = True
    summary: str = ""

    def call(self, params, x, tol=None):
        if len(params) != len(self.params):
            names = " ".join(p for p, _ in self.params) or "(none)"
            raise ValueError(f"{self.name} takes parameters: {names}")
        args = [conv(v) for (_, conv), v in zip(self.params, params)]
        if self.takes_tol and tol is not None:
            return self.func(*args, x, tol=tol)
        return self.func(*args, x)


def _int(v) -> int:
    f = float(v)
    if f != int(f):
        raise ValueError(f"expected an integer, got {v}")
    return int(f)


_NU = (("nu", float),)
_N = (("n", _int),)


def _sph_harm(l, m, phi, theta):
    return orthopoly.spherical_harmonic(l, m, theta, phi)


def _gauss(a, b, c, x, tol=None):
    return hypergeom.gauss_2f1(a, b, c, x, tol=tol)


def _kummer(a, b, x, tol=None):
    return hypergeom.kummer_1f1(a, b, x, tol=tol)


CATALOG: dict[str, FunctionSpec] = {
    s.name: s
    for s in [
        FunctionSpec("gamma", gamma_mod.gamma, takes_tol=False, summary="Gamma function"),
        FunctionSpec("lgamma", gamma_mod.lgamma, takes_tol=False, summary="log |Gamma(x)|"),
        FunctionSpec("digamma", gamma_mod.digamma, takes_tol=False, summary="psi(x) = Gamma'/Gamma"),
        FunctionSpec("polygamma", gamma_mod.polygamma, (("m", _int),), False, "m-th derivative of psi"),
        FunctionSpec("beta", gamma_mod.beta, (("y", float),), False, "B(y, x)"),
        FunctionSpec("gamma_lower", gamma_mod.incomplete_gamma_lower, (("x", float),), True,
                     "lower incomplete gamma(x, a), grid over the limit a"),
        FunctionSpec("gamma_upper", gamma_mod.incomplete_gamma_upper, (("x", float),), True,
                     "upper incomplete Gamma(x, a), grid over the limit a"),
        FunctionSpec("besselj", bessel.bessel_j, _NU, True, "Bessel J_nu(x)"),
        FunctionSpec("bessely", bessel.bessel_y, _NU, True, "Bessel Y_nu(x)"),
        FunctionSpec("besseli", bessel.bessel_i, _NU, True, "modified Bessel I_nu(x)"),
        FunctionSpec("besselk", bessel.bessel_k, _NU, True, "modified Bessel K_nu(x)"),
        FunctionSpec("hankel1", bessel.hankel1, _NU, True, "Hankel H1_nu(x), complex"),
        FunctionSpec("hankel2", bessel.hankel2, _NU, True, "Hankel H2_nu(x), complex"),
        FunctionSpec("spherical_j", bessel.spherical_j, _N, True, "spherical Bessel j_n(x)"),
        FunctionSpec("spherical_y", bessel.spherical_y, _N, True, "spherical Bessel y_n(x)"),
        FunctionSpec("spherical_h1", bessel.spherical_h1, _N, True, "spherical Hankel h1_n(x), complex"),
        FunctionSpec("spherical_h2", bessel.spherical_h2, _N, True, "spherical Hankel h2_n(x), complex"),
        FunctionSpec("erf", integral_fns.erf, summary="error function"),
        FunctionSpec("erfc", integral_fns.erfc, summary="complementary error function"),
        FunctionSpec("fresnelC", integral_fns.fresnel_c, summary="Fresnel C(x), |x| <= 4"),
        FunctionSpec("fresnelS", integral_fns.fresnel_s, summary="Fresnel S(x), |x| <= 4"),
        FunctionSpec("ein", integral_fns.ein, summary="entire exponential integral Ein(x)"),
        FunctionSpec("e1", integral_fns.e1, summary="exponential integral E1(x), x > 0"),
        FunctionSpec("ei", integral_fns.ei, summary="exponential integral Ei(x)"),
        FunctionSpec("li", integral_fns.li, summary="logarithmic integral li(x)"),
        FunctionSpec("si", integral_fns.si, summary="sine integral Si(x)"),
        FunctionSpec("ci", integral_fns.ci, summary="cosine integral Ci(x)"),
        FunctionSpec("aux_f", integral_fns.aux_f, summary="auxiliary function f(x) of Si/Ci"),
        FunctionSpec("aux_g", integral_fns.aux_g, summary="auxiliary function g(x) of Si/Ci"),
        FunctionSpec("legendre_p", orthopoly.legendre_p, (("l", _int),), False, "Legendre P_l(x)"),
        FunctionSpec("assoc_legendre", orthopoly.assoc_legendre, (("l", _int), ("m", _int)), False,
                     "associated Legendre P_l^m(x), no Condon-Shortley phase"),
        FunctionSpec("spherical_harmonic", _sph_harm, (("l", _int), ("m", _int), ("phi", float)), False,
                     "Y_l^m(theta, phi), grid over theta, complex"),
        FunctionSpec("hermite_h", orthopoly.hermite_h, _N, False, "Hermite H_n(x)"),
        FunctionSpec("laguerre_l", orthopoly.laguerre_l, _N, False, "Laguerre L_n(x)"),
        FunctionSpec("assoc_laguerre", orthopoly.assoc_laguerre, (("n", _int), ("k", _int)), False,
                     "associated Laguerre L_n^k(x)"),
        FunctionSpec("chebyshev_t", orthopoly.chebyshev_t, _N, False, "Chebyshev T_n(x)"),
        FunctionSpec("chebyshev_u", orthopoly.chebyshev_u, _N, False, "Chebyshev U_n(x) = sin(n arccos x)"),
        FunctionSpec("2f1", _gauss, (("a", float), ("b", float), ("c", float)), True, "Gauss 2F1(a, b; c; x)"),
        FunctionSpec("1f1", _kummer, (("a", float), ("b", float)), True, "Kummer 1F1(a; b; x)"),
    ]
}


def _unwrap(value):
    """Return ``(value, converged)`` with complex results as ``complex``."""
    converged = True
    if isinstance(value, EvalResult):
        converged = value.converged
        value = value.value
    if isinstance(value, ComplexValue):
        value = complex(value)
    return value, converged


def _make_tol(args) -> ToleranceSpec | None:
    if args.rel_tol is None and args.abs_tol is None and args.max_terms is None:
        return None
    return ToleranceSpec(
        target_rel_tol=args.rel_tol if args.rel_tol is not None else DEFAULT_TOL.target_rel_tol,
        target_abs_tol=args.abs_tol if args.abs_tol is not None else DEFAULT_TOL.target_abs_tol,
        max_terms=args.max_terms if args.max_terms is not None else DEFAULT_TOL.max_terms,
        max_quad_depth=DEFAULT_TOL.max_quad_depth,
    )


def _lookup(name: str) -> FunctionSpec:
    try:
        return CATALOG[name]
    except KeyError:
        raise DomainError(f"unknown function {name!r}; see 'specfun list'") from None


def _diag(kind: str, e: Exception) -> str:
    msg = str(e)
    return msg if msg.startswith(kind + ":") else f"{kind}: {msg}"


_DOMAIN = (DomainError, DivergenceError, OverflowError, ValueError, ZeroDivisionError)
_NONCONV = (NonConvergence, DepthExceeded)


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args, out=sys.stdout, err=sys.stderr) -> int:
    try:
        spec = _lookup(args.name)
        *params, x = args.values if args.values else [None]
        if x is None:
            raise ValueError("missing argument x")
        value, converged = _unwrap(spec.call(params, float(x), _make_tol(args)))
    except _NONCONV as e:
        err.write(_diag("non-convergence", e) + "\n")
        return 3
    except _DOMAIN as e:
        err.write(_diag("domain", e) + "\n")
        return 2
    d = args.digits
    flag = "converged" if converged else "not-converged"
    if isinstance(value, complex):
        out.write(f"{value.real:.{d}g} {value.imag:.{d}g} {flag}\n")
    else:
        out.write(f"{value:.{d}g} {flag}\n")
    return 0 if converged else 3


def grid(start: float, stop: float, count: int) -> list[float]:
    """``count`` equally spaced points with both endpoints hit exactly."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if start > stop:
        raise ValueError("--from must not exceed --to")
    if count == 1:
        return [float(start)]
    return [start + (stop - start) * i / (count - 1) if 0 < i < count - 1 else float(start if i == 0 else stop)
            for i in range(count)]


def _fmt(v: float) -> str:
    # repr is locale independent and round-trips exactly
    if math.isnan(v):
        return "nan"
    return repr(float(v))


def cmd_table(args, out=sys.stdout, err=sys.stderr) -> int:
    try:
        spec = _lookup(args.name)
        xs = grid(args.start, args.stop, args.count)
        tol = _make_tol(args)
        if len(args.params) != len(spec.params):
            names = " ".join(p for p, _ in spec.params) or "(none)"
            raise ValueError(f"{spec.name} takes parameters: {names}")
    except _DOMAIN as e:
        err.write(_diag("domain", e) + "\n")
        return 2
    rows, ok, is_complex, last_err = [], 0, None, 3
    for x in xs:
        try:
            value, converged = _unwrap(spec.call(args.params, x, tol))
            if not converged:
                raise NonConvergence("term budget exhausted")
            ok += 1
            if is_complex is None:
                is_complex = isinstance(value, complex)
            rows.append((x, value))
        except _NONCONV as e:
            err.write(f"warning: x={_fmt(x)}: {_diag('non-convergence', e)}\n")
            rows.append((x, None))
        except _DOMAIN as e:
            err.write(f"warning: x={_fmt(x)}: {_diag('domain', e)}\n")
            rows.append((x, None))
            last_err = 2
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "value", "im"] if is_complex else ["x", "value"])
    for x, v in rows:
        if is_complex:
            v = complex(v) if v is not None else complex(math.nan, math.nan)
            writer.writerow([_fmt(x), _fmt(v.real), _fmt(v.imag)])
        else:
            writer.writerow([_fmt(x), _fmt(math.nan if v is None else v)])
    return 0 if ok else last_err


# ---------------------------------------------------------------------------
# figure data


def _linspace(a, b, n):
    return grid(a, b, n)


def _curves(xs, funcs, names):
    """Rows ``x, f_1(x), ...``; a failing point is written as nan."""
    rows = []
    for x in xs:
        row = [x]
        for f in funcs:
            try:
                row.append(float(f(x)))
            except (SpecfunError, ValueError, OverflowError, ZeroDivisionError):
                row.append(math.nan)
        rows.append(row)
    return ["x", *names], rows


def _fig_gamma():
    # [-4, 5] without the neighbourhoods |x - k| < 0.05 of the poles
    xs = [x for x in _linspace(-4.0, 5.0, 901) if x > 0 or abs(x - round(x)) >= 0.05]
    return {"gamma": _curves(xs, [gamma_mod.gamma], ["gamma"])}


def _fig_tu_plane():
    # polar grid over the quarter plane t, u >= 0 used to evaluate Gamma(x)Gamma(y)
    header = ["r", "theta", "t", "u"]
    rows = []
    for i in range(0, 31):
        r = 3.0 * i / 30
        for j in range(0, 19):
            th = (math.pi / 2) * j / 18
            rows.append([r, th, r * math.cos(th), r * math.sin(th)])
    return {"tu_plane": (header, rows)}


def _orders(f, orders, prefix):
    return [lambda x, n=n: f(n, x) for n in orders], [f"{prefix}{n}" for n in orders]


def _fig_bessel(f, prefix, a, b, count, key):
    funcs, names = _orders(f, range(5), prefix)
    return {key: _curves(_linspace(a, b, count), funcs, names)}


def _fig_hankel(kind):
    h = bessel.hankel1 if kind == 1 else bessel.hankel2
    funcs, names = [], []
    for n in (0, 1):
        funcs += [lambda x, n=n: h(n, x).re, lambda x, n=n: h(n, x).im, lambda x, n=n: abs(h(n, x))]
        names += [f"re_H{kind}_{n}", f"im_H{kind}_{n}", f"abs_H{kind}_{n}"]
    return {f"hankel{kind}": _curves(_linspace(0.1, 20.0, 400), funcs, names)}


def _fig_spherical(f, prefix, a, key):
    funcs, names = _orders(f, range(4), prefix)
    return {key: _curves(_linspace(a, 20.0, 401), funcs, names)}


def _fig_erf():
    return {"erf": _curves(_linspace(-3.0, 3.0, 301), [integral_fns.erf, integral_fns.erfc], ["erf", "erfc"])}


def _fig_fresnel():
    return {"fresnel": _curves(_linspace(-4.0, 4.0, 401), [integral_fns.fresnel_c, integral_fns.fresnel_s],
                               ["C", "S"])}


def _fig_ei_e1():
    return {"ei_e1": _curves(_linspace(0.02, 3.0, 300), [integral_fns.ei, integral_fns.e1], ["Ei", "E1"])}


def _fig_si_ci():
    return {"si_ci": _curves(_linspace(0.05, 20.0, 400), [integral_fns.si, integral_fns.ci], ["Si", "Ci"])}


def _fig_poly(f, orders, prefix, a, b, key, count=201):
    funcs, names = _orders(f, orders, prefix)
    return {key: _curves(_linspace(a, b, count), funcs, names)}


def _fig_assoc_legendre():
    funcs = [lambda x, m=m: orthopoly.assoc_legendre(5, m, x) for m in range(6)]
    return {"assoc_legendre": _curves(_linspace(-1.0, 1.0, 201), funcs, [f"P5_{m}" for m in range(6)])}


def _fig_spherical_harmonics():
    header = ["l", "m", "theta", "phi", "abs", "arg"]
    rows = []
    thetas = _linspace(0.0, math.pi, 37)
    phis = _linspace(0.0, 2 * math.pi, 73)
    for l in range(4):
        for m in range(l + 1):
            for th in thetas:
                for ph in phis:
                    y = complex(orthopoly.spherical_harmonic(l, m, th, ph))
                    rows.append([l, m, th, ph, abs(y), math.atan2(y.imag, y.real)])
    return {"spherical_harmonics": (header, rows)}


FIGURES: dict[str, tuple[str, Callable]] = {
    "gamma": ("Gamma on the real axis with its negative lobes", _fig_gamma),
    "tu_plane": ("polar grid of the (t, u) quarter plane", _fig_tu_plane),
    "bessel_j": ("J_0..J_4 on [0, 20]", lambda: _fig_bessel(bessel.bessel_j, "J", 0.0, 20.0, 401, "bessel_j")),
    "bessel_y": ("Y_0..Y_4 on [0.25, 20]", lambda: _fig_bessel(bessel.bessel_y, "Y", 0.25, 20.0, 400, "bessel_y")),
    "hankel1": ("H1_0 and H1_1 on the real axis: re, im, modulus", lambda: _fig_hankel(1)),
    "hankel2": ("H2_0 and H2_1 on the real axis: re, im, modulus", lambda: _fig_hankel(2)),
    "bessel_i": ("I_0..I_4 on [0, 5]", lambda: _fig_bessel(bessel.bessel_i, "I", 0.0, 5.0, 201, "bessel_i")),
    "bessel_k": ("K_0..K_4 on [0.05, 5]", lambda: _fig_bessel(bessel.bessel_k, "K", 0.05, 5.0, 199, "bessel_k")),
    "spherical_j": ("j_0..j_3 on [0, 20]", lambda: _fig_spherical(bessel.spherical_j, "j", 0.0, "spherical_j")),
    "spherical_y": ("y_0..y_3 on [0.5, 20]", lambda: _fig_spherical(bessel.spherical_y, "y", 0.5, "spherical_y")),
    "erf": ("erf and erfc on [-3, 3]", _fig_erf),
    "fresnel": ("Fresnel C and S on [-4, 4]", _fig_fresnel),
    "ei_e1": ("Ei and E1 on [0.02, 3]", _fig_ei_e1),
    "si_ci": ("Si and Ci on [0.05, 20]", _fig_si_ci),
    "legendre": ("P_0..P_4 on [-1, 1]",
                 lambda: _fig_poly(orthopoly.legendre_p, range(5), "P", -1.0, 1.0, "legendre")),
    "assoc_legendre": ("P_5^m, m = 0..5, on [-1, 1]", _fig_assoc_legendre),
    "spherical_harmonics": ("|Y_l^m| and arg Y_l^m on a (theta, phi) grid, l <= 3, 0 <= m <= l",
                            _fig_spherical_harmonics),
    "hermite": ("H_0..H_4 on [-2, 2]",
                lambda: _fig_poly(orthopoly.hermite_h, range(5), "H", -2.0, 2.0, "hermite")),
    "laguerre": ("L_0..L_4 on [0, 10]",
                 lambda: _fig_poly(orthopoly.laguerre_l, range(5), "L", 0.0, 10.0, "laguerre")),
    "chebyshev_t": ("T_0..T_4 on [-1, 1]",
                    lambda: _fig_poly(orthopoly.chebyshev_t, range(5), "T", -1.0, 1.0, "chebyshev_t")),
    "chebyshev_u": ("U_1..U_4 = sin(n arccos x) on [-1, 1]",
                    lambda: _fig_poly(orthopoly.chebyshev_u, range(1, 5), "U", -1.0, 1.0, "chebyshev_u")),
}


def figure_data(key: str) -> dict[str, tuple[list[str], list[list]]]:
    """Sampled data for a figure as ``{stem: (header, rows)}``.

    Raises
    ------
    UnknownFigure
        If ``key`` is not in the figure catalog.
    """
    if key not in FIGURES:
        raise UnknownFigure(f"unknown figure {key!r}; known: {', '.join(FIGURES)}")
    return FIGURES[key][1]()


def write_csv(path: str, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([v if isinstance(v, int) else _fmt(v) for v in row])


def cmd_figure(args, out=sys.stdout, err=sys.stderr) -> int:
    keys = list(FIGURES) if args.key == "all" else [args.key]
    try:
        for key in keys:
            data = figure_data(key)
            os.makedirs(args.out_dir, exist_ok=True)
            for stem, (header, rows) in data.items():
                path = os.path.join(args.out_dir, f"{stem}.csv")
                write_csv(path, header, rows)
                out.write(path + "\n")
    except UnknownFigure as e:
        err.write(f"{e}\n")
        return 2
    return 0


def cmd_verify(args, out=sys.stdout, err=sys.stderr) -> int:
    from .verify import format_report, run_identity, run_suite, unexpected

    try:
        if args.id:
            reports = [run_identity(i) for i in sorted(args.id)]
        else:
            reports = run_suite(args.chapter if args.chapter is not None else "all")
    except UnknownIdentity as e:
        err.write(f"{e}\n")
        return 2
    for r in sorted(reports, key=lambda r: r.id):
        out.write(format_report(r) + "\n")
    bad = unexpected(reports)
    xf = sum(1 for r in reports if r.expected_fail)
    err.write(f"{len(reports)} cases, {xf} expected failures, {len(bad)} unexpected\n")
    return 1 if bad else 0


def cmd_list(args, out=sys.stdout, err=sys.stderr) -> int:
    for name, spec in CATALOG.items():
        params = " ".join(p for p, _ in spec.params)
        out.write(f"{name}\t{params + ' ' if params else ''}x\t{spec.summary}\n")
    for key, (desc, _) in FIGURES.items():
        out.write(f"figure:{key}\t\t{desc}\n")
    return 0


# ---------------------------------------------------------------------------
# entry point


def _add_tol(p):
    p.add_argument("--rel-tol", type=float, default=None, help="relative tolerance")
    p.add_argument("--abs-tol", type=float, default=None, help="absolute tolerance")
    p.add_argument("--max-terms", type=int, default=None, help="series term budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specfun", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a function at one point")
    p.add_argument("name")
    p.add_argument("values", nargs="*", help="parameters followed by the argument x")
    p.add_argument("--digits", type=int, default=15, help="significant digits (17 round-trips exactly)")
    _add_tol(p)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("table", help="tabulate a function on an equally spaced grid as CSV")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    _add_tol(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("figure", help="write the data behind a figure as CSV")
    p.add_argument("key", help="figure key, or 'all'")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(handler=cmd_figure)

    p = sub.add_parser("verify", help="run identity checks")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--chapter", type=int)
    g.add_argument("--id", action="append")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("list", help="list catalog functions and figure keys")
    p.set_defaults(handler=cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
