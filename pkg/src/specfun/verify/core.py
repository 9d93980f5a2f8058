"""Identity cases, reports, the registry and the runner."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..errors import UnknownIdentity

__all__ = [
    "KINDS",
    "MODES",
    "IdentityCase",
    "VerificationReport",
    "case",
    "registry",
    "run_identity",
    "run_suite",
    "format_report",
    "format_reports",
    "unexpected",
]

KINDS = ("exact-form", "quadrature", "series-truncation", "finite-difference")
MODES = ("abs", "rel", "mixed")


@dataclass(frozen=True)
class IdentityCase:
    """A registered identity: two evaluation recipes that must agree.

    Parameters
    ----------
    id : str
        Stable key such as ``"ch1.eq8.reflection"``; the prefix names the
        chapter and the equation or exercise label.
    chapter : int
        Chapter number used by suite selectors.
    description : str
        The identity in words and symbols.
    lhs, rhs : callable
        Called as ``lhs(*point)``; return float, complex or ComplexValue.
    sample_points : tuple of tuple
        Fixed argument tuples.
    tolerance : float
        Acceptance threshold, > 0.
    kind : str
        One of ``KINDS``.
    mode : str
        ``"abs"``: |lhs - rhs| <= tol; ``"rel"``: |lhs - rhs| <= tol |rhs|;
        ``"mixed"``: |lhs - rhs| <= tol max(1, |rhs|).
    expected_fail : bool
        Marks the as-printed form of a known misprint; it must fail.
    notes : str
        Free text copied into the report.
    """

    id: str
    chapter: int
    description: str
    lhs: Callable
    rhs: Callable
    sample_points: tuple
    tolerance: float = 1e-10
    kind: str = "exact-form"
    mode: str = "mixed"
    expected_fail: bool = False
    notes: str = ""

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"{self.id}: tolerance must be > 0")
        if self.kind not in KINDS:
            raise ValueError(f"{self.id}: unknown kind {self.kind!r}")
        if self.mode not in MODES:
            raise ValueError(f"{self.id}: unknown mode {self.mode!r}")
        if not self.sample_points:
            raise ValueError(f"{self.id}: no sample points")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check.

    ``passed`` is true when every sample point met the tolerance. For an
    expected-fail case the desired outcome is ``passed == False``.
    """

    id: str
    max_abs_err: float
    max_rel_err: float
    n_points: int
    passed: bool
    notes: str = ""
    expected_fail: bool = False

    @property
    def as_expected(self) -> bool:
        return self.passed != self.expected_fail


def case(
    id: str,
    description: str,
    lhs: Callable,
    rhs: Callable,
    points: Iterable,
    tol: float = 1e-10,
    kind: str = "exact-form",
    mode: str = "mixed",
    xfail: bool = False,
    notes: str = "",
) -> IdentityCase:
    """Build an IdentityCase, taking the chapter from the id prefix.

    Scalar sample points are wrapped into 1-tuples; ``points=[()]`` runs a
    constant identity once.
    """
    chapter = int(id.split(".", 1)[0][2:])
    pts = tuple(p if isinstance(p, tuple) else (p,) for p in points)
    return IdentityCase(id, chapter, description, lhs, rhs, pts, tol, kind, mode, xfail, notes)


_REGISTRY: dict[str, IdentityCase] | None = None


def registry() -> dict[str, IdentityCase]:
    """All registered cases keyed by id (built on first use)."""
    global _REGISTRY
    if _REGISTRY is None:
        from . import bessel_cases, errfn_cases, expint_cases, gamma_cases, hypergeom_cases, orthopoly_cases

        reg: dict[str, IdentityCase] = {}
        for mod in (gamma_cases, bessel_cases, errfn_cases, expint_cases, orthopoly_cases, hypergeom_cases):
            for c in mod.cases():
                if c.id in reg:
                    raise ValueError(f"duplicate identity id {c.id!r}")
                reg[c.id] = c
        _REGISTRY = reg
    return _REGISTRY


def _as_complex(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    return complex(v)


def _evaluate(c: IdentityCase) -> VerificationReport:
    max_abs = 0.0
    max_rel = 0.0
    ok = True
    for pt in c.sample_points:
        a = _as_complex(c.lhs(*pt))
        b = _as_complex(c.rhs(*pt))
        err = abs(a - b)
        scale = abs(b)
        if not math.isfinite(err):
            err = math.inf
        rel = err / scale if scale > 0 else (0.0 if err == 0 else math.inf)
        max_abs = max(max_abs, err)
        max_rel = max(max_rel, rel)
        if c.mode == "abs":
            bound = c.tolerance
        elif c.mode == "rel":
            bound = c.tolerance * scale
        else:
            bound = c.tolerance * max(1.0, scale)
        if not err <= bound:
            ok = False
    return VerificationReport(c.id, max_abs, max_rel, len(c.sample_points), ok, c.notes, c.expected_fail)


def run_identity(id: str) -> VerificationReport:
    """Evaluate one registered identity at all of its sample points.

    Evaluation errors are caught and reported with ``passed=False``.

    Raises
    ------
    UnknownIdentity
        If ``id`` is not registered.
    """
    reg = registry()
    if id not in reg:
        raise UnknownIdentity(f"unknown identity id {id!r}")
    c = reg[id]
    try:
        return _evaluate(c)
    except Exception as exc:  # reported, not raised
        note = f"evaluation error: {type(exc).__name__}: {exc}"
        if c.notes:
            note = f"{c.notes}; {note}"
        return VerificationReport(c.id, math.inf, math.inf, len(c.sample_points), False, note, c.expected_fail)


def run_suite(selector="all") -> list[VerificationReport]:
    """Run every case of a chapter (int or digit string) or ``"all"``.

    Reports are returned in id order; an unmatched chapter gives ``[]``.
    """
    reg = registry()
    if selector == "all":
        ids = sorted(reg)
    else:
        chapter = int(selector)
        ids = sorted(k for k, c in reg.items() if c.chapter == chapter)
    return [run_identity(k) for k in ids]


def unexpected(reports: Sequence[VerificationReport]) -> list[VerificationReport]:
    """Reports whose outcome differs from what the registry expects."""
    return [r for r in reports if not r.as_expected]


def _clean(text: str) -> str:
    return " ".join(text.replace("\t", " ").split())


def format_report(r: VerificationReport) -> str:
    """One tab-separated line: id, pass, max_abs_err, max_rel_err, notes."""
    notes = r.notes
    if r.expected_fail:
        notes = "expected-fail" + (f": {notes}" if notes else "")
    return "\t".join(
        (r.id, "true" if r.passed else "false", f"{r.max_abs_err:.3e}", f"{r.max_rel_err:.3e}", _clean(notes))
    )


def format_reports(reports: Iterable[VerificationReport]) -> str:
    """Serialize reports, one line each, sorted by id, newline terminated."""
    return "".join(format_report(r) + "\n" for r in sorted(reports, key=lambda r: r.id))
