"""Coverage manifest: every labelled equation and exercise mapped to identity cases.

Each key names an equation (``chC.eqN``) or exercise (``chC.exK``) of the
course text. The value is a tuple of registry ids checking it, or a string
starting with ``out-of-scope:`` that gives the reason it is not checked.
Cases that check unlabelled statements (worked tables, prose facts) are
listed under ``UNLABELLED``.
"""

from __future__ import annotations

MANIFEST: dict[str, tuple[str, ...] | str] = {
    "ch1.eq1": (
        "ch1.eq1.euler-integral",
    ),
    "ch1.eq2": (
        "ch1.eq2.recurrence",
    ),
    "ch1.eq3": (
        "ch1.eq3.factorial",
    ),
    "ch1.eq4": (
        "ch1.eq4.gaussian-form",
    ),
    "ch1.eq5": (
        "ch1.eq5.log-form",
    ),
    "ch1.eq6": (
        "ch1.eq6.trig-form",
    ),
    "ch1.eq7": (
        "ch1.eq7.double-integral",
        "ch1.eq7a.weierstrass",
        "ch1.eq7b.sine-product",
    ),
    "ch1.eq7a": (
        "ch1.eq7a.weierstrass",
    ),
    "ch1.eq8": (
        "ch1.eq8.reflection",
        "ch1.eq8d.sine-doubling",
        "ch1.eq8e.paired-sines",
        "ch1.eq8f.sine-squares",
        "ch1.eq8g.sine-constant",
    ),
    "ch1.eq7b": (
        "ch1.eq7b.sine-product",
    ),
    "ch1.eq8a": (
        "ch1.eq8d.sine-doubling",
    ),
    "ch1.eq8b": (
        "ch1.eq8d.sine-doubling",
    ),
    "ch1.eq8c": (
        "ch1.eq8d.sine-doubling",
    ),
    "ch1.eq8d": (
        "ch1.eq8d.sine-doubling",
    ),
    "ch1.eq8e": (
        "ch1.eq8e.paired-sines",
    ),
    "ch1.eq8f": (
        "ch1.eq8f.sine-squares",
    ),
    "ch1.eq8g": (
        "ch1.eq8g.sine-constant",
    ),
    "ch1.eq9": (
        "ch1.eq9.duplication",
        "ch1.eq9a.half-integer",
    ),
    "ch1.eq10": (
        "ch1.eq10.stirling",
        "ch1.eq10.stirling-limit",
    ),
    "ch1.eq11": (
        "ch1.eq11.lower-incomplete",
    ),
    "ch1.eq12": (
        "ch1.eq12.upper-incomplete",
    ),
    "ch1.eq13": (
        "ch1.eq13a.incomplete-sum",
        "ch1.eq13b.lower-recurrence",
        "ch1.eq13c.upper-recurrence",
        "ch1.eq13d.lower-derivative",
        "ch1.eq13e.upper-derivative",
    ),
    "ch1.eq14": (
        "ch1.eq14.digamma-derivative",
    ),
    "ch1.eq15": (
        "ch1.eq15a.digamma-shift",
        "ch1.eq15b.digamma-reflection",
        "ch1.eq15c.digamma-harmonic",
    ),
    "ch1.eq16": (
        "ch1.eq16.polygamma",
    ),
    "ch1.eq17": (
        "ch1.eq17.beta-integral",
    ),
    "ch1.eq18": (
        "ch1.eq18.beta-half-line",
    ),
    "ch1.eq19": (
        "ch1.eq19.beta-trig",
    ),
    "ch1.eq20": (
        "ch1.eq20a.beta-shift-x",
        "ch1.eq20b.beta-shift-y",
        "ch1.eq20c.beta-sum",
        "ch1.eq20d.beta-diagonal",
    ),
    "ch1.eq9a": (
        "ch1.eq9a.half-integer",
    ),
    "ch2.eq1": (
        "ch2.eq1.bessel-ode",
        "ch2.eq1.bessel-ode-y",
    ),
    "ch2.eq2": (
        "ch2.eq2.series",
    ),
    "ch2.eq3": (
        "ch2.eq3.coefficient-recurrence",
    ),
    "ch2.eq4": (
        "ch2.eq4.negative-order-series",
    ),
    "ch2.eq5": (
        "ch2.eq5.y-definition",
        "ch2.eq5.y-integer-limit",
    ),
    "ch2.eq6": (
        "ch2.eq6.negation",
    ),
    "ch2.eq7": (
        "ch2.eq7.integer-negative-series",
    ),
    "ch2.eq8": (
        "ch2.eq8.y-negation",
    ),
    "ch2.eq9": (
        "ch2.eq9.generating-function",
    ),
    "ch2.eq10": (
        "ch2.eq10.integral",
        "ch2.eq10a.cosine-expansion",
        "ch2.eq10b.sine-expansion",
    ),
    "ch2.eq11": (
        "ch2.eq11.poisson-integral",
    ),
    "ch2.eq10a": (
        "ch2.eq10a.cosine-expansion",
    ),
    "ch2.eq10b": (
        "ch2.eq10b.sine-expansion",
    ),
    "ch2.eq12": (
        "ch2.eq12a",
        "ch2.eq12b",
        "ch2.eq12c",
        "ch2.eq12d",
        "ch2.eq12e",
        "ch2.eq12e.y",
        "ch2.eq12f",
        "ch2.eq12f.y",
    ),
    "ch2.eq13": (
        "ch2.eq13.hankel1",
        "ch2.eq13.hankel1-noninteger",
    ),
    "ch2.eq14": (
        "ch2.eq14.hankel2",
    ),
    "ch2.eq15": (
        "ch2.eq15.modified-ode",
        "ch2.eq15.modified-ode-k",
    ),
    "ch2.eq16": (
        "ch2.eq16.i-series",
    ),
    "ch2.eq17": (
        "ch2.eq17.i-negative-series",
    ),
    "ch2.eq18": (
        "ch2.eq18.k-definition",
        "ch2.eq18.k-integer-limit",
    ),
    "ch2.eq19": (
        "ch2.eq19.i-from-j",
    ),
    "ch2.eq20": (
        "ch2.eq20.k-from-hankel",
    ),
    "ch2.eq21": (
        "ch2.eq21.i-integral",
    ),
    "ch2.eq22": (
        "ch2.eq22.k-integral",
    ),
    "ch2.eq23": (
        "ch2.eq23a",
        "ch2.eq23b",
        "ch2.eq23b.as-printed",
        "ch2.eq23c",
        "ch2.eq23d",
        "ch2.eq23d.as-printed",
        "ch2.eq23e",
        "ch2.eq23e.as-printed",
        "ch2.eq23f",
        "ch2.eq23f.as-printed",
    ),
    "ch2.eq24": (
        "ch2.eq24a",
        "ch2.eq24b",
        "ch2.eq24c",
        "ch2.eq24d",
        "ch2.eq24e",
        "ch2.eq24f",
    ),
    "ch2.eq25": (
        "ch2.eq25.as-printed",
        "ch2.eq25.spherical-ode",
        "ch2.eq25.spherical-ode-y",
    ),
    "ch2.eq26": (
        "ch2.eq26.spherical-j",
    ),
    "ch2.eq27": (
        "ch2.eq27.spherical-y",
    ),
    "ch2.eq28": (
        "ch2.eq28.spherical-h1",
    ),
    "ch2.eq29": (
        "ch2.eq29.spherical-h2",
    ),
    "ch2.eq30": (
        "ch2.eq30a.h1",
        "ch2.eq30a.h2",
        "ch2.eq30a.j",
        "ch2.eq30a.y",
        "ch2.eq30b.h1",
        "ch2.eq30b.h2",
        "ch2.eq30b.j",
        "ch2.eq30b.y",
        "ch2.eq30c.h1",
        "ch2.eq30c.h2",
        "ch2.eq30c.j",
        "ch2.eq30c.y",
        "ch2.eq30d.h1",
        "ch2.eq30d.h2",
        "ch2.eq30d.j",
        "ch2.eq30d.y",
        "ch2.eq30e.as-printed",
        "ch2.eq30e.h1",
        "ch2.eq30e.h2",
        "ch2.eq30e.j",
        "ch2.eq30e.y",
        "ch2.eq30f.h1",
        "ch2.eq30f.h2",
        "ch2.eq30f.j",
        "ch2.eq30f.y",
    ),
    "ch3.eq1": (
        "ch3.eq1.erf-integral",
    ),
    "ch3.eq2": (
        "ch3.eq2.erfc-integral",
    ),
    "ch3.eq3": (
        "ch3.eq3.series",
    ),
    "ch3.eq4": (
        "ch3.eq4.fresnel-c",
    ),
    "ch3.eq5": (
        "ch3.eq5.fresnel-s",
    ),
    "ch3.eq6": (
        "ch3.eq6.c-series",
    ),
    "ch3.eq7": (
        "ch3.eq7.s-series",
    ),
    "ch4.eq1": (
        "ch4.eq1.ei-integral",
    ),
    "ch4.eq2": (
        "ch4.eq2.e1-ei",
        "ch4.eq2.e1-integral",
    ),
    "ch4.eq21": (
        "ch4.eq21.ein-integral",
    ),
    "ch4.eq22": (
        "ch4.eq22.ein-series",
    ),
    "ch4.eq3": (
        "ch4.eq3.decomposition",
    ),
    "ch4.eq4": (
        "ch4.eq4.small-x",
    ),
    "ch4.eq5": (
        "ch4.eq5.large-x",
    ),
    "ch4.eq3a": (
        "out-of-scope: intermediate step of a proof; the resulting series is checked by ch4.eq3.decomposition"
    ),
    "ch4.eq6": (
        "ch4.eq6.li-above-one",
        "ch4.eq6.li-e1",
        "ch4.eq6.li-e1.as-printed",
        "ch4.eq6.li-integral",
    ),
    "ch4.eq7": (
        "ch4.eq7.si-integral",
    ),
    "ch4.eq8": (
        "ch4.eq8.ci-integral",
    ),
    "ch4.eq9": (
        "ch4.eq9.si-series",
    ),
    "ch4.eq10": (
        "ch4.eq10.ci-series",
    ),
    "ch5.eq1": (
        "ch5.eq1.legendre-ode",
    ),
    "ch5.eq2": (
        "ch5.eq2.power-series",
    ),
    "ch5.eq3": (
        "out-of-scope: generic Frobenius template for second-order equations, not a statement about a special function"
    ),
    "ch5.eq4": (
        "ch5.eq2.power-series",
    ),
    "ch5.eq5": (
        "ch5.eq5.generating-function",
    ),
    "ch5.eq6": (
        "ch5.eq6.rodrigues",
        "ch5.eq6.rodrigues-table",
    ),
    "ch5.eq7": (
        "ch5.eq7.laplace-integral",
        "ch5.eq7a.cosine-integral",
    ),
    "ch5.eq7a": (
        "ch5.eq7a.cosine-integral",
    ),
    "ch5.eq8": (
        "ch5.eq8a.value-at-one",
        "ch5.eq8b.value-at-minus-one",
        "ch5.eq8c.slope-at-one",
        "ch5.eq8d.slope-at-minus-one",
        "ch5.eq8e.even-at-zero",
        "ch5.eq8e.even-at-zero.as-printed",
        "ch5.eq8f.odd-at-zero",
    ),
    "ch5.eq9": (
        "ch5.eq9.orthogonality",
    ),
    "ch5.eq10": (
        "ch5.eq10.sturm-liouville",
    ),
    "ch5.eq11": (
        "ch5.eq10.sturm-liouville",
    ),
    "ch5.eq12": (
        "ch5.eq12.expansion",
    ),
    "ch5.eq13": (
        "ch5.eq13.projection",
    ),
    "ch5.eq14": (
        "ch5.eq14a.three-term",
        "ch5.eq14b.derivative-expansion",
        "ch5.eq14b.derivative-expansion.as-printed",
        "ch5.eq14c.derivative-difference",
        "ch5.eq14d.derivative-shift",
        "ch5.eq14e.derivative-shift-down",
    ),
    "ch5.eq15": (
        "ch5.eq15.projection-coefficients",
    ),
    "ch5.eq16": (
        "ch5.eq16.derivative-combination",
    ),
    "ch5.eq17": (
        "ch5.eq17.assoc-ode",
    ),
    "ch5.eq18": (
        "ch5.eq18.assoc-definition",
    ),
    "ch5.eq19": (
        "ch5.eq19.negative-order",
        "ch5.eq19a.derivative-ode",
        "ch5.eq19a.derivative-ode.as-printed",
        "ch5.eq19b.reduced-ode",
    ),
    "ch5.eq19a": (
        "ch5.eq19a.derivative-ode",
        "ch5.eq19a.derivative-ode.as-printed",
    ),
    "ch5.eq19b": (
        "ch5.eq19b.reduced-ode",
    ),
    "ch5.eq20": (
        "ch5.eq20.assoc-orthogonality",
        "ch5.eq20.assoc-orthogonality.as-printed",
        "ch5.eq20a.assoc-sturm-liouville",
        "ch5.eq20c.integration-by-parts",
        "ch5.eq20c.lowering-derivative",
        "ch5.eq20c.norm-ratio",
    ),
    "ch5.eq20a": (
        "ch5.eq20a.assoc-sturm-liouville",
    ),
    "ch5.eq20b": (
        "ch5.eq20a.assoc-sturm-liouville",
    ),
    "ch5.eq20c": (
        "ch5.eq20c.integration-by-parts",
        "ch5.eq20c.lowering-derivative",
        "ch5.eq20c.norm-ratio",
    ),
    "ch5.eq21": (
        "ch5.eq21.angular-laplace",
    ),
    "ch5.eq22": (
        "ch5.eq22.polar-equation",
    ),
    "ch5.eq23": (
        "ch5.eq23.azimuthal-equation",
        "ch5.eq23a.harmonic-definition",
    ),
    "ch5.eq23a": (
        "ch5.eq23a.harmonic-definition",
    ),
    "ch5.eq24": (
        "ch5.eq24.orthonormality",
    ),
    "ch5.eq25": (
        "ch5.eq25.conjugation",
    ),
    "ch5.eq26": (
        "ch5.eq26.hermite-ode",
    ),
    "ch5.eq27": (
        "ch5.eq27.coefficient-table",
        "ch5.eq27.power-series",
    ),
    "ch5.eq28": (
        "ch5.eq28.generating-function",
    ),
    "ch5.eq29": (
        "ch5.eq29.orthogonality",
    ),
    "ch5.eq30": (
        "ch5.eq30.double-series",
        "ch5.eq30.double-series.as-printed",
        "ch5.eq30.generating-integral",
    ),
    "ch5.eq31": (
        "ch5.eq31a.derivative",
        "ch5.eq31b.three-term",
    ),
    "ch5.eq33": (
        "ch5.eq33.laguerre-ode",
    ),
    "ch5.eq34": (
        "ch5.eq34.power-series",
    ),
    "ch5.eq35": (
        "ch5.eq35.generating-function",
    ),
    "ch5.eq36": (
        "ch5.eq36.orthogonality",
    ),
    "ch5.eq37": (
        "ch5.eq37a.three-term",
        "ch5.eq37b.derivative",
        "ch5.eq37c.derivative-sum",
    ),
    "ch5.eq38": (
        "ch5.eq38.generating-derivative",
    ),
    "ch5.eq39": (
        "ch5.eq39.assoc-laguerre-ode",
    ),
    "ch5.eq40": (
        "ch5.eq40.derivative-definition",
    ),
    "ch5.eq41": (
        "ch5.eq41.assoc-series",
        "ch5.eq41.assoc-series.as-printed",
    ),
    "ch5.eq42": (
        "ch5.eq42.generating-function",
    ),
    "ch5.eq43": (
        "ch5.eq43.assoc-orthogonality",
    ),
    "ch5.eq44": (
        "ch5.eq44.double-series",
        "ch5.eq44.double-series.as-printed",
        "ch5.eq44.generating-integral",
    ),
    "ch5.eq45": (
        "ch5.eq45a.order-step",
        "ch5.eq45b.three-term",
        "ch5.eq45c.derivative",
        "ch5.eq45d.derivative-sum",
        "ch5.eq45e.derivative-raise",
        "ch5.eq45f.partial-sum",
    ),
    "ch5.eq46": (
        "ch5.eq46.leibniz",
        "ch5.eq46.leibniz.as-printed",
    ),
    "ch5.eq47": (
        "ch5.eq47.chebyshev-ode",
    ),
    "ch5.eq48": (
        "ch5.eq48.listed-t",
    ),
    "ch5.eq49": (
        "ch5.eq49.listed-u",
    ),
    "ch5.eq50": (
        "ch5.eq50.complex-form-t",
    ),
    "ch5.eq51": (
        "ch5.eq51.complex-form-u",
    ),
    "ch5.eq52": (
        "ch5.eq52.series-t",
    ),
    "ch5.eq53": (
        "ch5.eq53.series-u",
    ),
    "ch5.eq54": (
        "ch5.eq54.generating-t",
    ),
    "ch5.eq55": (
        "ch5.eq55.generating-u",
        "ch5.eq55.generating-u.as-printed",
    ),
    "ch5.eq56": (
        "ch5.eq56.orthogonality-t",
    ),
    "ch5.eq57": (
        "ch5.eq57.orthogonality-u",
    ),
    "ch5.eq58": (
        "ch5.eq58a.three-term-t",
        "ch5.eq58b.derivative-t",
        "ch5.eq58c.three-term-u",
        "ch5.eq58d.derivative-u",
    ),
    "ch6.eq1": (
        "ch6.eq1.pochhammer",
        "ch6.eq1.pochhammer-product",
    ),
    "ch6.eq2": (
        "ch6.eq2.gauss-series",
        "ch6.eq2.symmetry",
    ),
    "ch6.eq3": (
        "ch6.eq3.gauss-ode",
    ),
    "ch6.eq4": (
        "ch6.eq4a.legendre",
        "ch6.eq4b.chebyshev-t",
        "ch6.eq4c.chebyshev-u",
    ),
    "ch6.eq5": (
        "ch6.eq5.taylor-at-one",
        "ch6.eq5.taylor-sum",
    ),
    "ch6.eq6": (
        "ch6.eq6.euler-integral",
    ),
    "ch6.eq7": (
        "ch6.eq7.kummer-series",
    ),
    "ch6.eq8": (
        "ch6.eq8.kummer-ode",
        "ch6.eq8.kummer-ode.as-printed",
    ),
    "ch6.eq9": (
        "ch6.eq9a.assoc-legendre",
        "ch6.eq9b.bessel-kummer",
        "ch6.eq9b.bessel-kummer.as-printed",
        "ch6.eq9c.hermite-even",
        "ch6.eq9d.hermite-odd",
        "ch6.eq9e.laguerre",
        "ch6.eq9f.assoc-laguerre",
    ),
    "ch6.eq10": (
        "ch6.eq10.kummer-integral",
    ),
    "ch6.eq11": (
        "ch6.eq11.bessel-0f1",
        "ch6.eq11.binomial",
        "ch6.eq11.exponential",
        "ch6.eq11.saalschutz",
        "ch6.eq11.series",
    ),
    "ch1.ex1": (
        "ch1.ex1a",
        "ch1.ex1b",
        "ch1.ex1c",
        "ch1.ex1d",
        "ch1.ex1e",
        "ch1.ex1f",
    ),
    "ch1.ex2": (
        "ch1.ex2a",
        "ch1.ex2b",
        "ch1.ex2c",
        "ch1.ex2d",
        "ch1.ex2e",
        "ch1.ex2f",
        "ch1.ex2g",
        "ch1.ex2g.cosine",
        "ch1.ex2h",
        "ch1.ex2i",
    ),
    "ch1.ex3": (
        "ch1.ex3",
        "ch1.ex3.limit",
    ),
    "ch2.ex1": (
        "ch2.ex1.1",
        "ch2.ex1.1.y",
        "ch2.ex1.2",
        "ch2.ex1.2.y",
        "ch2.ex1.3",
        "ch2.ex1.3.minus",
        "ch2.ex1.4",
        "ch2.ex1.4.as-printed",
        "ch2.ex1.4.minus",
        "ch2.ex1.5",
        "ch2.ex1.5.minus",
        "ch2.ex1.6",
        "ch2.ex1.6.as-printed",
        "ch2.ex1.6.minus",
        "ch2.ex1.6.minus-as-printed",
    ),
    "ch2.ex2": (
        "ch2.ex2.1",
        "ch2.ex2.2",
        "ch2.ex2.3",
    ),
    "ch3.ex1": (
        "ch3.ex1a",
        "ch3.ex1b",
    ),
    "ch3.ex2": (
        "ch3.ex2",
        "ch3.ex2.as-printed",
    ),
    "ch3.ex3": (
        "ch3.ex3a",
        "ch3.ex3b",
    ),
    "ch4.ex1": (
        "ch4.ex1a",
        "ch4.ex1b",
        "ch4.ex1b.as-printed",
    ),
    "ch4.ex2": (
        "ch4.ex2.aux-f",
        "ch4.ex2.aux-g",
        "ch4.ex2a",
        "ch4.ex2b",
        "ch4.ex2c",
        "ch4.ex2d",
    ),
    "ch4.ex3": (
        "ch4.ex3",
    ),
    "ch4.ex4": (
        "ch4.ex4",
    ),
    "ch4.ex5": (
        "ch4.ex5",
        "ch4.ex5.as-printed",
    ),
    "ch5.ex1": (
        "ch5.ex1a.potential-integral",
        "ch5.ex1b.derivative-recurrence",
        "ch5.ex1c.log-expansion",
    ),
    "ch5.ex2": (
        "ch5.ex2a.t-from-u",
        "ch5.ex2b.product",
    ),
    "ch5.ex3": (
        "ch5.ex3a.exp-coefficients",
        "ch5.ex3b.exp-expansion",
    ),
    "ch5.ex4": (
        "ch5.ex4a.lowering",
        "ch5.ex4b.raising",
    ),
    "ch5.ex5": (
        "ch5.ex5.laguerre-rodrigues",
    ),
    "ch6.ex1": (
        "ch6.ex1a.binomial",
        "ch6.ex1b.log",
        "ch6.ex1c.artanh",
        "ch6.ex1d.arctan",
        "ch6.ex1e.arcsin",
    ),
    "ch6.ex2": (
        "ch6.ex2.gauss-sum",
        "ch6.ex2.gauss-sum-terminating",
    ),
    "ch6.ex3": (
        "ch6.ex3a.kummer-derivative",
        "ch6.ex3a.kummer-derivative-series",
        "ch6.ex3b.gauss-derivative",
        "ch6.ex3b.gauss-derivative-series",
        "ch6.ex3c.contiguous",
    ),
    "ch6.ex4": (
        "ch6.ex4.bessel-imaginary-part",
        "ch6.ex4.bessel-value",
        "ch6.ex4.poisson-integral",
    ),
    "ch2.asymptotics": (
        "ch2.asym.h1-large",
        "ch2.asym.h2-large",
        "ch2.asym.i-large",
        "ch2.asym.j-large",
        "ch2.asym.j-small",
        "ch2.asym.k-large",
        "ch2.asym.k-large.as-printed",
        "ch2.asym.sph-h1-large",
        "ch2.asym.sph-h2-large",
        "ch2.asym.sph-h2-large.as-printed",
        "ch2.asym.sph-j-large",
        "ch2.asym.sph-j-small",
        "ch2.asym.sph-y-large",
        "ch2.asym.sph-y-large.as-printed",
        "ch2.asym.sph-y-small",
        "ch2.asym.y-large",
        "ch2.asym.y-small",
        "ch2.asym.y0-small",
    ),
}

UNLABELLED: tuple[str, ...] = (
    "ch3.erf.complement",
    "ch3.erf.derivative",
    "ch3.erf.endpoints",
    "ch3.erf.odd",
    "ch3.erfc.asymptotic",
    "ch3.fresnel.derivative",
    "ch3.fresnel.erf-relation",
    "ch3.fresnel.limit-c",
    "ch3.fresnel.limit-s",
    "ch3.fresnel.odd",
    "ch3.fresnel.origin",
    "ch4.sici.ci-large",
    "ch4.sici.ci-origin",
    "ch4.sici.derivatives",
    "ch4.sici.origin",
    "ch4.sici.si-large",
    "ch4.sici.si-limit",
    "ch5.assoc-table",
    "ch5.assoc-table.as-printed",
    "ch5.y11.corrected",
    "ch5.y11.table-entry",
    "ch5.y20.corrected",
    "ch5.y20.table-entry",
    "ch5.y21.corrected",
    "ch5.y21.table-entry",
    "ch5.ylm.table",
)


def uncovered(registry_ids) -> list[str]:
    """Manifest keys whose listed ids are missing from the registry."""
    known = set(registry_ids)
    out = []
    for key, value in MANIFEST.items():
        if isinstance(value, str):
            if not value.startswith("out-of-scope:"):
                out.append(key)
        elif not value or any(i not in known for i in value):
            out.append(key)
    return out
