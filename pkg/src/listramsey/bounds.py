"""Numeric evaluation of the closed-form list-Ramsey bounds.

Every evaluator returns a :class:`BoundReport`. Arithmetic is done in
200-bit interval arithmetic (``mpmath.iv``); lower bounds are reported as
the lower endpoint and upper bounds as the upper endpoint, so a reported
sandwich is never tighter than the exact one. Asymptotic ``o(1)`` terms
and unspecified constants are never folded into a number silently: each
report lists them under ``caveats``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, floor
from typing import Optional, Union

import mpmath

from .construct import FeasibilityReport, lll_host_feasibility  # noqa: F401  (re-exported)

Number = Union[int, float, Fraction]

_PREC = 200


def _iv(x: Number):
    x = Fraction(x)
    return mpmath.iv.mpf(x.numerator) / mpmath.iv.mpf(x.denominator)


def c_r(r: int) -> float:
    """``((r-2)! / e)^(1/(r-1))``."""
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    return float(mpmath.power(factorial(r - 2) / mpmath.e, mpmath.mpf(1) / (r - 1)))


def _c_r_iv(r: int):
    return mpmath.iv.power(_iv(factorial(r - 2)) / mpmath.iv.e, _iv(Fraction(1, r - 1)))


@dataclass
class BoundReport:
    theorem: str
    inputs: dict
    lower: Optional[float] = None
    upper: Optional[float] = None
    c_r: Optional[float] = None
    values: dict = field(default_factory=dict)
    caveats: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        inputs = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.inputs.items()}
        values = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.values.items()}
        return {
            "theorem": self.theorem,
            "inputs": inputs,
            "lower": self.lower,
            "upper": self.upper,
            "c_r": self.c_r,
            "values": values,
            "caveats": list(self.caveats),
        }


def _check_pi(pi_est: Number) -> Fraction:
    pi = Fraction(pi_est).limit_denominator(10**12) if isinstance(pi_est, float) else Fraction(pi_est)
    if not 0 <= pi < 1:
        raise ValueError(f"Turán density estimate must lie in [0, 1), got {pi_est}")
    return pi


def _pi_caveat(pi_source: Optional[str]) -> list[str]:
    if pi_source:
        return [f"pi(H) is an estimate: {pi_source}"]
    return []


def theorem12_lower(pi_est: Number, r: int, k: int, pi_source: Optional[str] = None) -> BoundReport:
    """Lower bound ``c_r * (1 - pi)^(-k/(r-1))`` on ``R_l(H, k)`` for non-``r``-partite ``H``."""
    pi = _check_pi(pi_est)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    with mpmath.workprec(_PREC):
        val = _c_r_iv(r) * mpmath.iv.power(1 - _iv(pi), _iv(Fraction(-k, r - 1)))
        lo = float(val.a)
    rep = BoundReport(
        "exponential-lower",
        {"pi": pi, "r": r, "k": k},
        lower=lo,
        c_r=c_r(r),
        values={"integer_lower": floor(lo)},
        caveats=_pi_caveat(pi_source),
    )
    if pi == 0:
        rep.caveats.append("pi(H) = 0: bound is trivial (H is r-partite)")
    if lo < r:
        rep.caveats.append("bound is below r and therefore vacuous at this k")
    return rep


def theorem11_bounds(
    chi: int,
    m: Number,
    pi_est: Number,
    r: int,
    k: int,
    non_r_partite: bool = False,
    pi_source: Optional[str] = None,
) -> BoundReport:
    """``exp(sqrt(k log(chi-1) / (4r))) <= R_l(H, k) <= (1 - pi)^(-k m(H))``.

    The upper side drops an ``o(1)`` inside the base; this is listed as a
    caveat. With ``non_r_partite`` the input ``m`` is checked against
    ``m(H) > 1/(r-1)``.
    """
    if chi < 2:
        raise ValueError(f"chromatic number must be at least 2, got {chi}")
    pi = _check_pi(pi_est)
    m = Fraction(m)
    if non_r_partite and m <= Fraction(1, r - 1):
        raise ValueError(f"m(H) = {m} <= 1/(r-1) is impossible for a non-r-partite H")
    with mpmath.workprec(_PREC):
        low = mpmath.iv.exp(mpmath.iv.sqrt(k * mpmath.iv.log(_iv(chi - 1)) / (4 * r)))
        up = mpmath.iv.power(1 - _iv(pi), _iv(-k * m))
        lo, hi = float(low.a), float(up.b)
    rep = BoundReport(
        "chromatic-sandwich",
        {"chi": chi, "m": m, "pi": pi, "r": r, "k": k},
        lower=lo,
        upper=hi,
        caveats=["upper bound: o(1) term in the base dropped (valid as k -> infinity)",
                 "both bounds are asymptotic statements for k -> infinity"],
    )
    rep.caveats += _pi_caveat(pi_source)
    if chi == 2:
        rep.caveats.append("chi(H) = 2: lower bound is the vacuous value 1")
    if lo > hi:
        rep.caveats.append("lower exceeds upper: inputs are outside the asymptotic regime")
    return rep


def theorem31_bounds(s: int, k: int) -> BoundReport:
    """``s^k / e <= R_l(H_s, k) <= s^k + 1`` for the family of graphs with chromatic number above ``s``."""
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    with mpmath.workprec(_PREC):
        lo = float((_iv(s**k) / mpmath.iv.e).a)
    return BoundReport("chromatic-family", {"s": s, "k": k}, lower=lo, upper=float(s**k + 1), c_r=c_r(2))


def size_degree_lowers(pi_est: Number, k: int, pi_source: Optional[str] = None) -> BoundReport:
    """Lower bounds for the list size and list degree Ramsey numbers of graphs.

    The size bound ``(1 - pi)^(-k)`` is exact (rational). The degree bound
    is only known up to an unspecified constant factor, so just its
    exponential base ``1 / (1 - pi)`` is reported.
    """
    pi = _check_pi(pi_est)
    size = (1 / (1 - pi)) ** k
    rep = BoundReport(
        "size-degree",
        {"pi": pi, "k": k},
        lower=float(size),
        values={"size_lower": size, "degree_base": 1 / (1 - pi)},
        caveats=["degree bound: Omega((1-pi)^-k) with an unspecified constant c(H); only the base is given"],
    )
    rep.caveats += _pi_caveat(pi_source)
    if pi == 0:
        rep.caveats.append("pi(H) = 0: size bound is the vacuous value 1")
    return rep


def pattern_reports(pattern, k: int, n_max: int = 8, **budget) -> list[BoundReport]:
    """Evaluate the single-pattern bounds from computed parameters of ``pattern``.

    ``chi`` and ``m`` are exact; ``pi`` is the last ratio of the exact
    Turán table up to ``n_max`` (an upper estimate).
    """
    from .extremal import density_estimate, m_parameter
    from .hypergraph import is_r_partite, weak_chromatic_number

    r = pattern.r
    chi = weak_chromatic_number(pattern)
    partite, _ = is_r_partite(pattern)
    est = density_estimate(pattern, n_max, **budget)
    pi = est.upper_estimate
    last_n = est.rows[-1][0] if est.rows else None
    source = f"ex(n,H)/C(n,r) at n = {last_n} (upper estimate)"
    if est.truncated:
        source += f"; table truncated at n = {est.truncated_at} by the budget"
    out = []
    if pi is not None and pi < 1:
        out.append(theorem12_lower(pi, r, k, pi_source=source))
        if pattern.num_edges >= 2:
            out.append(theorem11_bounds(max(chi, 2), m_parameter(pattern), pi, r, k,
                                        non_r_partite=not partite, pi_source=source))
    if partite:
        for rep in out:
            rep.caveats.append("H is r-partite: the exponential bounds do not apply")
    return out
