"""Concordance-invariant bounds and the audit predicates built on them.

tau_s_bounds reads off the writhe-based window for the tau and s
invariants of a knot presented as a braid closure.  The closed forms
(torus tau, upsilon at t=1 for the two torus families, and the
four-genus of their difference) feed the audits; everything else about
g3/g4 is caller-supplied ground truth, never invented here.

audit_bounds evaluates the floor and twist-coefficient inequalities a
braid closure is expected to satisfy:

  ito         |floor| < (4*g3 - 2)/(n + 2) + 3/2  and  |BT| <= g3 + 2
  question15  |BT| <= 2*g4 + n - 2   (open question: failures are
              counterexample candidates, not errors)
  slice3      |BT| <= 1 for 3-braids whose closure has finite
              concordance order
  qp          0 <= BT <= m - 1 for quasipositive words of m bands,
              plus the question15 form when g4 is also supplied
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, closure_components, exponent_counts
from .fdtc import dehornoy_floor, fdtc_exact

PREDICATES = ("ito", "question15", "slice3", "qp")


@dataclass(frozen=True)
class InvariantBounds:
    tau_lo: Fraction
    tau_hi: Fraction
    s_lo: Fraction
    s_hi: Fraction


def tau_s_bounds(w: BraidWord) -> InvariantBounds:
    """Window for tau and s of the closure knot, from the word as written.

    With k positive letters, l negative letters, and n strands:
    (k-l-n+1)/2 <= tau <= (k-l+n-1)/2 and s is sandwiched by twice
    those endpoints.  The bounds depend on the chosen word, not just
    the closure: a wasteful word widens nothing but shifts the window.
    """
    if closure_components(w) != 1:
        raise ValueError("closure is not a knot")
    k, l, _ = exponent_counts(w)
    n = w.strands
    return InvariantBounds(
        tau_lo=Fraction(k - l - n + 1, 2),
        tau_hi=Fraction(k - l + n - 1, 2),
        s_lo=Fraction(k - l - n + 1),
        s_hi=Fraction(k - l + n - 1),
    )


def torus_tau(p: int, q: int) -> Fraction:
    """tau of the (p,q) torus knot: (p-1)(q-1)/2."""
    if p < 1 or q < 1:
        raise ValueError(f"torus parameters must be positive, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ValueError(f"torus parameters must be coprime, got ({p}, {q})")
    return Fraction((p - 1) * (q - 1), 2)


def upsilon_at_one(family: str, index: int) -> int:
    """Upsilon(1) for the two torus families with known closed forms.

    "T2" with index k is the (2, 2k+1) torus knot, value -k; "T3" with
    index m is the (3, 3m+1) torus knot, value -2m.  Anything else is
    out of scope on purpose.
    """
    if index < 0:
        raise ValueError(f"family index must be nonnegative, got {index}")
    if family == "T2":
        return -index
    if family == "T3":
        return -2 * index
    raise ValueError(f"unknown family {family!r}, expected 'T2' or 'T3'")


def g4_torus_difference(m: int, k: int) -> Fraction:
    """Four-genus of the difference knot T(3,3m+1) # -T(2,2k+1).

    Both tau and upsilon(1) bound the four-genus of a difference from
    below, and for these families one of the two is always sharp.
    """
    if m < 0 or k < 0:
        raise ValueError(f"family indices must be nonnegative, got ({m}, {k})")
    tau_gap = abs(torus_tau(3, 3 * m + 1) - torus_tau(2, 2 * k + 1))
    upsilon_gap = abs(upsilon_at_one("T3", m) - upsilon_at_one("T2", k))
    return Fraction(max(tau_gap, Fraction(upsilon_gap)))


def _as_rational(value) -> Fraction:
    return Fraction(value)


def audit_bounds(
    w: BraidWord,
    *,
    g3=None,
    g4=None,
    g4_upper=None,
    finite_concordance_order: bool | None = None,
    qp_length: int | None = None,
    predicates: list[str] | tuple[str, ...] | None = None,
    cap: int | None = None,
) -> dict:
    """Evaluate the bound predicates against computed floor and BT.

    With predicates=None, every predicate whose inputs were supplied is
    evaluated; explicitly requesting one without its inputs is an error.
    Genus values are caller-provided ground truth.  question15 failures
    are flagged counterexample-candidate rather than fail: the bound is
    an open question, and a braid violating it is a discovery to report,
    not a broken invariant.
    """
    if closure_components(w) != 1:
        raise ValueError("closure is not a knot")
    n = w.strands
    if predicates is None:
        requested = []
        if g3 is not None:
            requested.append("ito")
        if g4 is not None or g4_upper is not None:
            requested.append("question15")
        if finite_concordance_order is not None:
            requested.append("slice3")
        if qp_length is not None:
            requested.append("qp")
    else:
        requested = list(predicates)
        for name in requested:
            if name not in PREDICATES:
                raise ValueError(f"unknown predicate {name!r}")
        if "ito" in requested and g3 is None:
            raise ValueError("predicate 'ito' needs g3")
        if "question15" in requested and g4 is None and g4_upper is None:
            raise ValueError("predicate 'question15' needs g4 or g4_upper")
        if "slice3" in requested and finite_concordance_order is None:
            raise ValueError("predicate 'slice3' needs finite_concordance_order")
        if "qp" in requested and qp_length is None:
            raise ValueError("predicate 'qp' needs qp_length")

    floor = dehornoy_floor(w, cap=cap).floor
    bt = fdtc_exact(w, cap=cap).value
    record: dict = {
        "strands": n,
        "floor": floor,
        "fdtc": bt,
        "predicates": [],
    }

    for name in requested:
        if name == "ito":
            g3_val = _as_rational(g3)
            floor_bound = Fraction(4 * g3_val - 2, n + 2) + Fraction(3, 2)
            bt_bound = g3_val + 2
            ok = abs(floor) < floor_bound and abs(bt) <= bt_bound
            record["predicates"].append(
                {
                    "predicate": "ito",
                    "status": "pass" if ok else "fail",
                    "g3": g3_val,
                    "floor_bound": floor_bound,
                    "bt_bound": bt_bound,
                }
            )
        elif name == "question15":
            g4_is_upper = g4 is None
            g4_val = _as_rational(g4_upper if g4_is_upper else g4)
            bound = 2 * g4_val + n - 2
            ok = abs(bt) <= bound
            record["predicates"].append(
                {
                    "predicate": "question15",
                    "status": "pass" if ok else "counterexample-candidate",
                    "g4": g4_val,
                    "g4_is_upper": g4_is_upper,
                    "bound": bound,
                }
            )
        elif name == "slice3":
            if n != 3:
                entry = {"predicate": "slice3", "status": "skipped", "reason": "needs a 3-braid"}
            elif not finite_concordance_order:
                entry = {
                    "predicate": "slice3",
                    "status": "skipped",
                    "reason": "closure not flagged as finite concordance order",
                }
            else:
                entry = {
                    "predicate": "slice3",
                    "status": "pass" if abs(bt) <= 1 else "fail",
                    "bound": Fraction(1),
                }
            record["predicates"].append(entry)
        elif name == "qp":
            m = qp_length
            if m is None or m < 1:
                raise ValueError(f"qp_length must be a positive band count, got {m}")
            upper = Fraction(m - 1)
            ok = 0 <= bt <= upper
            entry = {
                "predicate": "qp",
                "status": "pass" if ok else "fail",
                "qp_length": m,
                "bound": upper,
            }
            if g4 is not None:
                genus_bound = 2 * _as_rational(g4) + n - 2
                entry["genus_bound"] = genus_bound
                if bt > genus_bound:
                    entry["status"] = "fail"
            record["predicates"].append(entry)
    return record
