"""Case classification and index iteration for completely non-degenerate maps.

A geodesic model is a normal-form decomposition of total dimension 2(n-1)
together with the free integer parameter p of its homotopy class.  The five
case shapes determine closed iteration formulas for the Morse index of
every iterate; the nullity vanishes identically (bumpy hypothesis).
"""

from __future__ import annotations

import enum
import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import ExactReal, floor_scaled
from .symplectic import (
    Hyp,
    NBlock,
    NormalFormDecomposition,
    Rot,
    decomposition_from_json,
    decomposition_to_json,
)


class Case(enum.Enum):
    NCG1 = "NCG1"
    NCG2 = "NCG2"
    NCG3 = "NCG3"
    NCG4 = "NCG4"
    NCG5 = "NCG5"


class ModelInvariantError(ValueError):
    """Model data violates its case shape or parameter constraints."""


def classify(n: int, dec: NormalFormDecomposition) -> Case:
    """Determine the case tag from the non-N block census.

    With k rotations and h hyperbolic blocks among the 2x2 blocks:
    h = 0 with k > 0 is NCG1 (a rotation-only tail, including the k = 1
    boundary, where the NCG1 and NCG4 formulas agree); h = 0 with k = 0
    is NCG5 with an empty hyperbolic tail; otherwise k = 0 -> NCG5,
    k = 1 -> NCG4, k even -> NCG2, k odd -> NCG3.
    """
    if dec.total_dim != 2 * (n - 1):
        raise ModelInvariantError(
            f"decomposition has dimension {dec.total_dim}, expected {2 * (n - 1)}"
        )
    k = dec.count(Rot)
    h = dec.count(Hyp)
    if h == 0:
        return Case.NCG1 if k > 0 else Case.NCG5
    if k == 0:
        return Case.NCG5
    if k == 1:
        return Case.NCG4
    return Case.NCG2 if k % 2 == 0 else Case.NCG3


@dataclass(frozen=True)
class GeodesicModel:
    """One hypothetical prime closed geodesic: blocks + homotopy parameter p."""

    n: int
    dec: NormalFormDecomposition
    p: int
    case: Case = field(init=False)
    _memo: dict = field(init=False, repr=False, compare=False, hash=False)
    _lock: threading.Lock = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 2:
            raise ModelInvariantError("sphere dimension n must be >= 2")
        case = classify(self.n, self.dec)
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "_memo", {})
        object.__setattr__(self, "_lock", threading.Lock())
        k, r = self.k, self.r
        if case is Case.NCG1:
            if self.initial_index < 0:
                raise ModelInvariantError(
                    f"NCG1 requires i(c) = 2p + (n - 2r - 1) >= 0, got {self.initial_index}"
                )
        else:
            if self.p < 0:
                raise ModelInvariantError(f"{case.value} requires p >= 0, got {self.p}")
        if case is Case.NCG2 and not (2 <= k <= self.n - 2 * r - 2):
            raise ModelInvariantError(f"NCG2 needs even k with 2 <= k <= n-2r-2, got k={k}")
        if case is Case.NCG3 and not (3 <= k <= self.n - 2 * r - 2):
            raise ModelInvariantError(f"NCG3 needs odd k with 3 <= k <= n-2r-2, got k={k}")

    @property
    def r(self) -> int:
        return self.dec.count(NBlock)

    @property
    def k(self) -> int:
        return self.dec.count(Rot)

    @property
    def rotation_numbers(self) -> tuple[ExactReal, ...]:
        return tuple(b.rho for b in self.dec.rotations)

    @property
    def initial_index(self) -> int:
        """i(c) = i(c^1)."""
        if self.case is Case.NCG1:
            return 2 * self.p + (self.n - 2 * self.r - 1)
        return self.p

    def __hash__(self):
        return hash((self.n, self.dec, self.p))


def index_of_iterate(g: GeodesicModel, m: int) -> tuple[int, int]:
    """(i(c^m), nu(c^m)); nu is identically 0.

    Results are memoized per model: Morse tables re-query heavily.
    """
    if m < 1:
        raise ValueError("iterate m must be positive")
    with g._lock:
        cached = g._memo.get(m)
    if cached is not None:
        return cached
    rhos = g.rotation_numbers
    n, p, k = g.n, g.p, g.k
    if g.case is Case.NCG1:
        i = 2 * m * p + 2 * sum(floor_scaled(rho, m) for rho in rhos) + (n - 2 * g.r - 1)
    elif g.case in (Case.NCG2, Case.NCG3):
        i = m * (p - k) + 2 * sum(floor_scaled(rho, m) for rho in rhos) + k
    elif g.case is Case.NCG4:
        i = m * (p - 1) + 2 * floor_scaled(rhos[0], m) + 1
    else:  # NCG5
        i = m * p
    result = (i, 0)
    with g._lock:
        g._memo[m] = result
    return result


def mean_index(g: GeodesicModel) -> ExactReal:
    """Exact mean index: the per-iterate slope of i(c^m)."""
    two = ExactReal(2)
    rho_sum = ExactReal(0)
    for rho in g.rotation_numbers:
        rho_sum = rho_sum + rho
    if g.case is Case.NCG1:
        return ExactReal(2 * g.p) + two * rho_sum
    if g.case in (Case.NCG2, Case.NCG3):
        return ExactReal(g.p - g.k) + two * rho_sum
    if g.case is Case.NCG4:
        return ExactReal(g.p - 1) + two * rho_sum
    return ExactReal(g.p)


def analytic_period(g: GeodesicModel) -> int:
    """Minimal period N of the critical-type sequence (always 1 or 2).

    N = 1 iff i(c^m) - i(c) is even for every m; the parity increment per
    iterate is p - k, p - 1, or p depending on the case.
    """
    if g.case is Case.NCG1:
        return 1
    if g.case in (Case.NCG2, Case.NCG5):
        return 1 if g.p % 2 == 0 else 2
    # NCG3 (k odd) and NCG4 (one rotation): increment p - k resp. p - 1
    return 2 if g.p % 2 == 0 else 1


def critical_type(g: GeodesicModel, m: int) -> tuple[int, int]:
    """(epsilon, k0) at the m-th iterate.

    epsilon = (-1)^(i(c^m) - i(c)); in the non-degenerate case the local
    homology contributes exactly when epsilon = +1, so k0 = 1 iff epsilon = +1.
    """
    i_m, _ = index_of_iterate(g, m)
    i_1 = g.initial_index
    epsilon = 1 if (i_m - i_1) % 2 == 0 else -1
    return epsilon, 1 if epsilon == 1 else 0


def critical_module_dim(g: GeodesicModel, m: int, q: int) -> int:
    """Rank of the degree-q local critical module of c^m: 0 or 1."""
    i_m, _ = index_of_iterate(g, m)
    if q != i_m:
        return 0
    return 1 if (i_m - g.initial_index) % 2 == 0 else 0


# -- JSON serialization ----------------------------------------------------

def model_to_json(g: GeodesicModel) -> dict:
    return {
        "n": g.n,
        "p": g.p,
        "case": g.case.value,
        "dec": decomposition_to_json(g.dec),
    }


def model_from_json(obj: dict) -> GeodesicModel:
    g = GeodesicModel(n=int(obj["n"]), dec=decomposition_from_json(obj["dec"]), p=int(obj["p"]))
    declared = obj.get("case")
    if declared is not None and declared != g.case.value:
        raise ModelInvariantError(
            f"declared case {declared} does not match classified case {g.case.value}"
        )
    return g


def dumps(g: GeodesicModel) -> str:
    return json.dumps(model_to_json(g), sort_keys=True, separators=(",", ":"))
