"""Strict feasibility of homogeneous rational systems, with certificates.

Either side of Gordan's alternative is returned as exact data: a rational
point making every row strictly positive, or a nonnegative nonzero rational
combination of the rows equal to zero.  The decision kernel is compiled
(hyparr._fmcore) when the extension built, with the pure-Python twin as
fallback; set HYPARR_PURE=1 to force the pure kernel.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from . import _fmpure
from .errors import Infeasible
from .linalg import RatVector, primitive_int_vector

try:
    from . import _fmcore
except ImportError:  # extension not built
    _fmcore = None

_FORCE_PURE = os.environ.get("HYPARR_PURE", "") not in ("", "0")


def kernel_name() -> str:
    if _fmcore is not None and not _FORCE_PURE:
        return "compiled"
    return "pure"


def _solve_int(rows, dim):
    if _fmcore is not None and not _FORCE_PURE:
        res = _fmcore.solve(rows, dim)
        if res is not None:
            return res
    return _fmpure.solve(rows, dim)


@dataclass(frozen=True)
class StrictSystem:
    """Rows r with the meaning r . x > 0; rows are already sign-adjusted."""

    forms: tuple[RatVector, ...]
    dim: int

    @classmethod
    def of(cls, rows, dim) -> "StrictSystem":
        forms = tuple(r if isinstance(r, RatVector) else RatVector.of(r) for r in rows)
        for i, f in enumerate(forms):
            if f.dim != dim:
                raise ValueError(f"row {i} has dim {f.dim}, expected {dim}")
            if f.is_zero():
                raise ValueError(f"row {i} is zero")
        return cls(forms, dim)


@dataclass(frozen=True)
class FeasibilityResult:
    """Exactly one of witness / dual is present."""

    witness: RatVector | None
    dual: tuple[Fraction, ...] | None

    @property
    def feasible(self) -> bool:
        return self.witness is not None

    def verify(self, sys: StrictSystem) -> bool:
        """Re-check the certificate against the system by direct arithmetic."""
        if self.witness is not None:
            return all(f.dot(self.witness) > 0 for f in sys.forms)
        assert self.dual is not None
        if len(self.dual) != len(sys.forms):
            return False
        if any(y < 0 for y in self.dual) or all(y == 0 for y in self.dual):
            return False
        for j in range(sys.dim):
            if sum((y * f[j] for y, f in zip(self.dual, sys.forms)), Fraction(0)) != 0:
                return False
        return True


def strict_feasible(sys: StrictSystem) -> FeasibilityResult:
    """Decide the system; total, deterministic for a fixed input.

    The empty system is feasible with the stand-in witness (1, 0, ..., 0).
    """
    if not sys.forms:
        if sys.dim == 0:
            return FeasibilityResult(RatVector(()), None)
        point = (Fraction(1),) + tuple(Fraction(0) for _ in range(sys.dim - 1))
        return FeasibilityResult(RatVector(point), None)
    prim = []
    scales = []
    for f in sys.forms:
        p = primitive_int_vector(f.entries)
        prim.append(p)
        j = next(i for i, x in enumerate(p) if x != 0)
        scales.append(Fraction(p[j]) / f[j])
    kind, data = _solve_int(tuple(prim), sys.dim)
    if kind == "dual":
        dual = tuple(Fraction(c) * s for c, s in zip(data, scales))
        res = FeasibilityResult(None, dual)
    else:
        point = _fmpure.witness_from_stages(data, sys.dim)
        res = FeasibilityResult(RatVector(point), None)
    assert res.verify(sys)
    return res


def interior_witness(sys: StrictSystem) -> RatVector:
    """A deep rational point of the open cone.

    The point maximizes, exactly, the smallest slack over the unit
    cross-polytope, so every slack is at least the best achievable minimum.
    Raises Infeasible when the system has a dual certificate.
    """
    if not sys.forms:
        return strict_feasible(sys).witness
    res = strict_feasible(sys)
    if not res.feasible:
        raise Infeasible("system has a dual certificate")
    prim = tuple(primitive_int_vector(f.entries) for f in sys.forms)
    t_star, point = _fmpure.maximin_on_cross_polytope(prim, sys.dim)
    assert t_star > 0
    return RatVector(point)


def signed_system(A, eps, indices=None) -> StrictSystem:
    """System {eps_i * form_i . x > 0} over the given indices (default: all)."""
    if indices is None:
        indices = range(A.n)
    rows = [A.hyperplanes[i].form.scale(eps[i]) for i in indices]
    return StrictSystem.of(rows, A.dim) if rows else StrictSystem((), A.dim)
