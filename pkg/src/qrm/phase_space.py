"""Degrees of freedom, action budgets, and Hilbert-space dimension accounting.

A degree of freedom is a canonical coordinate pair (q, p).  The physical
resource it contributes is the phase-space area it spans, the *action*
A = Delta-q * Delta-p, measured here in units of Planck's constant h.  Each
orthogonal quantum state occupies roughly one cell of area h, so a degree
of freedom with action A supplies about A/h orthogonal states, and a system
of several degrees of freedom supplies the product of the per-DOF counts
(its Hilbert space is the tensor product of the per-DOF spaces).

Rounding convention: the per-DOF dimension is floor(A/h), clamped to a
minimum of 1.  A/h only *approximates* the number of distinguishable
states, so the rounding rule is a modelling choice, not physics.  Flooring
is the conservative option (a fractional leftover cell cannot hold an extra
orthogonal state) and the clamp encodes that every degree of freedom has at
least a one-dimensional state space.  Qudits are exempt: they are defined
by an exact integer level count, which is used directly.

Exact dimensions are kept as arbitrary-precision integers; base-2
logarithms are carried alongside for reporting at scales (e.g. 2^100)
where the exact count is unprintable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [
    "ActionBudget",
    "Continuous",
    "AngularMomentum",
    "Qudit",
    "DegreeOfFreedom",
    "SystemModel",
    "DimensionBudget",
    "action_of",
    "dof_dimension",
    "system_dimension",
    "qubit_equivalent",
]


@dataclass(frozen=True)
class ActionBudget:
    """Phase-space action supplied by one degree of freedom, in units of h."""

    in_units_of_h: float

    def __post_init__(self) -> None:
        value = float(self.in_units_of_h)
        if not math.isfinite(value) or value < 0.0:
            raise DomainError(f"action must be finite and >= 0, got {self.in_units_of_h!r}")
        object.__setattr__(self, "in_units_of_h", value)

    @classmethod
    def from_phase_ranges(cls, delta_q: float, delta_p: float, planck_h: float) -> "ActionBudget":
        """Action from coordinate and momentum ranges: A/h = dq*dp/h.

        ``planck_h`` is the value of Planck's constant in whatever units
        ``delta_q * delta_p`` carries; it must be positive.
        """
        if not math.isfinite(planck_h) or planck_h <= 0.0:
            raise DomainError(f"h must be finite and > 0, got {planck_h!r}")
        return cls(delta_q * delta_p / planck_h)

    @classmethod
    def from_angular_range(cls, delta_j_over_hbar: float) -> "ActionBudget":
        """Action from an angular-momentum range: A = 2*pi*dJ, so A/h = dJ/hbar."""
        return cls(float(delta_j_over_hbar))


@dataclass(frozen=True)
class Continuous:
    """A continuous coordinate pair with an explicit action budget."""

    action: ActionBudget


@dataclass(frozen=True)
class AngularMomentum:
    """An intrinsic angular momentum spanning a range delta-J (in units hbar)."""

    delta_j_over_hbar: float

    def __post_init__(self) -> None:
        value = float(self.delta_j_over_hbar)
        if not math.isfinite(value) or value < 0.0:
            raise DomainError(f"delta_j_over_hbar must be finite and >= 0, got {self.delta_j_over_hbar!r}")
        object.__setattr__(self, "delta_j_over_hbar", value)


@dataclass(frozen=True)
class Qudit:
    """A degree of freedom providing exactly ``levels`` orthogonal states."""

    levels: int

    def __post_init__(self) -> None:
        if not isinstance(self.levels, int) or self.levels < 1:
            raise DomainError(f"qudit levels must be an integer >= 1, got {self.levels!r}")


DegreeOfFreedom = Continuous | AngularMomentum | Qudit


@dataclass(frozen=True)
class SystemModel:
    """A named collection of degrees of freedom with multiplicities.

    ``entries`` preserves declaration order; multiplicities are stored
    rather than expanded so that million-DOF systems stay representable.
    An empty model is allowed and has dimension 1.
    """

    name: str
    entries: tuple[tuple[DegreeOfFreedom, int], ...] = field(default=())

    def __post_init__(self) -> None:
        normalized = []
        for dof, multiplicity in self.entries:
            if not isinstance(dof, (Continuous, AngularMomentum, Qudit)):
                raise DomainError(f"not a degree of freedom: {dof!r}")
            if not isinstance(multiplicity, int) or multiplicity < 1:
                raise DomainError(f"multiplicity must be an integer >= 1, got {multiplicity!r}")
            normalized.append((dof, multiplicity))
        object.__setattr__(self, "entries", tuple(normalized))

    @property
    def total_dof_count(self) -> int:
        return sum(multiplicity for _, multiplicity in self.entries)


@dataclass(frozen=True)
class DimensionBudget:
    """Exact Hilbert-space dimension of a system, with log-domain companions.

    ``exact`` is the arbitrary-precision product of per-DOF dimensions.
    ``phase_space_volume_log2`` is log2 of the *unrounded* product of the
    per-DOF actions, i.e. log2(V / h^T) where V is the phase-space volume
    and T the number of degrees of freedom; it is -inf when any DOF has
    zero action.
    """

    exact: int
    log2: float
    phase_space_volume_log2: float


def action_of(dof: DegreeOfFreedom) -> ActionBudget:
    """Action budget supplied by a degree of freedom, in units of h.

    A qudit's action equals its level count (A/h ~ D); dimension accounting
    for qudits nevertheless uses the exact integer, never this float.
    """
    if isinstance(dof, Continuous):
        return dof.action
    if isinstance(dof, AngularMomentum):
        return ActionBudget.from_angular_range(dof.delta_j_over_hbar)
    if isinstance(dof, Qudit):
        return ActionBudget(float(dof.levels))
    raise TypeError(f"not a degree of freedom: {dof!r}")


def dof_dimension(dof: DegreeOfFreedom) -> int:
    """Orthogonal states available to one degree of freedom.

    floor(A/h) clamped to >= 1 (see the module docstring for why);
    a qudit contributes exactly its level count.
    """
    if isinstance(dof, Qudit):
        return dof.levels
    return max(1, math.floor(action_of(dof).in_units_of_h))


def system_dimension(sys: SystemModel) -> DimensionBudget:
    """Exact dimension of the tensor-product Hilbert space of ``sys``."""
    exact = 1
    volume_log2 = 0.0
    for dof, multiplicity in sys.entries:
        exact *= dof_dimension(dof) ** multiplicity
        action = action_of(dof).in_units_of_h
        volume_log2 += multiplicity * (math.log2(action) if action > 0.0 else -math.inf)
    return DimensionBudget(exact=exact, log2=math.log2(exact), phase_space_volume_log2=volume_log2)


def qubit_equivalent(sys: SystemModel) -> int:
    """floor(log2(dimension)): how many qubits the system's space could hold.

    Computed from the exact integer's bit length, never through floating
    point, so it stays correct at 2^100 scales and beyond.
    """
    return system_dimension(sys).exact.bit_length() - 1
