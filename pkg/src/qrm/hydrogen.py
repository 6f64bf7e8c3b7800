"""Bound-state counting for a hydrogenic atom as a worked nonscalable case.

A single atom offers only three internal degrees of freedom (the relative
coordinates of electron and nucleus), so cramming 2^N dimensions into its
bound states forces the principal quantum number - and with it the orbital
radius, which grows as n^2 - to blow up exponentially with N.  This module
does that bookkeeping exactly: level n contributes n^2 states (ignoring
spin), the total through level n is n(n+1)(2n+1)/6, and the threshold level
for a target dimension is found by big-integer binary search, since
floating point silently loses the answer near 2^100.

Everything internal is in atomic units (e = m = hbar = 1): energies in
hartree, lengths in Bohr radii, momenta in hbar per Bohr radius.  Only two
conversion constants appear, both named below with their sources.  Spin is
ignored throughout; including it multiplies state counts by small constants
without changing any scaling conclusion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "BOHR_RADIUS_KM",
    "SUN_DIAMETER_KM",
    "OrbitParameters",
    "HydrogenReport",
    "bound_state_count",
    "min_principal_qn",
    "orbit_parameters",
    "radius_report",
]

# CODATA 2018 Bohr radius, 5.29177210903e-11 m, expressed in km.
BOHR_RADIUS_KM = 5.29177210903e-14
# Mean solar diameter in km (twice the ~696 350 km photospheric radius).
SUN_DIAMETER_KM = 1.3927e6

_SPIN_NOTE = (
    "Spin is ignored; including it multiplies state counts by small "
    "constants and does not change the scaling."
)


@dataclass(frozen=True)
class OrbitParameters:
    """Energy, size, and momentum of the stationary state at level ``n``.

    Atomic units: energy in hartree (e^2/a0), radius in Bohr radii (kept
    exact as the integer n^2), momentum in hbar/a0.  The radius-momentum
    product is n units of hbar, so the three degrees of freedom together
    span ~n^3 phase-space cells - matching the exact state count's n^3/3
    asymptotics.
    """

    n: int
    energy_hartree: float
    radius_a0: int
    momentum_hbar_per_a0: float


@dataclass(frozen=True)
class HydrogenReport:
    """What it takes for one atom's bound states to hold ``target_qubits`` qubits."""

    target_qubits: int
    n_min: int
    state_count: int
    radius_a0: int
    radius_km: float
    sun_diameter_ratio: float
    note: str = _SPIN_NOTE


def bound_state_count(n: int) -> int:
    """Bound states with principal quantum number <= n, spin ignored.

    Level k holds sum(2l+1 for l in 0..k-1) = k^2 states; the running total
    is the square pyramidal number n(n+1)(2n+1)/6, evaluated in exact
    integer arithmetic.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"principal quantum number must be an integer >= 0, got {n!r}")
    return n * (n + 1) * (2 * n + 1) // 6


def min_principal_qn(target_qubits: int) -> int:
    """Smallest n whose bound-state count reaches 2**target_qubits.

    Exact big-integer binary search: the upper bracket doubles from 2 until
    it covers the target, then the bracket halves.  The result satisfies
    count(n) >= 2^N > count(n - 1).
    """
    if not isinstance(target_qubits, int) or target_qubits < 1:
        raise DomainError(f"target qubit count must be an integer >= 1, got {target_qubits!r}")
    target = 1 << target_qubits
    high = 2
    while bound_state_count(high) < target:
        high *= 2
    low = 1
    while low < high:
        mid = (low + high) // 2
        if bound_state_count(mid) >= target:
            high = mid
        else:
            low = mid + 1
    return low


def orbit_parameters(n: int) -> OrbitParameters:
    """Bohr-model parameters E = -1/(2n^2), r = n^2, p = 1/n at level ``n``."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"principal quantum number must be an integer >= 1, got {n!r}")
    return OrbitParameters(
        n=n,
        energy_hartree=-0.5 / (n * n),
        radius_a0=n * n,
        momentum_hbar_per_a0=1.0 / n,
    )


def radius_report(target_qubits: int) -> HydrogenReport:
    """Size of the atom whose bound states could hold ``target_qubits`` qubits.

    The orbital radius n_min^2 is kept exact in Bohr radii; the km figure
    and the ratio to the Sun's diameter are floats and saturate to inf for
    targets so large (N beyond ~1500) that the radius exceeds the float
    range - at which point the scaling argument has long since made its
    point.
    """
    n_min = min_principal_qn(target_qubits)
    radius_a0 = n_min * n_min
    try:
        radius_km = float(radius_a0) * BOHR_RADIUS_KM
    except OverflowError:
        radius_km = float("inf")
    return HydrogenReport(
        target_qubits=target_qubits,
        n_min=n_min,
        state_count=bound_state_count(n_min),
        radius_a0=radius_a0,
        radius_km=radius_km,
        sun_diameter_ratio=radius_km / SUN_DIAMETER_KM,
    )
