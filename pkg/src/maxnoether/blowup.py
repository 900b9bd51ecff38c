"""Blowup of a unibranch point along the dualizing module, at the value level.

Powers of the canonical ideal K form an ascending chain that stabilizes to
the additive closure of K, the value semigroup of the blowup ring.  The
stabilized data detects the almost Gorenstein property: the overmodule
generated by K exceeds K by exactly one value precisely in that case, and
then already the square of K fills the blowup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotApplicable
from .semigroup import NumericalSemigroup
from .valueset import (
    ValueSet,
    canonical_ideal,
    n_fold,
    quotient_dim,
    ring_closure,
    sumset,
)


@dataclass(frozen=True)
class BlowupAnalysis:
    """Stabilization data of the canonical-ideal powers of one semigroup."""

    semigroup: NumericalSemigroup
    canonical: ValueSet
    blowup_values: ValueSet
    stabilization_index: int
    omega_blowup_values: ValueSet
    eta: int
    blowup_genus: int

    def to_json(self) -> dict:
        return {
            "semigroup": self.semigroup.to_json(),
            "canonical": self.canonical.to_json(),
            "blowup": self.blowup_values.to_json(),
            "stabilization_index": self.stabilization_index,
            "omega_blowup": self.omega_blowup_values.to_json(),
            "eta": self.eta,
            "blowup_genus": self.blowup_genus,
        }


def analyze(s: NumericalSemigroup) -> BlowupAnalysis:
    """Compute the blowup value data of a semigroup (symmetric ones included)."""
    k = canonical_ideal(s)
    ohat = ring_closure(k)
    index = 1
    power = k
    while power != ohat:
        power = sumset(power, k)
        index += 1
    omega_hat = sumset(k, ohat)
    eta = quotient_dim(k, ValueSet.from_semigroup(s))
    ghat = quotient_dim(ValueSet.naturals(), ohat)
    return BlowupAnalysis(s, k, ohat, index, omega_hat, eta, ghat)


@dataclass(frozen=True)
class NearlyGorensteinChecks:
    """Booleans tying the almost Gorenstein count to the blowup picture."""

    almost_gorenstein: bool
    gap_one: bool
    square_is_blowup: bool
    powers_collapse: bool

    @property
    def consistent(self) -> bool:
        """The predicted equivalences: ag iff gap_one, and ag forces the rest."""
        if self.almost_gorenstein != self.gap_one:
            return False
        if self.almost_gorenstein:
            return self.square_is_blowup and self.powers_collapse
        return True

    def to_json(self) -> dict:
        return {
            "almost_gorenstein": self.almost_gorenstein,
            "gap_one": self.gap_one,
            "square_is_blowup": self.square_is_blowup,
            "powers_collapse": self.powers_collapse,
            "consistent": self.consistent,
        }


def nearly_gorenstein_local_checks(
    s: NumericalSemigroup, power_bound: int = 4
) -> NearlyGorensteinChecks:
    """Blowup-side reflections of the almost Gorenstein property.

    ``gap_one`` asks whether the blowup module generated by K exceeds K by a
    single value.  ``powers_collapse`` asks whether the powers of K from 2 up
    to ``power_bound`` are already modules over the blowup ring.
    """
    if s.is_symmetric():
        raise NotApplicable("symmetric semigroup: the point is Gorenstein")
    ana = analyze(s)
    ag = s.is_almost_gorenstein()
    gap_one = quotient_dim(ana.omega_blowup_values, ana.canonical) == 1
    square = n_fold(ana.canonical, 2) == ana.blowup_values
    collapse = all(
        sumset(n_fold(ana.canonical, m), ana.blowup_values) == n_fold(ana.canonical, m)
        for m in range(2, max(power_bound, ana.stabilization_index) + 1)
    )
    return NearlyGorensteinChecks(ag, gap_one, square, collapse)


def genus_drop(s: NumericalSemigroup) -> int:
    """Genus lost when passing to the blowup; at least 2 at a non-Gorenstein point."""
    if s.is_symmetric():
        raise NotApplicable("symmetric semigroup: the point is Gorenstein")
    return s.genus - analyze(s).blowup_genus
