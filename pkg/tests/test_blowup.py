"""Blowup stabilization data and the almost Gorenstein equivalences."""

import pytest

from maxnoether.blowup import analyze, genus_drop, nearly_gorenstein_local_checks
from maxnoether.errors import NotApplicable
from maxnoether.semigroup import NumericalSemigroup, enumerate_semigroups
from maxnoether.valueset import ValueSet, canonical_ideal, n_fold, quotient_dim


def sg(*gens):
    return NumericalSemigroup.from_generators(gens)


def test_analyze_345():
    ana = analyze(sg(3, 4, 5))
    assert ana.blowup_values == ValueSet.naturals()
    assert ana.stabilization_index == 2
    assert ana.blowup_genus == 0
    assert ana.eta == 1


def test_analyze_gorenstein_is_trivial():
    s = sg(2, 3)
    ana = analyze(s)
    assert ana.blowup_values == ValueSet.from_semigroup(s)
    assert ana.stabilization_index == 1
    assert ana.eta == 0


def test_analyze_5679():
    ana = analyze(sg(5, 6, 7, 9))
    assert ana.blowup_values == ValueSet((0,), 4)
    assert ana.stabilization_index == 2
    assert ana.blowup_genus == 3


def test_nearly_gorenstein_checks_examples():
    rec = nearly_gorenstein_local_checks(sg(3, 5, 7))
    assert rec.almost_gorenstein and rec.gap_one and rec.square_is_blowup
    assert rec.consistent

    rec = nearly_gorenstein_local_checks(sg(4, 5, 11))
    assert not rec.almost_gorenstein and not rec.gap_one
    assert quotient_dim(
        analyze(sg(4, 5, 11)).omega_blowup_values, canonical_ideal(sg(4, 5, 11))
    ) == 3
    assert rec.consistent

    rec = nearly_gorenstein_local_checks(sg(3, 4, 5))
    assert rec.almost_gorenstein and rec.gap_one and rec.square_is_blowup
    assert rec.powers_collapse


def test_nearly_gorenstein_rejects_symmetric():
    with pytest.raises(NotApplicable):
        nearly_gorenstein_local_checks(sg(2, 3))


@pytest.mark.parametrize(
    "gens, drop", [([3, 4, 5], 2), ([5, 6, 7, 9], 2), ([3, 7, 8], 4)]
)
def test_genus_drop_frozen(gens, drop):
    assert genus_drop(sg(*gens)) == drop


def test_genus_drop_rejects_symmetric():
    with pytest.raises(NotApplicable):
        genus_drop(sg(2, 5))


def nonsymmetric(max_genus):
    return (s for s in enumerate_semigroups(max_genus) if not s.is_symmetric())


def test_census_chain_strictly_increases_until_stable():
    for s in nonsymmetric(9):
        ana = analyze(s)
        prev = ana.canonical
        for n in range(2, ana.stabilization_index + 2):
            cur = n_fold(ana.canonical, n)
            assert prev.is_subset(cur)
            if n <= ana.stabilization_index:
                if n < ana.stabilization_index:
                    assert prev != cur
                else:
                    assert cur == ana.blowup_values
            else:
                assert cur == prev == ana.blowup_values
            prev = cur


def test_census_equivalences():
    for s in nonsymmetric(9):
        rec = nearly_gorenstein_local_checks(s)
        assert rec.consistent
        ana = analyze(s)
        if rec.almost_gorenstein:
            assert ana.stabilization_index <= 2
        assert ana.stabilization_index <= quotient_dim(ana.blowup_values, ana.canonical) + 1
        assert genus_drop(s) >= 2
        assert ana.eta < s.genus
