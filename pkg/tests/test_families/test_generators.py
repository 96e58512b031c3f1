"""Tests for family generators, parameter ranges and sign policies."""

import pytest
from pydantic import ValidationError

from signbase.engine.analysis import DigraphAnalyzer
from signbase.engine.digraph import cycle_catalog, cycle_class_signs, find_distinguished_pair
from signbase.errors import FamilyRangeError
from signbase.families.generators import (
    FAMILY_RANGES,
    PRESET_FAMILIES,
    Family,
    FamilySpec,
    Preset,
    SignPolicy,
    build_underlying,
    check_range,
    generate,
    preset,
    valid_parameters,
)


class TestRanges:
    """Tests for check_range and valid_parameters."""

    def test_every_family_has_a_range(self):
        assert set(FAMILY_RANGES) == set(Family)

    def test_every_named_preset_has_a_family(self):
        generic = {Preset.SAME_SIGN, Preset.NONPOWERFUL}
        assert set(PRESET_FAMILIES) == set(Preset) - generic

    @pytest.mark.parametrize(
        "family, n, k, i",
        [
            (Family.D1, 2, None, None),
            (Family.DKI, 6, 2, 1),
            (Family.DKI, 7, 2, 4),
            (Family.DKI, 7, None, None),
            (Family.SCRIPT_L, 8, None, None),
            (Family.SCRIPT_L, 5, None, None),
            (Family.F, 5, None, None),
            (Family.F_PRIME, 8, None, 1),
            (Family.F_PRIME, 8, None, 6),
            (Family.B1, 6, None, None),
        ],
    )
    def test_out_of_range(self, family, n, k, i):
        with pytest.raises(FamilyRangeError, match="requires"):
            check_range(family, n, k, i)

    @pytest.mark.parametrize(
        "family, n, k, i",
        [
            (Family.D1, 3, None, None),
            (Family.DKI, 7, 2, 1),
            (Family.SCRIPT_L, 7, None, None),
            (Family.F_PRIME, 8, None, 5),
            (Family.B4, 7, None, None),
        ],
    )
    def test_in_range(self, family, n, k, i):
        check_range(family, n, k, i)

    def test_dki_parameters_at_prime_order(self):
        params = valid_parameters(Family.DKI, 7)
        assert len(params) == 11
        assert params[0] == (1, 1)
        assert (5, 1) in params
        assert (5, 2) not in params

    def test_f_prime_parameters(self):
        assert valid_parameters(Family.F_PRIME, 8) == [(None, i) for i in range(2, 6)]

    def test_missing_family(self):
        assert valid_parameters(Family.B2, 9) == []


class TestUnderlying:
    """Tests for the all-positive family members."""

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_d1_shape(self, n):
        digraph = build_underlying(Family.D1, n)
        assert len(digraph.arcs) == n + 1
        assert cycle_catalog(digraph).lengths == (n - 1, n)

    def test_d2_has_two_long_cycles(self):
        catalog = cycle_catalog(build_underlying(Family.D2, 6))
        assert catalog.lengths == (5, 6)
        assert len(catalog.of_length(5)) == 2

    def test_dki_cycle_lengths(self):
        catalog = cycle_catalog(build_underlying(Family.DKI, 7, 2, 3))
        assert catalog.lengths == (5, 7)
        assert len(catalog.of_length(5)) == 3

    @pytest.mark.parametrize("family", [f for f in Family if f not in (Family.DKI, Family.F_PRIME)])
    def test_every_family_is_primitive_at_n_11(self, family):
        digraph = build_underlying(family, 11)
        assert digraph.n == 11
        assert cycle_catalog(digraph).gcd() == 1

    def test_all_positive_is_powerful(self):
        digraph = build_underlying(Family.F, 8)
        assert find_distinguished_pair(cycle_catalog(digraph)) is None


class TestFamilySpec:
    """Tests for FamilySpec validation and descriptors."""

    def test_descriptor(self):
        spec = FamilySpec(
            family=Family.DKI, n=7, k=2, i=1, policy=SignPolicy.PRESET, preset=Preset.SAME_SIGN
        )
        assert spec.descriptor() == "dki(n=7,k=2,i=1)+same-sign"

    def test_descriptor_explicit_and_solve(self):
        explicit = FamilySpec(
            family=Family.D1, n=5, policy=SignPolicy.EXPLICIT, negative_arcs=[(2, 1), (1, 4)]
        )
        assert explicit.descriptor() == "d1(n=5)+neg[1>4;2>1]"
        solve = FamilySpec(family=Family.D2, n=5, policy=SignPolicy.SOLVE, cycle_signs={4: -1})
        assert solve.descriptor() == "d2(n=5)+solve[4:-]"

    def test_preset_policy_needs_preset(self):
        with pytest.raises(ValidationError):
            FamilySpec(family=Family.D1, n=5, policy=SignPolicy.PRESET)

    def test_preset_needs_preset_policy(self):
        with pytest.raises(ValidationError):
            FamilySpec(family=Family.D1, n=5, preset=Preset.D1_SIGNED)

    def test_preset_family_mismatch(self):
        with pytest.raises(ValidationError, match="applies to family"):
            FamilySpec(family=Family.D2, n=5, policy=SignPolicy.PRESET, preset=Preset.D1_SIGNED)

    def test_negative_arcs_need_explicit_policy(self):
        with pytest.raises(ValidationError):
            FamilySpec(family=Family.D1, n=5, negative_arcs=[(1, 4)])

    def test_cycle_sign_values(self):
        with pytest.raises(ValidationError):
            FamilySpec(family=Family.D1, n=5, policy=SignPolicy.SOLVE, cycle_signs={4: 2})


class TestGenerate:
    """Tests for generate and preset."""

    def test_all_positive(self):
        digraph = generate(FamilySpec(family=Family.D1, n=5))
        assert digraph.negative_arcs == ()

    def test_explicit(self):
        spec = FamilySpec(family=Family.D1, n=5, policy=SignPolicy.EXPLICIT, negative_arcs=[(1, 4)])
        assert generate(spec).negative_arcs == ((1, 4),)

    def test_explicit_unknown_arc(self):
        spec = FamilySpec(family=Family.D1, n=5, policy=SignPolicy.EXPLICIT, negative_arcs=[(4, 1)])
        with pytest.raises(FamilyRangeError, match="not in the digraph"):
            generate(spec)

    def test_solve(self):
        spec = FamilySpec(family=Family.D2, n=5, policy=SignPolicy.SOLVE, cycle_signs={4: -1})
        classes = cycle_class_signs(cycle_catalog(generate(spec)))
        assert classes[4] == frozenset({-1})

    def test_d1_signed_is_minimal(self):
        assert preset(Preset.D1_SIGNED, 3).negative_arcs == ((1, 2),)

    @pytest.mark.parametrize(
        "variant, n, k, i",
        [
            (Preset.D1_SIGNED, 6, None, None),
            (Preset.D2_SAME, 6, None, None),
            (Preset.SKI, 7, 2, 1),
            (Preset.SKI, 9, 4, 3),
        ],
    )
    def test_presets_are_nonpowerful_and_sign_constant(self, variant, n, k, i):
        digraph = preset(variant, n, k, i)
        catalog = cycle_catalog(digraph)
        assert find_distinguished_pair(catalog) is not None
        assert all(len(signs) == 1 for signs in cycle_class_signs(catalog).values())

    def test_d2_split(self):
        digraph = preset(Preset.D2_SPLIT, 6)
        catalog = cycle_catalog(digraph)
        classes = cycle_class_signs(catalog)
        assert classes[5] == frozenset({1, -1})
        assert len(classes[6]) == 1
        assert find_distinguished_pair(catalog) is not None

    def test_generic_preset_needs_family(self):
        with pytest.raises(FamilyRangeError, match="needs a family"):
            preset(Preset.SAME_SIGN, 7)

    def test_named_preset_wrong_family(self):
        with pytest.raises(FamilyRangeError, match="applies to family"):
            preset(Preset.SKI, 7, 2, 1, family=Family.D1)

    def test_same_sign_dki_base(self):
        """The worked example: D_{2,1} at n = 7 with sign-constant classes."""
        digraph = preset(Preset.SAME_SIGN, 7, 2, 1, family=Family.DKI)
        result = DigraphAnalyzer().analyze(digraph)
        assert result.bases is not None
        assert result.bases.base == 67
        assert result.bases.ordered == tuple(60 + m for m in range(1, 8))
