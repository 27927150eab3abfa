import random

import pytest

from conftest import random_pure_braid
from slalom.braids import (
    BraidGenerator,
    BraidLetter,
    BraidSyntaxError,
    BraidWord,
    PurityError,
    StrandPaths,
    braid_invariant,
    braid_to_strands,
    cross_ratio_curve,
    cstar,
    format_braid,
    full_twist,
    is_pure,
    parse_braid,
    permutation,
)
from slalom.syllables import BoundaryCondition
from slalom.words import concat, parse_word

# orientation convention pinned by tracing: sigma1^2 maps to a1 (not a1^-1)
SIGMA1_SQUARED_IMAGE = "a1"

PB = BoundaryCondition.PERPENDICULAR_BISECTOR


class TestParse:
    def test_power_expansion(self):
        b = parse_braid("s1^2")
        assert b.letters == (BraidLetter(BraidGenerator.SIGMA1, 1),) * 2

    def test_delta3(self):
        b = parse_braid("s1 s2 s1")
        assert [l.gen for l in b.letters] == [
            BraidGenerator.SIGMA1, BraidGenerator.SIGMA2, BraidGenerator.SIGMA1]

    def test_empty(self):
        assert parse_braid("") == BraidWord()

    def test_negative_power(self):
        b = parse_braid("s2^-3")
        assert all(l.sign == -1 for l in b.letters) and len(b.letters) == 3

    def test_bad_token(self):
        with pytest.raises(BraidSyntaxError) as exc:
            parse_braid("s1 s3")
        assert exc.value.column == 4

    def test_format_round_trip(self):
        b = parse_braid("s1 s2^-1 s1^2")
        assert parse_braid(format_braid(b)) == b


class TestPermutation:
    def test_sigma1_transposition(self):
        assert permutation(parse_braid("s1")) == (1, 0, 2)

    def test_sigma1_squared_identity(self):
        assert permutation(parse_braid("s1^2")) == (0, 1, 2)

    def test_full_twist_pure(self):
        assert permutation(full_twist()) == (0, 1, 2)
        assert is_pure(full_twist())

    def test_inverse_sign_irrelevant(self):
        assert permutation(parse_braid("s1^-1")) == permutation(parse_braid("s1"))


class TestStrands:
    def test_empty_braid_constant(self):
        s = braid_to_strands(BraidWord())
        assert s.strands == ((-1 + 0j,), (0j,), (1 + 0j,))

    def test_sigma1_squared_full_turn(self):
        s = braid_to_strands(parse_braid("s1^2"), 32)
        g1, g2, g3 = s.strands
        assert g1[0] == -1 and abs(g1[-1] - (-1)) < 1e-12
        assert g2[0] == 0 and abs(g2[-1]) < 1e-12
        assert all(z == 1 for z in g3)

    def test_full_twist_returns_and_separates(self):
        s = braid_to_strands(full_twist(), 32)
        for strand, base in zip(s.strands, (-1, 0, 1)):
            assert strand[0] == pytest.approx(base, abs=1e-12)
            assert strand[-1] == pytest.approx(base, abs=1e-9)
        mind = min(
            abs(a - b)
            for i in range(3)
            for j in range(i + 1, 3)
            for a, b in zip(s.strands[i], s.strands[j])
        )
        assert mind >= 0.2

    def test_rejects_non_pure(self):
        with pytest.raises(PurityError):
            braid_to_strands(parse_braid("s1"))

    def test_rejects_coarse_sampling(self):
        with pytest.raises(ValueError):
            braid_to_strands(parse_braid("s1^2"), 8)


class TestCrossRatioCurve:
    def test_constant_base_configuration(self):
        curve = cross_ratio_curve(StrandPaths(((-1 + 0j,), (0j,), (1 + 0j,))))
        assert curve.is_constant and curve.start == 0

    def test_middle_strand_identity(self):
        zs = tuple(0.3 * complex(c, s) for c, s in [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)])
        n = len(zs)
        curve = cross_ratio_curve(StrandPaths(((-1 + 0j,) * n, zs, (1 + 0j,) * n)))
        assert len(curve.points) == len(zs)
        for got, want in zip(curve.points, zs):
            assert abs(got - want) < 1e-14

    def test_affine_invariance(self):
        s = braid_to_strands(parse_braid("s1^2"), 16)
        mapped = StrandPaths(tuple(tuple(2 * z + 5 for z in strand) for strand in s.strands))
        a = cross_ratio_curve(s)
        b = cross_ratio_curve(mapped)
        assert len(a.points) == len(b.points)
        for x, y in zip(a.points, b.points):
            assert abs(x - y) < 1e-12

    def test_base_point_consistency(self):
        rng = random.Random(23)
        for _ in range(10):
            b = random_pure_braid(rng, 8)
            curve = cross_ratio_curve(braid_to_strands(b, 16))
            assert abs(curve.start) < 1e-9 and abs(curve.end) < 1e-9


class TestCstar:
    def test_full_twist_kernel(self):
        for m in (1, 2, 3):
            b = BraidWord()
            for _ in range(m):
                b = b * full_twist()
            assert cstar(b).is_identity

    def test_full_twist_absorbed(self):
        rng = random.Random(29)
        for _ in range(10):
            b = random_pure_braid(rng, 8)
            assert cstar(b * full_twist()) == cstar(b)

    def test_sigma1_squared_pinned_sign(self):
        assert cstar(parse_braid("s1^2")) == parse_word(SIGMA1_SQUARED_IMAGE)

    def test_homomorphism(self):
        rng = random.Random(31)
        for _ in range(20):
            b1 = random_pure_braid(rng, 6)
            b2 = random_pure_braid(rng, 6)
            assert cstar(b1 * b2) == concat(cstar(b1), cstar(b2))

    def test_purity_gate(self):
        with pytest.raises(PurityError):
            cstar(parse_braid("s1 s2"))


class TestBraidInvariant:
    def test_full_twist_exceptional(self):
        b = braid_invariant(full_twist(), PB)
        assert (b.lambda_value, b.lower, b.upper, b.exceptional) == (0.0, 0.0, 0.0, True)

    def test_sigma1_even_powers(self):
        import math
        for n in (1, 2, 3):
            w = cstar(parse_braid(f"s1^{2 * n}"))
            assert len(w.terms) == 1 and w.terms[0].gen.value == "a1"
            from slalom.syllables import lambda_invariant
            assert lambda_invariant(w) == pytest.approx(math.log(1 + n), abs=1e-12)

    def test_not_a_conjugacy_invariant(self):
        rng = random.Random(37)
        found = False
        for _ in range(50):
            b = random_pure_braid(rng, 6)
            c = random_pure_braid(rng, 6)
            inv_b = braid_invariant(b, PB)
            inv_conj = braid_invariant(c * b * c.inverse(), PB)
            if abs(inv_b.lambda_value - inv_conj.lambda_value) > 1e-9:
                found = True
                break
        assert found, "randomized search found no conjugation changing the invariant"
