from fractions import Fraction
from math import lcm

import numpy as np
import pytest
import sympy

from torsionrank import UnsupportedGroupError
from torsionrank.curves import CurveModP, torsion_embeds
from torsionrank.torsion import (
    ALL_GROUPS,
    LARGE_GROUPS,
    discriminant_table,
    fg,
    model_polys,
    phi,
    polynomial_checksum,
)

nontrivial = pytest.mark.parametrize(
    "G", [G for G in ALL_GROUPS if not G.is_trivial], ids=lambda G: G.label
)
large = pytest.mark.parametrize("G", LARGE_GROUPS, ids=lambda G: G.label)

pairs = [(2, 5), (3, 7), (5, -3), (7, 4), (-4, 9), (1, 6)]


class TestModelPolys:
    def test_examples(self) -> None:
        assert fg("2", 3, 2) == (3, 14)
        assert fg("5", 1, 0) == (-27, 54)
        assert phi("6", 1, 1) == (-108, 297)

    def test_trivial(self) -> None:
        with pytest.raises(UnsupportedGroupError):
            fg("0", 1, 1)
        assert phi("0", 4, -7) == (4, -7)

    def test_2x2_integrality(self) -> None:
        f, g = fg("2x2", 3, 5)
        assert isinstance(f, int) and isinstance(g, int)
        assert isinstance(fg("2x2", 2, 3)[0], Fraction)
        with pytest.raises(ValueError):
            phi("2x2", 2, 3)

    @nontrivial
    def test_weighted_homogeneity(self, G) -> None:
        k = lcm(*(w.denominator for w in G.weights))
        s = 2
        scaled = [int(s ** (k * w)) for w in G.weights]
        for a, b in pairs:
            f, g = fg(G, a, b)
            f_s, g_s = fg(G, scaled[0] * a, scaled[1] * b)
            assert f_s == s ** (4 * k) * f
            assert g_s == s ** (6 * k) * g

    @nontrivial
    def test_modular_evaluation(self, G) -> None:
        polys = model_polys(G)
        a = np.array([a for a, _ in pairs])
        b = np.array([b for _, b in pairs])
        f_mod, g_mod = polys.mod(a, b, 13)
        for i, (x, y) in enumerate(pairs):
            f, g = polys.exact(x, y)
            assert f_mod[i] == Fraction(f).numerator * pow(
                Fraction(f).denominator, -1, 13
            ) % 13
            assert g_mod[i] == Fraction(g).numerator * pow(
                Fraction(g).denominator, -1, 13
            ) % 13

    @nontrivial
    def test_float_evaluation(self, G) -> None:
        f, g = model_polys(G).evaluate(0.5, -0.25)
        f_exact, g_exact = model_polys(G).exact(Fraction(1, 2), Fraction(-1, 4))
        assert f == pytest.approx(float(f_exact), rel=1e-9, abs=1e-6)
        assert g == pytest.approx(float(g_exact), rel=1e-9, abs=1e-6)

    @nontrivial
    def test_torsion_survives_reduction(self, G) -> None:
        for a, b in pairs:
            if G.label == "2x2" and (a - b) % 2:
                continue
            A, B = phi(G, a, b) if G.is_large else fg(G, a, b)
            if 4 * A**3 + 27 * B**2 == 0:
                continue
            for p in sympy.primerange(5, 40):
                c = CurveModP(int(A), int(B), int(p))
                if c.is_singular or G.order % p == 0:
                    continue
                assert torsion_embeds(c, G), (a, b, p)

    def test_checksum(self) -> None:
        checksum = polynomial_checksum()
        assert len(checksum) == 12
        assert checksum == polynomial_checksum()

    def test_degrees(self) -> None:
        assert model_polys("5").degrees == (4, 6)
        assert model_polys("12").degrees == (16, 24)


class TestDiscriminant:
    @large
    def test_factorization(self, G) -> None:
        f, g = model_polys(G).as_sympy()
        expanded = sympy.expand(-16 * (4 * f**3 + 27 * g**2))
        assert sympy.expand(discriminant_table(G) - expanded) == 0

    def test_small_groups(self) -> None:
        with pytest.raises(UnsupportedGroupError):
            discriminant_table("2")
