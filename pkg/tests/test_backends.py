"""Parity between the compiled rational kernel and the pure fallback."""

import subprocess
import sys

import pytest

from cendlab.fields import RATIONAL_BACKEND, Rat


PROBE = """
from cendlab.fields import RATIONAL_BACKEND, QQ
from cendlab.groups import cyclic_group
from cendlab.conformal import Ambient, cend
from cendlab.workbench import wn_span
print(RATIONAL_BACKEND)
print(wn_span(cend(Ambient(cyclic_group(4), 1))).dim)
"""


def test_pure_fallback_selected_via_env():
    proc = subprocess.run(
        [sys.executable, "-c", PROBE],
        capture_output=True,
        text=True,
        env={"CENDLAB_PURE": "1", "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 0, proc.stderr
    backend, dim = proc.stdout.split()
    assert backend == "fractions"
    assert dim == "16"


@pytest.mark.skipif(
    RATIONAL_BACKEND != "compiled", reason="compiled kernel not built"
)
def test_compiled_matches_fraction(rng):
    from fractions import Fraction

    for _ in range(500):
        an, ad = rng.randint(-99, 99), rng.randint(1, 40)
        bn, bd = rng.randint(-99, 99), rng.randint(1, 40)
        a, fa = Rat(an, ad), Fraction(an, ad)
        b, fb = Rat(bn, bd), Fraction(bn, bd)
        for op in ("__add__", "__sub__", "__mul__"):
            got = getattr(a, op)(b)
            want = getattr(fa, op)(fb)
            assert (got.numerator, got.denominator) == (
                want.numerator,
                want.denominator,
            )
        if bn:
            got = a / b
            want = fa / fb
            assert (got.numerator, got.denominator) == (
                want.numerator,
                want.denominator,
            )
        assert hash(a) == hash(fa)
        assert bool(a) == bool(fa)
        assert str(a) == str(fa)


@pytest.mark.skipif(
    RATIONAL_BACKEND != "compiled", reason="compiled kernel not built"
)
def test_compiled_normalization_invariants(rng):
    import math

    for _ in range(200):
        n, d = rng.randint(-60, 60), rng.randint(1, 60)
        x = Rat(n, d)
        assert x.denominator > 0
        assert math.gcd(abs(x.numerator), x.denominator) in (0, 1) or x.numerator == 0
    with pytest.raises(ZeroDivisionError):
        Rat(1, 0)
    with pytest.raises(ZeroDivisionError):
        Rat(1) / Rat(0)
