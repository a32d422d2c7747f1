import pytest

from cendlab.fields import QQ
from cendlab.weyl import (
    BudgetError,
    PolyT,
    WeylElem,
    WeylError,
    locality_bound,
    module_compat_witness,
    weyl_act,
    weyl_algebra_relation,
    weyl_nprod,
)


def q(x):
    return QQ.scalar(x)


def mono(r, s, c=1):
    return WeylElem.monomial(QQ, r, s, c)


V = mono(0, 1)
ONE = mono(0, 0)


def test_v_products():
    assert weyl_nprod(V, V, 0) == mono(0, 2)
    assert weyl_nprod(V, V, 1) == V
    assert not weyl_nprod(V, V, 2)


def test_action_examples():
    p = PolyT.monomial(QQ, 10, 3)
    assert weyl_act(V, p, 0) == PolyT.monomial(QQ, 10, 4, 4)
    p2 = PolyT.monomial(QQ, 10, 2)
    assert weyl_act(ONE, p2, 1) == PolyT.monomial(QQ, 10, 1)
    assert weyl_act(ONE, p2, 0) == p2


def test_action_linear(rng):
    p = PolyT(QQ, 8, {0: q(2), 3: q(-1), 5: q(4)})
    x = mono(1, 2, 3)
    lhs = weyl_act(x, p.scale(q(7)), 2)
    assert lhs == weyl_act(x, p, 2).scale(q(7))


def test_budget_overflow_raises():
    p = PolyT.monomial(QQ, 3, 3)
    with pytest.raises(BudgetError):
        weyl_act(V, p, 0)
    with pytest.raises(BudgetError):
        PolyT(QQ, 2, {5: q(1)})


def test_t_mult():
    assert mono(0, 0).t_mult() == mono(1, 0)
    assert mono(2, 1).t_mult() == mono(3, 1, 3)


def test_c2_identities_exhaustive():
    monos = [mono(r, s) for r in range(4) for s in range(4)]
    for a in monos:
        for b in monos:
            bound = locality_bound(a, b)
            for n in range(bound + 2):
                lhs = weyl_nprod(a.t_mult(), b, n)
                rhs = (
                    weyl_nprod(a, b, n - 1).scale(q(-n))
                    if n > 0
                    else WeylElem.zero(QQ)
                )
                assert lhs == rhs, (a, b, n)
                second = weyl_nprod(a, b.t_mult(), n)
                expect = weyl_nprod(a, b, n).t_mult() - lhs
                assert second == expect, (a, b, n)


def test_locality(rng):
    for _ in range(30):
        a = WeylElem(
            QQ,
            {
                (rng.randrange(4), rng.randrange(4)): q(rng.randint(-3, 3))
                for _ in range(2)
            },
        )
        b = WeylElem(
            QQ,
            {
                (rng.randrange(4), rng.randrange(4)): q(rng.randint(-3, 3))
                for _ in range(2)
            },
        )
        bound = locality_bound(a, b)
        for n in range(bound, bound + 4):
            assert not weyl_nprod(a, b, n)


def test_locality_sharp_on_monomials():
    for r in range(3):
        for s in range(3):
            for bdeg in range(3):
                a, b = mono(r, 0), mono(s, bdeg)
                bound = locality_bound(a, b)
                assert bound == r + s + bdeg + 1
                assert weyl_nprod(a, b, bound - 1)
                assert not weyl_nprod(a, b, bound)


def test_first_weyl_relation_budget_10():
    report = weyl_algebra_relation(10, QQ)
    assert report["passed"]
    assert [d["degree"] for d in report["degrees"]] == list(range(10))
    assert report["boundary_excluded"] == 10


def test_relation_on_specific_degrees():
    budget = 5
    x_of = lambda p: weyl_act(V, p, 0)
    d_of = lambda p: weyl_act(ONE, p, 1)
    for s in (0, 3):
        p = PolyT.monomial(QQ, budget, s)
        assert d_of(x_of(p)) - x_of(d_of(p)) == p


def test_relation_budget_too_small():
    with pytest.raises(WeylError):
        weyl_algebra_relation(1, QQ)


def test_module_compatibility_small_degrees():
    monos = [mono(r, s) for r in range(3) for s in range(3)]
    for a in monos:
        for b in monos:
            for n in range(3):
                for j in range(3):
                    assert module_compat_witness(a, b, n, j, 14) is None


def test_negative_index_rejected():
    with pytest.raises(WeylError):
        weyl_nprod(V, V, -1)


def test_canonical_zero_absent():
    x = mono(1, 1) - mono(1, 1)
    assert not x.coeffs and not x
