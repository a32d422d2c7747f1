import pytest
from hypothesis import given, settings, strategies as st

from cendlab.operad import (
    LEAF,
    BinaryTree,
    OperadError,
    Partition,
    compose_associativity_witness,
    compose_partitions,
    node,
    pair_index,
    pair_of_index,
    parse_tree,
    tree_compose,
)


MUL = node(LEAF, LEAF)


def test_pair_index_examples():
    pi = Partition((2, 1))
    assert pair_index(pi, 1, 2) == 2
    assert pair_index(pi, 2, 1) == 3
    ones = Partition((1, 1, 1, 1))
    assert [pair_index(ones, i, 1) for i in range(1, 5)] == [1, 2, 3, 4]


def test_pair_index_bijective_up_to_8():
    def partitions(m, n):
        if n == 1:
            yield (m,)
            return
        for first in range(1, m - n + 2):
            for rest in partitions(m - first, n - 1):
                yield (first,) + rest

    for m in range(1, 9):
        for n in range(1, m + 1):
            for parts in partitions(m, n):
                pi = Partition(parts)
                seen = []
                for i in range(1, n + 1):
                    for j in range(1, parts[i - 1] + 1):
                        k = pair_index(pi, i, j)
                        assert pair_of_index(pi, k) == (i, j)
                        seen.append(k)
                assert seen == list(range(1, m + 1))


def test_pair_index_range_errors():
    pi = Partition((2, 1))
    with pytest.raises(OperadError):
        pair_index(pi, 3, 1)
    with pytest.raises(OperadError):
        pair_index(pi, 1, 3)


def test_compose_partitions_example():
    tau = Partition((1, 2, 1))
    pi = Partition((2, 1))
    tp, subs = compose_partitions(tau, pi)
    assert tp == Partition((3, 1))
    assert subs == [Partition((1, 2)), Partition((1,))]


def test_compose_partitions_identities():
    tau = Partition((2, 3, 1))
    ones = Partition((1,) * 3)
    tp, _ = compose_partitions(tau, ones)
    assert tp == tau
    ones6 = Partition((1,) * 6)
    tp2, subs2 = compose_partitions(ones6, tau)
    assert tp2 == tau
    assert [s.parts for s in subs2] == [(1, 1), (1, 1, 1), (1,)]


def test_compose_partitions_length_mismatch():
    with pytest.raises(OperadError):
        compose_partitions(Partition((1, 1)), Partition((3,)))


def test_tree_compose_bracketings():
    t = tree_compose(MUL, [LEAF, MUL], Partition((1, 2)))
    assert t.render() == "x1(x2x3)"
    t2 = tree_compose(MUL, [MUL, LEAF], Partition((2, 1)))
    assert t2.render() == "(x1x2)x3"


def test_tree_compose_identity():
    big = tree_compose(MUL, [MUL, MUL], Partition((2, 2)))
    n = big.leaves()
    assert tree_compose(big, [LEAF] * n, Partition((1,) * n)) == big
    assert tree_compose(LEAF, [big], Partition((n,))) == big


def test_tree_compose_partition_mismatch():
    with pytest.raises(OperadError):
        tree_compose(MUL, [LEAF, MUL], Partition((1, 1)))


def test_parse_render_roundtrip():
    for text in ("x1", "x1x2", "x1(x2x3)", "(x1x2)x3", "(x1x2)(x3(x4x5))"):
        t = parse_tree(text)
        assert t.render() == text
    with pytest.raises(OperadError):
        parse_tree("x1x2x3")
    with pytest.raises(OperadError):
        parse_tree("x2x1")
    with pytest.raises(OperadError):
        parse_tree("x1(x2")


trees = st.deferred(
    lambda: st.just(LEAF) | st.builds(node, trees, trees)
)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associativity_randomized(data):
    n = data.draw(st.integers(1, 3))
    phi = data.draw(st.sampled_from(_trees_with(n)))
    pi_parts = tuple(data.draw(st.integers(1, 2)) for _ in range(n))
    pi = Partition(pi_parts)
    chis = [data.draw(st.sampled_from(_trees_with(p))) for p in pi_parts]
    tau_parts = tuple(data.draw(st.integers(1, 2)) for _ in range(pi.total))
    tau = Partition(tau_parts)
    psis = [data.draw(st.sampled_from(_trees_with(p))) for p in tau_parts]
    assert compose_associativity_witness(phi, chis, psis, tau, pi) is None


def _trees_with(n):
    if n == 1:
        return [LEAF]
    out = []
    for cut in range(1, n):
        for left in _trees_with(cut):
            for right in _trees_with(n - cut):
                out.append(node(left, right))
    return out


def test_associativity_exhaustive_small():
    # every shape with p <= 6 total leaves through 2-2-2 layers
    for n in (1, 2):
        for phi in _trees_with(n):
            for pi_parts in _tuples(n, 2):
                pi = Partition(pi_parts)
                chis_options = [_trees_with(p) for p in pi_parts]
                for chis in _product_lists(chis_options):
                    for tau_parts in _tuples(pi.total, 2):
                        tau = Partition(tau_parts)
                        psis_options = [_trees_with(p) for p in tau_parts]
                        for psis in _product_lists(psis_options):
                            assert (
                                compose_associativity_witness(
                                    phi, list(chis), list(psis), tau, pi
                                )
                                is None
                            )


def _tuples(length, hi):
    if length == 0:
        yield ()
        return
    for first in range(1, hi + 1):
        for rest in _tuples(length - 1, hi):
            yield (first,) + rest


def _product_lists(options):
    if not options:
        yield ()
        return
    for head in options[0]:
        for rest in _product_lists(options[1:]):
            yield (head,) + rest


def test_partition_rejects_bad_parts():
    with pytest.raises(OperadError):
        Partition((0, 2))
    with pytest.raises(OperadError):
        Partition(())
