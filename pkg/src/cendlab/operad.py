"""Partition bookkeeping and the substitution calculus of binary trees.

An n-partition of m is an ordered tuple of positive parts summing to m; it
indexes how m inputs are grouped into n consecutive blocks, with the pair
(i, j) (block i, slot j) corresponding to the flat position
m_1 + ... + m_{i-1} + j.  Trees are fully parenthesized products with
positional leaves; composing a tree with one tree per leaf substitutes
them in place, and the flat positions of the new leaves follow exactly the
pair-index bijection, so no explicit relabeling is stored.
"""

from __future__ import annotations


class OperadError(ValueError):
    pass


class Partition:
    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise OperadError(f"parts must be positive, got {parts}")
        self.parts = parts

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and other.parts == self.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def pair_index(pi: Partition, i: int, j: int) -> int:
    """Flat position of slot j inside block i (all 1-based)."""
    if not (1 <= i <= pi.length):
        raise OperadError(f"block index {i} out of range")
    if not (1 <= j <= pi.parts[i - 1]):
        raise OperadError(f"slot index {j} out of range for block {i}")
    return sum(pi.parts[: i - 1]) + j


def pair_of_index(pi: Partition, k: int):
    """Inverse of pair_index."""
    if not (1 <= k <= pi.total):
        raise OperadError(f"position {k} out of range")
    acc = 0
    for i, p in enumerate(pi.parts, start=1):
        if k <= acc + p:
            return (i, k - acc)
        acc += p
    raise OperadError("unreachable")


def compose_partitions(tau: Partition, pi: Partition):
    """Grouping composition: tau lists the sizes of the inner blocks, pi
    groups them; returns (tau pi, subpartitions), where subpartition i
    collects the parts of tau falling in block i of pi."""
    if tau.length != pi.total:
        raise OperadError(
            f"length mismatch: tau has {tau.length} parts, pi totals {pi.total}"
        )
    out = []
    subs = []
    pos = 0
    for m_i in pi.parts:
        chunk = tau.parts[pos : pos + m_i]
        subs.append(Partition(chunk))
        out.append(sum(chunk))
        pos += m_i
    return Partition(out), subs


class BinaryTree:
    """Full binary tree; leaves are positional (1..n left to right)."""

    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        if (left is None) != (right is None):
            raise OperadError("a node needs both children")
        self.left = left
        self.right = right

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def leaves(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.leaves() + self.right.leaves()

    def __eq__(self, other):
        if not isinstance(other, BinaryTree):
            return NotImplemented
        if self.is_leaf or other.is_leaf:
            return self.is_leaf and other.is_leaf
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        if self.is_leaf:
            return hash("leaf")
        return hash((hash(self.left), hash(self.right)))

    def render(self) -> str:
        """Fully parenthesized word over x1..xn, outermost parens dropped."""
        counter = [0]

        def go(t, top):
            if t.is_leaf:
                counter[0] += 1
                return f"x{counter[0]}"
            body = go(t.left, False) + go(t.right, False)
            return body if top else f"({body})"

        return go(self, True)

    def __repr__(self):
        return f"BinaryTree({self.render()!r})"


LEAF = BinaryTree()


def node(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    return BinaryTree(left, right)


def parse_tree(text: str) -> BinaryTree:
    """Parse a bracketing like "x1(x2x3)"; leaf numbers must run 1..n in
    left-to-right order."""
    pos = [0]
    numbers = []
    s = text.replace(" ", "")

    def parse_factor():
        if pos[0] >= len(s):
            raise OperadError("unexpected end of input")
        ch = s[pos[0]]
        if ch == "(":
            pos[0] += 1
            t = parse_product()
            if pos[0] >= len(s) or s[pos[0]] != ")":
                raise OperadError("unbalanced parentheses")
            pos[0] += 1
            return t
        if ch == "x":
            pos[0] += 1
            start = pos[0]
            while pos[0] < len(s) and s[pos[0]].isdigit():
                pos[0] += 1
            if start == pos[0]:
                raise OperadError("leaf without a number")
            numbers.append(int(s[start : pos[0]]))
            return BinaryTree()
        raise OperadError(f"unexpected character {ch!r}")

    def parse_product():
        factors = [parse_factor()]
        while pos[0] < len(s) and s[pos[0]] in "x(":
            factors.append(parse_factor())
        if len(factors) == 1:
            return factors[0]
        if len(factors) != 2:
            raise OperadError(
                "ambiguous product; every node must be a fully bracketed pair"
            )
        return node(factors[0], factors[1])

    out = parse_product()
    if pos[0] != len(s):
        raise OperadError(f"trailing input at {pos[0]}")
    if numbers != list(range(1, len(numbers) + 1)):
        raise OperadError(f"leaf labels must run 1..n in order, got {numbers}")
    return out


def tree_compose(u: BinaryTree, subtrees, pi: Partition) -> BinaryTree:
    """Substitute one tree per leaf of u; pi must list their leaf counts."""
    subtrees = list(subtrees)
    if len(subtrees) != u.leaves():
        raise OperadError("need exactly one subtree per leaf")
    if pi.length != len(subtrees) or any(
        t.leaves() != p for t, p in zip(subtrees, pi.parts)
    ):
        raise OperadError("partition does not match the subtree leaf counts")
    it = iter(subtrees)

    def go(t):
        if t.is_leaf:
            return next(it)
        return node(go(t.left), go(t.right))

    return go(u)


def compose_associativity_witness(phi, chis, psis, tau: Partition, pi: Partition):
    """First mismatch of the two ways to compose three layers, or None.

    ``phi`` takes pi.length inputs, ``chis[i]`` takes pi.parts[i], the flat
    list ``psis`` takes tau.parts[j] each; the left association composes
    phi with the chis and then with the psis, the right association first
    composes each chi with its slice of psis (through the subpartitions of
    tau) and then phi with the results through tau pi.
    """
    left_inner = tree_compose(phi, chis, pi)
    left = tree_compose(left_inner, psis, tau)
    taupi, subs = compose_partitions(tau, pi)
    collected = []
    pos = 0
    for i, chi in enumerate(chis):
        m_i = pi.parts[i]
        block = psis[pos : pos + m_i]
        collected.append(tree_compose(chi, block, subs[i]))
        pos += m_i
    right = tree_compose(phi, collected, taupi)
    if left != right:
        return {"left": left.render(), "right": right.render()}
    return None
