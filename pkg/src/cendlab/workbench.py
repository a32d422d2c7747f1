"""Operator realization of the conformal algebra and its decision tools.

The free module M = A (x) k^n is the space of k^n-valued functions on V;
module coordinates are (w, i) -> w*n + i.  An element with first slot T_g
evaluates to an operator supported at z = g^-1, namely the multiplication
operator by T_w composed with the shift by z, tensored with its matrix
part.  On top of evaluation this module builds the tensor-to-operator
isomorphism and its inverse, the twist that straightens left ideals,
one-sided ideal closures, essentiality of ideals, simplicity of the
algebra, and the irreducibility decision with certificates.
"""

from __future__ import annotations

from .conformal import Ambient, DiffElem, SubSpan, diff_product, subalgebra_closure_witness
from .groups import orbits
from .hopf import AElem, HElem
from .linalg import EchelonBuilder, Mat, SubspaceBasis, nullspace


class WorkbenchError(ValueError):
    pass


class NotTInvariantError(WorkbenchError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"family is not translation invariant: {witness}")


class IdealShapeError(WorkbenchError):
    pass


def module_unit(amb: Ambient, w: int, i: int):
    vec = [amb.field.zero] * amb.module_dim
    vec[amb.module_index(w, i)] = amb.field.one
    return vec


def gamma_op(f, amb: Ambient) -> Mat:
    """Multiplication operator u -> f u on M; f is a function on V (or on G
    when V = G)."""
    coeffs = f.coeffs if isinstance(f, (HElem, AElem)) else tuple(f)
    if len(coeffs) != amb.gset.size:
        raise WorkbenchError("function does not live on V")
    n = amb.n
    zero = amb.field.zero
    N = amb.module_dim
    rows = [[zero] * N for _ in range(N)]
    for w, c in enumerate(coeffs):
        if c:
            for i in range(n):
                rows[w * n + i][w * n + i] = c
    return Mat(rows)


def left_shift_op(amb: Ambient, z: int) -> Mat:
    """The shift operator: T_v (x) e_j maps to T_{z^-1 . v} (x) e_j."""
    n = amb.n
    zero, one = amb.field.zero, amb.field.one
    N = amb.module_dim
    rows = [[zero] * N for _ in range(N)]
    zinv = amb.group.inv(z)
    for v in amb.gset.points():
        target = amb.gset.act(zinv, v)
        for j in range(n):
            rows[target * n + j][v * n + j] = one
    return Mat(rows)


def evaluate(x: DiffElem, z: int) -> Mat:
    """The operator x(z); linear in x, supported per component at z = g^-1."""
    amb = x.ambient
    n = amb.n
    zero = amb.field.zero
    N = amb.module_dim
    rows = [[zero] * N for _ in range(N)]
    zinv = amb.group.inv(z)
    for (g, w), mat in x.comps.items():
        if g != zinv:
            continue
        col_block = amb.gset.act(z, w)
        for i in range(n):
            row = rows[w * n + i]
            mrow = mat.rows[i]
            for j in range(n):
                if mrow[j]:
                    col = col_block * n + j
                    row[col] = row[col] + mrow[j]
    return Mat(rows)


class ConfOperator:
    """A family z -> operator on M, stored as one matrix per group element."""

    __slots__ = ("ambient", "ops")

    def __init__(self, ambient: Ambient, ops):
        ops = tuple(ops)
        if len(ops) != ambient.group.order:
            raise WorkbenchError("need one operator per group element")
        N = ambient.module_dim
        for op in ops:
            if op.nrows != N or op.ncols != N:
                raise WorkbenchError("operator has the wrong shape")
        self.ambient = ambient
        self.ops = ops

    def at(self, z: int) -> Mat:
        return self.ops[z]

    def __eq__(self, other):
        return (
            isinstance(other, ConfOperator)
            and self.ambient == other.ambient
            and self.ops == other.ops
        )

    def __hash__(self):
        return hash((self.ambient, self.ops))

    def __repr__(self):
        nonzero = sum(1 for op in self.ops if not op.is_zero())
        return f"ConfOperator({nonzero} nonzero points)"


def left_shift_family(amb: Ambient) -> ConfOperator:
    return ConfOperator(amb, [left_shift_op(amb, z) for z in amb.group.elements()])


def check_Tinvariance(a: ConfOperator):
    """(True, None) when a(g)(fu) = (L_g f)(a(g)u) holds for every basis
    function and every g; otherwise (False, witness)."""
    amb = a.ambient
    for g in amb.group.elements():
        op = a.at(g)
        for w in amb.gset.points():
            gamma_w = gamma_op(_point_fn(amb, w), amb)
            shifted = gamma_op(_point_fn(amb, amb.gset.act(amb.group.inv(g), w)), amb)
            if op * gamma_w != shifted * op:
                return False, {"g": g, "w": w}
    return True, None


def _point_fn(amb: Ambient, w: int):
    coeffs = [amb.field.zero] * amb.gset.size
    coeffs[w] = amb.field.one
    return coeffs


def phi(a: ConfOperator) -> DiffElem:
    """Tensor form of a translation-invariant family; errors with a witness
    when the family is not translation invariant."""
    ok, witness = check_Tinvariance(a)
    if not ok:
        raise NotTInvariantError(witness)
    amb = a.ambient
    n = amb.n
    comps = {}
    for z in amb.group.elements():
        op = a.at(z)
        first = amb.group.inv(z)
        for w in amb.gset.points():
            col_block = amb.gset.act(z, w)
            entries = [
                [op.rows[w * n + i][col_block * n + j] for j in range(n)]
                for i in range(n)
            ]
            mat = Mat(entries)
            if not mat.is_zero():
                comps[(first, w)] = mat
    return DiffElem(amb, comps)


def phi_inv(x: DiffElem) -> ConfOperator:
    amb = x.ambient
    return ConfOperator(amb, [evaluate(x, z) for z in amb.group.elements()])


def op_product(a: ConfOperator, b: ConfOperator, g: int) -> ConfOperator:
    """(a o_g b)(z) = a(g) b(z g^-1)."""
    if a.ambient != b.ambient:
        raise WorkbenchError("ambient mismatch")
    amb = a.ambient
    group = amb.group
    ag = a.at(g)
    ops = [ag * b.at(group.mul(z, group.inv(g))) for z in group.elements()]
    return ConfOperator(amb, ops)


def fourier(x: DiffElem) -> DiffElem:
    """The twist on H (x) A (x) M_n: T_h (x) T_w (x) m -> T_h (x) T_{h.w} (x) m."""
    amb = x.ambient
    out = {}
    for (h, w), mat in x.comps.items():
        key = (h, amb.gset.act(h, w))
        acc = out.get(key)
        out[key] = mat if acc is None else acc + mat
    return DiffElem(amb, out)


def fourier_inv(x: DiffElem) -> DiffElem:
    amb = x.ambient
    out = {}
    for (h, w), mat in x.comps.items():
        key = (h, amb.gset.act(amb.group.inv(h), w))
        acc = out.get(key)
        out[key] = mat if acc is None else acc + mat
    return DiffElem(amb, out)


def fourier_span(span: SubSpan, inverse=False) -> SubSpan:
    fn = fourier_inv if inverse else fourier
    return SubSpan.from_elems(span.ambient, [fn(e) for e in span.basis_elems()])


# ---------------------------------------------------------------------------
# spans of evaluation operators


def wn_span(C: SubSpan, raw: bool = False) -> SubspaceBasis:
    """Span of all evaluation operators of elements of C, inside End M.

    For a genuine subalgebra the span is already closed under composition
    (the composition law moves a product of evaluations to an evaluation of
    a product), so the plain span is returned after the closure check; pass
    ``raw=True`` to skip the check and force the full multiplicative
    closure of the generators instead.
    """
    amb = C.ambient
    N = amb.module_dim
    vectors = []
    for e in C.basis_elems():
        for z in amb.group.elements():
            vectors.append(evaluate(e, z).flatten())
    if raw:
        def compose(v, w):
            return (Mat.from_flat(v, N, N) * Mat.from_flat(w, N, N)).flatten()

        from .linalg import span_closure

        return span_closure(N * N, vectors, binary_steps=[compose])
    witness = subalgebra_closure_witness(C)
    if witness is not None:
        raise WorkbenchError(
            f"span is not closed under the products ({witness}); use raw=True"
        )
    builder = EchelonBuilder(N * N)
    for v in vectors:
        builder.add(v)
    return builder.basis()


def operator_algebra(C: SubSpan, include_gamma: bool = True) -> SubspaceBasis:
    """Unital algebra generated by the evaluations of C (and the
    multiplication operators when ``include_gamma``), by closing the span
    under composition.  This is the independent, operator-side route to the
    irreducibility decisions."""
    amb = C.ambient
    N = amb.module_dim
    seeds = [Mat.identity(N, amb.field).flatten()]
    if include_gamma:
        for w in amb.gset.points():
            seeds.append(gamma_op(_point_fn(amb, w), amb).flatten())
    for e in C.basis_elems():
        for z in amb.group.elements():
            seeds.append(evaluate(e, z).flatten())

    def compose(v, w):
        return (Mat.from_flat(v, N, N) * Mat.from_flat(w, N, N)).flatten()

    from .linalg import span_closure

    return span_closure(N * N, seeds, binary_steps=[compose])


def module_closure(ops, seed_vec, N) -> SubspaceBasis:
    """Smallest subspace of M containing the seed and invariant under ops."""
    from .linalg import span_closure

    steps = [op.apply for op in ops]
    return span_closure(N, [seed_vec], unary_steps=steps)


def centralizer(ops, N, field) -> SubspaceBasis:
    """All matrices commuting with every op, as flattened vectors."""
    rows = []
    zero = field.zero
    for op in ops:
        for i in range(N):
            for j in range(N):
                row = [zero] * (N * N)
                for k in range(N):
                    c = op.rows[k][j]
                    if c:
                        row[i * N + k] = row[i * N + k] + c
                    c2 = op.rows[i][k]
                    if c2:
                        row[k * N + j] = row[k * N + j] - c2
                rows.append(row)
    return nullspace(Mat(rows), field)


# ---------------------------------------------------------------------------
# enrichment and irreducibility


def enrich(C: SubSpan) -> SubSpan:
    """Close the span under multiplication on the middle slot, i.e. the span
    of (1 (x) f (x) E) o_e c over functions f and c in C.  On coefficient
    vectors this is projection onto the individual middle-slot components,
    so it always contains C."""
    amb = C.ambient
    builder = EchelonBuilder(amb.dim)
    n2 = amb.n * amb.n
    vsize = amb.gset.size
    zero = amb.field.zero
    for row in C.basis.rows:
        builder.add(row)
        for g in amb.group.elements():
            for w in amb.gset.points():
                base = amb.index(g, w, 0, 0)
                block = row[base : base + n2]
                if any(block):
                    vec = [zero] * amb.dim
                    vec[base : base + n2] = block
                    builder.add(vec)
    return SubSpan(amb, builder.basis())


def enrich_all_gamma(C: SubSpan) -> SubSpan:
    """Exploratory variant: span of (1 (x) T_a (x) E) o_gamma c over all
    gamma as well; strictly larger than ``enrich`` in general and not used
    by any decision."""
    amb = C.ambient
    elems = list(C.basis_elems())
    out = list(elems)
    for alpha in amb.gset.points():
        mult = DiffElem(
            amb,
            {
                (g, alpha): Mat.identity(amb.n, amb.field)
                for g in amb.group.elements()
            },
        )
        for gamma in amb.group.elements():
            for c in elems:
                out.append(diff_product(mult, c, gamma))
    return SubSpan.from_elems(amb, out)


class IrreducibilityResult:
    __slots__ = ("irreducible", "enriched_dim", "certificate", "flag")

    def __init__(self, irreducible, enriched_dim, certificate=None, flag=None):
        self.irreducible = irreducible
        self.enriched_dim = enriched_dim
        self.certificate = certificate
        self.flag = flag

    def __repr__(self):
        verdict = "irreducible" if self.irreducible else "reducible"
        return f"IrreducibilityResult({verdict}, enriched dim {self.enriched_dim})"


def invariant_submodule_search(C: SubSpan) -> SubspaceBasis | None:
    """Look for a proper nonzero submodule of M invariant under the
    multiplication operators and all evaluations of C, by closing
    coordinate vectors (certificates over a non-closed base field may not
    exist even when the enrichment is proper)."""
    amb = C.ambient
    N = amb.module_dim
    ops = [gamma_op(_point_fn(amb, w), amb) for w in amb.gset.points()]
    for e in C.basis_elems():
        for z in amb.group.elements():
            op = evaluate(e, z)
            if not op.is_zero():
                ops.append(op)
    one = amb.field.one
    seeds = [module_unit(amb, w, i) for w in amb.gset.points() for i in range(amb.n)]
    # one deterministic dense probe in addition to the coordinate vectors
    seeds.append([one] * N)
    for seed in seeds:
        closure = module_closure(ops, seed, N)
        if 0 < closure.dim < N:
            return closure
    return None


def is_irreducible(C: SubSpan) -> IrreducibilityResult:
    """Decide whether the module carries no proper invariant submodule over
    the algebraic closure.

    Decision rule: the span is irreducible iff its middle-slot enrichment
    is the whole algebra.  Fullness forces every matrix unit into the
    operator span, which kills invariant submodules over any field; a
    proper enrichment forces reducibility after base change, and the search
    for a rational certificate may then fail, which is flagged.
    Requires V = G and a span closed under the products.
    """
    amb = C.ambient
    if amb.gset.size != amb.group.order:
        raise WorkbenchError("irreducibility is decided over V = G")
    witness = subalgebra_closure_witness(C)
    if witness is not None:
        raise WorkbenchError(f"span is not a subalgebra: {witness}")
    enriched = enrich(C)
    if enriched.is_full():
        return IrreducibilityResult(True, enriched.dim)
    certificate = invariant_submodule_search(C)
    flag = None if certificate is not None else "enrichment-proper, no rational certificate"
    return IrreducibilityResult(False, enriched.dim, certificate, flag)


# ---------------------------------------------------------------------------
# one-sided ideals


def _right_step_products(amb: Ambient, elem: DiffElem):
    """All products elem o_gamma (basis element), using the support deltas."""
    group, n = amb.group, amb.n
    out = []
    for (g1, w1), m1 in elem.comps.items():
        # the product at gamma = g1^-1 is the only nonzero one, and the
        # middle slot of the right factor is forced by the delta
        for g2 in group.elements():
            first = group.mul(g1, g2)
            for i2 in range(n):
                for j2 in range(n):
                    unit = Mat.unit(n, n, i2, j2, amb.field)
                    prod = m1 * unit
                    if not prod.is_zero():
                        out.append(DiffElem(amb, {(first, w1): prod}))
    return out


def _left_step_products(amb: Ambient, elem: DiffElem):
    group, gset, n = amb.group, amb.gset, amb.n
    out = []
    for (g2, w2), m2 in elem.comps.items():
        for gamma in group.elements():
            ginv = group.inv(gamma)
            w1 = gset.act(ginv, w2)
            first = group.mul(ginv, g2)
            for i1 in range(n):
                for j1 in range(n):
                    unit = Mat.unit(n, n, i1, j1, amb.field)
                    prod = unit * m2
                    if not prod.is_zero():
                        out.append(DiffElem(amb, {(first, w1): prod}))
    return out


def _h_projections(amb: Ambient, elem: DiffElem):
    by_g = {}
    for (g, w), mat in elem.comps.items():
        by_g.setdefault(g, {})[(g, w)] = mat
    return [DiffElem(amb, comps) for comps in by_g.values()]


def _ideal_closure(gens, side: str) -> SubSpan:
    gens = list(gens)
    if not gens:
        raise WorkbenchError("need at least one generator")
    amb = gens[0].ambient
    builder = EchelonBuilder(amb.dim)
    work = []
    for e in gens:
        if e.ambient != amb:
            raise WorkbenchError("mixed ambients in generators")
        added = builder.add(e.vector())
        if added is not None:
            work.append(DiffElem.from_vector(amb, added))
    step = _right_step_products if side == "right" else _left_step_products
    while work:
        produced = []
        for e in work:
            produced.extend(_h_projections(amb, e))
            produced.extend(step(amb, e))
        work = []
        for p in produced:
            added = builder.add(p.vector())
            if added is not None:
                work.append(DiffElem.from_vector(amb, added))
    return SubSpan(amb, builder.basis())


def right_ideal_closure(gens) -> SubSpan:
    """Smallest H-submodule containing gens and closed under x o_g (algebra)."""
    return _ideal_closure(gens, "right")


def left_ideal_closure(gens) -> SubSpan:
    """Smallest H-submodule containing gens and closed under (algebra) o_g x."""
    return _ideal_closure(gens, "left")


def matrix_coeff_ambient_dim(amb: Ambient) -> int:
    """Dimension of M_n(A) = A (x) M_n(k) as a coefficient space."""
    return amb.gset.size * amb.n * amb.n


def _mn_a_index(amb: Ambient, w, i, j):
    n = amb.n
    return (w * n + i) * n + j


def ideal_shape(B: SubSpan, side: str) -> SubspaceBasis:
    """Recover B0 from a one-sided ideal.

    A right ideal factors directly as (all of H) (x) B0 with B0 a right
    ideal of M_n(A); a left ideal factors the same way after pulling back
    through the twist.  A failure to factor certifies the span was not an
    ideal of that side, reported as IdealShapeError.
    """
    if side not in ("left", "right"):
        raise WorkbenchError(f"side must be 'left' or 'right', not {side!r}")
    amb = B.ambient
    span = fourier_span(B, inverse=True) if side == "left" else B
    n2 = amb.n * amb.n
    block = amb.gset.size * n2
    projections = []
    dims = 0
    for g in amb.group.elements():
        vectors = []
        for row in span.basis.rows:
            base = amb.index(g, 0, 0, 0)
            piece = row[base : base + block]
            if any(piece):
                vectors.append(list(piece))
        proj = SubspaceBasis.from_vectors(block, vectors)
        projections.append(proj)
        dims += proj.dim
    first = projections[0]
    if any(p != first for p in projections[1:]) or dims != span.dim:
        raise IdealShapeError(
            f"span does not factor as H (x) B0 on the {side} side; "
            "the input was not an ideal of that side"
        )
    return first


def mn_a_left_ideal_closure(amb: Ambient, gens_vectors) -> SubspaceBasis:
    """Left-ideal closure inside M_n(A): close under left multiplication by
    the basis T_w (x) e_ij (pointwise in the A slot)."""
    n = amb.n
    block = n * n
    builder = EchelonBuilder(matrix_coeff_ambient_dim(amb))
    work = []
    for v in gens_vectors:
        added = builder.add(list(v))
        if added is not None:
            work.append(added)
    while work:
        produced = []
        for v in work:
            for w in amb.gset.points():
                base = w * block
                piece = v[base : base + block]
                if not any(piece):
                    continue
                m = Mat.from_flat(list(piece), n, n)
                for i in range(n):
                    for j in range(n):
                        prod = Mat.unit(n, n, i, j, amb.field) * m
                        if prod.is_zero():
                            continue
                        vec = [amb.field.zero] * builder.ambient
                        vec[base : base + block] = prod.flatten()
                        produced.append(vec)
        work = []
        for p in produced:
            added = builder.add(p)
            if added is not None:
                work.append(added)
    return builder.basis()


def is_mn_a_left_ideal(amb: Ambient, basis: SubspaceBasis) -> bool:
    return mn_a_left_ideal_closure(amb, basis.rows) == basis


def right_annihilator(amb: Ambient, B0: SubspaceBasis) -> SubspaceBasis:
    """{x in M_n(A) : B0 x = 0}; products are pointwise over V and matrix
    composition in the matrix slot.  Constraint rows are deduplicated
    through an incremental echelon before the solve."""
    n = amb.n
    D = matrix_coeff_ambient_dim(amb)
    dedupe = EchelonBuilder(D)
    zero = amb.field.zero
    for b in B0.rows:
        for w in amb.gset.points():
            base = w * n * n
            piece = b[base : base + n * n]
            if not any(piece):
                continue
            m = Mat.from_flat(list(piece), n, n)
            for p in range(n):
                for q in range(n):
                    row = [zero] * D
                    for j in range(n):
                        c = m.rows[p][j]
                        if c:
                            row[_mn_a_index(amb, w, j, q)] = c
                    dedupe.add(row)
    rows = [list(r) for r in dedupe.rows]
    if not rows:
        rows = [[zero] * D]
    return nullspace(Mat(rows), amb.field)


def is_essential(amb: Ambient, B0: SubspaceBasis) -> bool:
    """Essentiality of a left ideal of M_n(A), decided by the annihilator
    criterion and cross-checked against the whole-ring criterion (in this
    finite semisimple setting the two agree; a disagreement would mean a
    convention bug, so it raises)."""
    if not is_mn_a_left_ideal(amb, B0):
        raise WorkbenchError("B0 is not a left ideal of M_n(A)")
    ann = right_annihilator(amb, B0)
    by_annihilator = ann.dim == 0
    by_whole_ring = B0.dim == matrix_coeff_ambient_dim(amb)
    if by_annihilator != by_whole_ring:
        raise WorkbenchError(
            "essentiality criteria disagree; annihilator "
            f"dim {ann.dim}, ideal dim {B0.dim}"
        )
    return by_annihilator


def is_simple(amb: Ambient):
    """(True, None) iff the algebra over (G, V, n) has no proper nonzero
    two-sided ideal, which happens exactly when the action on V is
    transitive; otherwise returns an ideal witness built from a proper
    orbit."""
    orbs = orbits(amb.gset)
    if len(orbs) == 1:
        return True, None
    proper = orbs[0]
    elems = []
    for g in amb.group.elements():
        for w in proper:
            for i in range(amb.n):
                for j in range(amb.n):
                    elems.append(amb.basis_elem(g, w, i, j))
    return False, SubSpan.from_elems(amb, elems)


def construct_shift_functions(group, g_list, U, field):
    """Functions f_1..f_m with (L_{g_i} f_j)(z) = delta_ij at a point z of U.

    Constructive recipe: pick z in U (the minimal id) and set f_j to the
    indicator of g_j z; the determinant of the shift matrix at z is then 1.
    """
    g_list = list(g_list)
    if len(set(g_list)) != len(g_list):
        raise WorkbenchError("shift construction needs pairwise distinct elements")
    U = sorted(set(U))
    if not U:
        raise WorkbenchError("the admissible set U must be nonempty")
    z = U[0]
    from .hopf import basis_h

    fs = [basis_h(group, group.mul(gj, z), field) for gj in g_list]
    return fs, z
