"""Canonical irreducible subalgebras, their scalar tables, and the
automorphism machinery that recovers them.

A subgroup G1 of G together with a nowhere-zero table chi on G x G whose
coset ratios are representative-independent determines a canonical
irreducible subalgebra: the span of sum_{a in K} chi(g, a) T_g (x) T_a (x) m
over g, cosets K of G1, and matrices m.  ``canonicalize`` reverses the
construction: it reads off the subgroup from kernel supports of the
identity-slot component, straightens the per-point matrix automorphisms by
conjugation, and returns the normalized table (value 1 at the stored coset
representatives, which are minimal element ids).
"""

from __future__ import annotations

from .conformal import Ambient, DiffElem, SubSpan, diff_product
from .groups import cosets, is_subgroup
from .linalg import (
    EchelonBuilder,
    Mat,
    SubspaceBasis,
    kernel_partition,
    matrix_units,
    nullspace,
    skolem_noether,
)
from .workbench import WorkbenchError, evaluate, gamma_op, is_irreducible


class ClassifyError(ValueError):
    pass


class InvalidChiError(ClassifyError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"chi table fails representative independence: {witness}")


class NonScalarError(ClassifyError):
    pass


class ChiFunction:
    """Nowhere-zero table (g, gamma) -> scalar, g-major."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        values = tuple(tuple(row) for row in values)
        if len(values) != group.order or any(len(r) != group.order for r in values):
            raise ClassifyError("chi table must be |G| x |G|")
        for g, row in enumerate(values):
            for gamma, v in enumerate(row):
                if not v:
                    raise ClassifyError(f"chi({g},{gamma}) is zero")
        self.group = group
        self.values = values

    @classmethod
    def constant_one(cls, group, field):
        one = field.one
        return cls(group, [[one] * group.order for _ in group.elements()])

    def value(self, g, gamma):
        return self.values[g][gamma]

    def __eq__(self, other):
        return (
            isinstance(other, ChiFunction)
            and self.group == other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.group, self.values))

    def __repr__(self):
        return f"ChiFunction(on {self.group.name})"


def validate_chi(group, subgroup_ids, chi: ChiFunction):
    """(True, None) when for every g, h and every coset the ratio
    chi(g,y) chi(h,g^-1 y) / chi(gh, y) does not depend on the
    representative y of the coset; otherwise (False, witness)."""
    if chi.group != group:
        raise ClassifyError("chi lives on a different group")
    cos = cosets(group, subgroup_ids)
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            ginv = group.inv(g)
            for k, coset in enumerate(cos):
                ref = None
                ref_gamma = None
                for gamma in coset:
                    ratio = (
                        chi.value(g, gamma)
                        * chi.value(h, group.mul(ginv, gamma))
                        / chi.value(gh, gamma)
                    )
                    if ref is None:
                        ref, ref_gamma = ratio, gamma
                    elif ratio != ref:
                        return False, {
                            "g": g,
                            "h": h,
                            "coset": k,
                            "gamma": ref_gamma,
                            "gamma2": gamma,
                            "ratio": ref,
                            "ratio2": ratio,
                        }
    return True, None


def chi_span(group, subgroup_ids, chi: ChiFunction, n, field) -> SubSpan:
    """The span determined by (G1, chi) without any validity check; the
    canonical basis element for (g, coset K, i, j) is
    sum_{a in K} chi(g, a) T_g (x) T_a (x) e_ij."""
    amb = Ambient(group, n, field=field)
    cos = cosets(group, subgroup_ids)
    elems = []
    for g in group.elements():
        for coset in cos:
            for i in range(n):
                for j in range(n):
                    comps = {}
                    for alpha in coset:
                        comps[(g, alpha)] = Mat.unit(n, n, i, j, field).scale(
                            chi.value(g, alpha)
                        )
                    elems.append(DiffElem(amb, comps))
    return SubSpan.from_elems(amb, elems)


def build_C(group, subgroup_ids, chi: ChiFunction, n, field) -> SubSpan:
    """Validated construction of the canonical irreducible subalgebra."""
    ok, witness = validate_chi(group, subgroup_ids, chi)
    if not ok:
        raise InvalidChiError(witness)
    return chi_span(group, subgroup_ids, chi, n, field)


class GradedDecomposition:
    """First-slot grading of a span, with the classification data filled in
    by ``analyze_Se``."""

    __slots__ = (
        "ambient",
        "components",
        "graded_report",
        "classes",
        "subgroup",
        "reps",
        "theta_images",
    )

    def __init__(self, ambient, components, graded_report):
        self.ambient = ambient
        self.components = components  # g -> SubspaceBasis in A (x) M_n coords
        self.graded_report = graded_report
        self.classes = None
        self.subgroup = None
        self.reps = None
        self.theta_images = None


def _slice_block(amb: Ambient, row, g):
    block = amb.gset.size * amb.n * amb.n
    base = amb.index(g, 0, 0, 0)
    return list(row[base : base + block])


def grading(C: SubSpan) -> GradedDecomposition:
    """Split a span into its first-slot components S_g and verify that they
    reassemble the span; also reports, for every pair (g, h), whether the
    grading product rule S_g . (shift of S_h) inside S_{gh} was verified on
    a nonzero product or held vacuously."""
    amb = C.ambient
    group = amb.group
    block = amb.gset.size * amb.n * amb.n
    components = {}
    total = 0
    for g in group.elements():
        vectors = []
        for row in C.basis.rows:
            piece = _slice_block(amb, row, g)
            if any(piece):
                vectors.append(piece)
        comp = SubspaceBasis.from_vectors(block, vectors)
        components[g] = comp
        total += comp.dim
    if total != C.dim:
        raise ClassifyError(
            "span is not homogeneous in the first slot; projections give "
            f"total dimension {total} against span dimension {C.dim}"
        )
    report = {}
    n = amb.n
    for g in group.elements():
        ginv = group.inv(g)
        for h in group.elements():
            target = components[group.mul(g, h)]
            status = "vacuous"
            witness = None
            for x in components[g].rows:
                for y in components[h].rows:
                    prod = _graded_product(amb, x, y, ginv)
                    if any(prod):
                        if target.contains(prod):
                            if status == "vacuous":
                                status = "verified"
                        else:
                            status = "fail"
                            witness = {"g": g, "h": h}
                            break
                if status == "fail":
                    break
            report[(g, h)] = status if witness is None else (status, witness)
    if any(v == "fail" or isinstance(v, tuple) for v in report.values()):
        raise ClassifyError(f"grading product rule fails: {report}")
    return GradedDecomposition(amb, components, report)


def _graded_product(amb: Ambient, x, y, shift):
    """Pointwise product of x with the shift of y inside A (x) M_n."""
    n = amb.n
    n2 = n * n
    zero = amb.field.zero
    out = [zero] * len(x)
    for gamma in amb.gset.points():
        xm = x[gamma * n2 : (gamma + 1) * n2]
        if not any(xm):
            continue
        src = amb.gset.act(shift, gamma)
        ym = y[src * n2 : (src + 1) * n2]
        if not any(ym):
            continue
        prod = Mat.from_flat(list(xm), n, n) * Mat.from_flat(list(ym), n, n)
        out[gamma * n2 : (gamma + 1) * n2] = prod.flatten()
    return out


def analyze_Se(C: SubSpan) -> GradedDecomposition:
    """Full classification data of an irreducible subalgebra: per-point
    density, the block supports of the identity component (which must be
    the cosets of a subgroup), and the per-point matrix automorphisms
    relating the blocks to the stored representatives."""
    amb = C.ambient
    group = amb.group
    n = amb.n
    n2 = n * n
    res = is_irreducible(C)
    if not res.irreducible:
        raise ClassifyError("span is not irreducible")
    decomp = grading(C)
    # density: every point projection of every component is all of M_n
    for g in group.elements():
        comp = decomp.components[g]
        for gamma in amb.gset.points():
            proj = Mat([row[gamma * n2 : (gamma + 1) * n2] for row in comp.rows])
            if proj.rank() != n2:
                raise ClassifyError(f"density fails at (g={g}, point={gamma})")
    s_e = decomp.components[0]
    classes = kernel_partition(s_e, amb.gset.size, n2, amb.field)
    classes = sorted(classes, key=min)
    if 0 not in classes[0]:
        raise ClassifyError("identity point landed outside the first class")
    subgroup = tuple(sorted(classes[0]))
    if not is_subgroup(group, subgroup):
        raise ClassifyError(f"support of the identity class {subgroup} is not a subgroup")
    expect = [tuple(c) for c in cosets(group, subgroup)]
    if [tuple(c) for c in classes] != expect:
        raise ClassifyError("kernel classes are not the subgroup cosets")
    reps = [min(c) for c in classes]
    theta_images = {}
    for k, cls in enumerate(classes):
        ideal = _block_supported(amb, s_e, cls)
        if ideal.dim != n2:
            raise ClassifyError(
                f"block component over class {k} has dimension {ideal.dim}, not n^2"
            )
        rep = reps[k]
        proj_rep = Mat([row[rep * n2 : (rep + 1) * n2] for row in ideal.rows])
        try:
            inv = proj_rep.transpose().inverse()
        except Exception:
            raise ClassifyError(
                f"projection at representative {rep} is not invertible"
            ) from None
        for g in cls:
            images = []
            for p in range(n):
                for q in range(n):
                    unit_vec = [amb.field.zero] * n2
                    unit_vec[p * n + q] = amb.field.one
                    coeffs = inv.apply(unit_vec)
                    img = [amb.field.zero] * n2
                    for c, row in zip(coeffs, ideal.rows):
                        if c:
                            for t in range(n2):
                                v = row[g * n2 + t]
                                if v:
                                    img[t] = img[t] + c * v
                    images.append(Mat.from_flat(img, n, n))
            _certify_automorphism(images, n, amb.field, g)
            theta_images[g] = images
    decomp.classes = [tuple(c) for c in classes]
    decomp.subgroup = subgroup
    decomp.reps = reps
    decomp.theta_images = theta_images
    return decomp


def _block_supported(amb: Ambient, basis: SubspaceBasis, cls) -> SubspaceBasis:
    """Subspace of the span supported only on the given point blocks."""
    n2 = amb.n * amb.n
    keep = set(cls)
    complement_coords = [
        gamma * n2 + t
        for gamma in amb.gset.points()
        if gamma not in keep
        for t in range(n2)
    ]
    if not complement_coords:
        return basis
    rows = [[row[c] for row in basis.rows] for c in complement_coords]
    ker = nullspace(Mat(rows), amb.field)
    vectors = []
    for coeffs in ker.rows:
        vec = [amb.field.zero] * basis.ambient
        for c, row in zip(coeffs, basis.rows):
            if c:
                for t, v in enumerate(row):
                    if v:
                        vec[t] = vec[t] + c * v
        vectors.append(vec)
    return SubspaceBasis.from_vectors(basis.ambient, vectors)


def _certify_automorphism(images, n, field, tag):
    total = Mat.zero(n, n, field)
    for p in range(n):
        total = total + images[p * n + p]
    if total != Mat.identity(n, field):
        raise ClassifyError(f"per-point map at {tag} does not preserve the identity")
    for a in range(n * n):
        pa, qa = divmod(a, n)
        for b in range(n * n):
            pb, qb = divmod(b, n)
            expect = images[pa * n + qb] if qa == pb else Mat.zero(n, n, field)
            if images[a] * images[b] != expect:
                raise ClassifyError(f"per-point map at {tag} is not multiplicative")


class ConfAutomorphism:
    """Family of bijective linear maps sigma_{g,a} on M_n(k) acting slotwise
    on the algebra; built from a family of invertible conjugators U_a via
    sigma_{g,a}(m) = U_a^-1 m U_{g^-1 a}."""

    __slots__ = ("ambient", "us", "maps")

    def __init__(self, ambient: Ambient, maps, us=None):
        self.ambient = ambient
        self.maps = maps  # dict (g, alpha) -> Mat n^2 x n^2 on vec(m)
        self.us = us

    @classmethod
    def identity(cls, ambient: Ambient) -> "ConfAutomorphism":
        n2 = ambient.n * ambient.n
        ident = Mat.identity(n2, ambient.field)
        maps = {
            (g, a): ident
            for g in ambient.group.elements()
            for a in ambient.gset.points()
        }
        us = [Mat.identity(ambient.n, ambient.field)] * ambient.gset.size
        return cls(ambient, maps, us)

    def apply_mat(self, g, alpha, m: Mat) -> Mat:
        n = self.ambient.n
        return Mat.from_flat(self.maps[(g, alpha)].apply(m.flatten()), n, n)

    def apply_elem(self, x: DiffElem) -> DiffElem:
        out = {}
        for (g, w), m in x.comps.items():
            out[(g, w)] = self.apply_mat(g, w, m)
        return DiffElem(self.ambient, out)


def build_sigma(u_family, amb: Ambient) -> ConfAutomorphism:
    """Automorphism from invertible conjugators, one per point of V = G.

    Validates the family condition (the image of a product of matrices at
    indices (gh, a) must factor through the indices (g, a) and (h, g^-1 a))
    exhaustively on matrix-unit pairs before returning.
    """
    group = amb.group
    n = amb.n
    us = []
    invs = []
    for alpha, u in enumerate(u_family):
        if u.nrows != n or u.ncols != n:
            raise ClassifyError(f"conjugator at {alpha} has the wrong size")
        try:
            invs.append(u.inverse())
        except Exception:
            raise ClassifyError(f"conjugator at {alpha} is singular") from None
        us.append(u)
    if len(us) != amb.gset.size:
        raise ClassifyError("need one conjugator per point")
    maps = {}
    for g in group.elements():
        ginv = group.inv(g)
        for alpha in amb.gset.points():
            target = amb.gset.act(ginv, alpha)
            left, right = invs[alpha], us[target]
            cols = []
            for p in range(n):
                for q in range(n):
                    img = left * Mat.unit(n, n, p, q, amb.field) * right
                    cols.append(img.flatten())
            # columns indexed by source unit; build the matrix acting on vec
            n2 = n * n
            rows = [[cols[src][dst] for src in range(n2)] for dst in range(n2)]
            maps[(g, alpha)] = Mat(rows)
    sigma = ConfAutomorphism(amb, maps, us)
    witness = sigma_condition_witness(sigma)
    if witness is not None:
        raise ClassifyError(f"conjugator family fails the composition condition: {witness}")
    return sigma


def sigma_condition_witness(sigma: ConfAutomorphism):
    """First matrix-unit pair violating
    sigma_{gh,a}(m m') = sigma_{g,a}(m) sigma_{h,g^-1 a}(m'), else None."""
    amb = sigma.ambient
    group = amb.group
    n = amb.n
    units = matrix_units(n, amb.field)
    for g in group.elements():
        ginv = group.inv(g)
        for h in group.elements():
            gh = group.mul(g, h)
            for alpha in amb.gset.points():
                shifted = amb.gset.act(ginv, alpha)
                for a in units:
                    for b in units:
                        lhs = sigma.apply_mat(gh, alpha, a * b)
                        rhs = sigma.apply_mat(g, alpha, a) * sigma.apply_mat(
                            h, shifted, b
                        )
                        if lhs != rhs:
                            return {"g": g, "h": h, "alpha": alpha}
    return None


def sigma_preserves_products(sigma: ConfAutomorphism) -> bool:
    """Exhaustive product-table preservation check on the algebra basis.

    Points where the left factor's support delta vanishes give zero on both
    sides (the slotwise map cannot move the support), so only the firing
    point of each left factor is compared.
    """
    amb = sigma.ambient
    for t1 in amb.basis_indices():
        a = amb.basis_elem(*t1)
        sa = sigma.apply_elem(a)
        gamma = amb.group.inv(t1[0])
        for t2 in amb.basis_indices():
            b = amb.basis_elem(*t2)
            sb = sigma.apply_elem(b)
            if sigma.apply_elem(diff_product(a, b, gamma)) != diff_product(
                sa, sb, gamma
            ):
                return False
    return True


def apply_automorphism(sigma: ConfAutomorphism, C: SubSpan) -> SubSpan:
    if sigma.ambient != C.ambient:
        raise ClassifyError("ambient mismatch")
    return SubSpan.from_elems(C.ambient, [sigma.apply_elem(e) for e in C.basis_elems()])


def extract_chi(decomp: GradedDecomposition, C: SubSpan) -> ChiFunction:
    """Read the scalar table off a normalized irreducible subalgebra.

    Requires the identity component to be exactly the span of the coset
    indicators tensored with full matrix blocks (i.e. all per-point maps
    already straightened); the value at (g, gamma) is the entrywise ratio
    between the gamma block and the representative block, which is forced
    to be 1 at the representatives themselves.
    """
    amb = C.ambient
    group = amb.group
    n = amb.n
    n2 = n * n
    if decomp.classes is None:
        raise ClassifyError("need the analyzed decomposition, not just the grading")
    normalized = _coset_indicator_span(amb, decomp.classes)
    if decomp.components[0] != normalized:
        raise NonScalarError(
            "identity component is not the straightened coset-indicator span"
        )
    values = [[None] * group.order for _ in group.elements()]
    one = amb.field.one
    for g in group.elements():
        comp = decomp.components[g]
        for k, cls in enumerate(decomp.classes):
            rep = decomp.reps[k]
            block = _block_supported(amb, comp, cls)
            if block.dim != n2:
                raise NonScalarError(
                    f"component at g={g} over class {k} has dimension {block.dim}"
                )
            for gamma in cls:
                if gamma == rep:
                    values[g][gamma] = one
                    continue
                ratio = None
                for row in block.rows:
                    rep_piece = row[rep * n2 : (rep + 1) * n2]
                    gam_piece = row[gamma * n2 : (gamma + 1) * n2]
                    if ratio is None:
                        for t in range(n2):
                            if rep_piece[t]:
                                ratio = gam_piece[t] / rep_piece[t]
                                break
                        if ratio is None:
                            if any(gam_piece):
                                raise NonScalarError(
                                    f"no scalar ratio at (g={g}, gamma={gamma})"
                                )
                            continue
                    for t in range(n2):
                        if gam_piece[t] != ratio * rep_piece[t]:
                            raise NonScalarError(
                                f"non-scalar relation at (g={g}, gamma={gamma})"
                            )
                if ratio is None or not ratio:
                    raise NonScalarError(f"degenerate block at (g={g}, gamma={gamma})")
                values[g][gamma] = ratio
    chi = ChiFunction(group, values)
    ok, witness = validate_chi(group, decomp.subgroup, chi)
    if not ok:
        raise ClassifyError(f"extracted table fails validation: {witness}")
    return chi


def _coset_indicator_span(amb: Ambient, classes) -> SubspaceBasis:
    n = amb.n
    n2 = n * n
    block = amb.gset.size * n2
    vectors = []
    for cls in classes:
        for t in range(n2):
            vec = [amb.field.zero] * block
            for gamma in cls:
                vec[gamma * n2 + t] = amb.field.one
            vectors.append(vec)
    return SubspaceBasis.from_vectors(block, vectors)


def canonicalize(C: SubSpan):
    """Normalize an irreducible subalgebra to its canonical representative.

    Returns (subgroup ids, chi, sigma) such that applying sigma to the
    input yields exactly the validated span built from (subgroup, chi);
    deterministic given the input (representatives are minimal ids and the
    conjugators at representatives are pinned to the identity).
    """
    amb = C.ambient
    decomp = analyze_Se(C)
    n = amb.n
    ident = Mat.identity(n, amb.field)
    vs = []
    rep_set = set(decomp.reps)
    for g in amb.group.elements():
        if g in rep_set:
            vs.append(ident)
            continue
        conj = skolem_noether(decomp.theta_images[g], n, amb.field)
        vs.append(conj.inverse())
    sigma = build_sigma(vs, amb)
    image = apply_automorphism(sigma, C)
    decomp2 = analyze_Se(image)
    if decomp2.subgroup != decomp.subgroup:
        raise ClassifyError("normalization changed the recovered subgroup")
    chi = extract_chi(decomp2, image)
    rebuilt = build_C(amb.group, decomp2.subgroup, chi, n, amb.field)
    if rebuilt != image:
        raise ClassifyError("normalized span does not match its rebuilt form")
    return decomp2.subgroup, chi, sigma


def theta_bridge(amb: Ambient, theta_fn):
    """Extend a product-preserving bijection of the algebra to the algebra
    of evaluation operators.

    ``theta_fn`` maps elements to elements; it is checked on the basis to
    be linear-bijective, compatible with the module action, and
    product-preserving, and the induced operator map theta(x(g)) =
    theta_fn(x)(g) is checked to be well defined (a vanishing evaluation
    must be sent to a vanishing evaluation).  Returns the operator-space
    matrix together with a report of the multiplicativity and
    action-compatibility checks.
    """
    group = amb.group
    basis = [amb.basis_elem(*t) for t in amb.basis_indices()]
    images = [theta_fn(b) for b in basis]
    mat_rows = [im.vector() for im in images]
    if Mat(mat_rows).rank() != amb.dim:
        raise ClassifyError("map on the algebra is not bijective")
    for b, im in zip(basis, images):
        # compatibility with the module action = first-slot homogeneity
        for (g, _w), _m in b.comps.items():
            for (g2, _w2), _m2 in im.comps.items():
                if g2 != g:
                    raise ClassifyError("map is not compatible with the module action")

    zero = amb.field.zero

    def theta_elem(x: DiffElem) -> DiffElem:
        # linear extension of the basis images
        out = [zero] * amb.dim
        for pos, c in enumerate(x.vector()):
            if c:
                row = mat_rows[pos]
                out = [o + c * r if r else o for o, r in zip(out, row)]
        return DiffElem.from_vector(amb, out)

    for i, a in enumerate(basis):
        gamma = group.inv(next(iter(a.comps))[0])
        for j, b in enumerate(basis):
            if theta_elem(diff_product(a, b, gamma)) != diff_product(
                images[i], images[j], gamma
            ):
                raise ClassifyError(
                    f"map does not preserve the products at ({i},{j},{gamma})"
                )
    N = amb.module_dim
    builder = EchelonBuilder(2 * N * N)
    for b, im in zip(basis, images):
        for g in group.elements():
            v = evaluate(b, g).flatten()
            w = evaluate(im, g).flatten()
            if not any(v):
                if any(w):
                    raise ClassifyError(
                        "operator map is ill defined: zero evaluation with "
                        "nonzero image"
                    )
                continue
            row = list(v) + list(w)
            added = builder.add(row)
            if added is not None and not any(added[: N * N]):
                raise ClassifyError(
                    "operator map is ill defined: dependent evaluations with "
                    "independent images"
                )
    basis_rows = builder.basis()
    if len(basis_rows.rows) != N * N:
        raise ClassifyError("evaluations do not span the operator space")
    # theta(x) = -(image part of the residual of [x | 0])
    cols = []
    zero = amb.field.zero
    for t in range(N * N):
        probe = [zero] * (2 * N * N)
        probe[t] = amb.field.one
        residual = basis_rows.reduce(probe)
        cols.append([-c for c in residual[N * N :]])
    theta_mat = Mat(cols).transpose()
    report = _theta_checks(amb, theta_mat)
    if not report["multiplicative"] or not report["action_invariant"]:
        raise ClassifyError(f"operator map fails checks: {report}")
    return theta_mat, report


def _theta_checks(amb: Ambient, theta_mat: Mat) -> dict:
    """Multiplicativity on a full operator basis and compatibility with the
    intrinsic module action h . x = sum Gamma(h_(1)) x Gamma(antipode of
    h_(2)) on the operator algebra."""
    N = amb.module_dim
    field = amb.field
    units = [Mat.unit(N, N, i, j, field) for i in range(N) for j in range(N)]

    def theta(m: Mat) -> Mat:
        return Mat.from_flat(theta_mat.apply(m.flatten()), N, N)

    theta_units = [theta(u) for u in units]
    multiplicative = True
    for i, a in enumerate(units):
        pa, qa = divmod(i, N)
        for j, b in enumerate(units):
            pb, qb = divmod(j, N)
            prod = theta_units[pa * N + qb] if qa == pb else Mat.zero(N, N, field)
            if theta_units[i] * theta_units[j] != prod:
                multiplicative = False
                break
        if not multiplicative:
            break
    gammas = [gamma_op(_indicator(amb, w), amb) for w in amb.gset.points()]
    action_ok = True
    group = amb.group
    for q in group.elements():
        pairs = [
            (u, v)
            for u in group.elements()
            for v in group.elements()
            if group.mul(u, v) == q
        ]
        for idx, alpha in enumerate(units):
            acted = Mat.zero(N, N, field)
            for u, v in pairs:
                acted = acted + gammas[u] * alpha * gammas[group.inv(v)]
            lhs = theta(acted)
            rhs = Mat.zero(N, N, field)
            for u, v in pairs:
                rhs = rhs + gammas[u] * theta_units[idx] * gammas[group.inv(v)]
            if lhs != rhs:
                action_ok = False
                break
        if not action_ok:
            break
    return {"multiplicative": multiplicative, "action_invariant": action_ok}


def _indicator(amb: Ambient, w):
    coeffs = [amb.field.zero] * amb.gset.size
    coeffs[w] = amb.field.one
    return coeffs
