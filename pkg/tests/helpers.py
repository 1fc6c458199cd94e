"""Shared oracles and randomized-instance generators for the test suite.

Oracles here are written from the defining formulas, independent of the code
paths they check: the Koszul defining equation, the symmetry closure of a
curvature table from its generating components, the trace definition of
Ricci, and the fully expanded derivation action on closed-form-shaped
curvature tables.
"""

from __future__ import annotations

import random
from fractions import Fraction

from nordenlight.ambient import (
    LieAlgebraSpec,
    NordenStructure,
    norden_structure,
)
from nordenlight.exact import (
    DenseTensor,
    mat_inverse,
    mat_mul,
    solve_affine,
    transpose,
    unit_vector,
)

F = Fraction


# ---------------------------------------------------------------------------
# oracles


def koszul_residuals(spec, metric, gamma):
    """Residuals of 2<D_i j, k> - (<[i,j],k> + <[k,i],j> + <[k,j],i>) over all
    basis triples; the connection is correct iff all vanish."""
    n = spec.dim
    c = spec.brackets.nested()
    gm = gamma.nested()

    def pair_bracket(a, b, k):
        return sum(c[a][b][m] * metric[m][k] for m in range(n))

    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = 2 * sum(gm[i][j][m] * metric[m][k] for m in range(n))
                rhs = pair_bracket(i, j, k) + pair_bracket(k, i, j) + pair_bracket(k, j, i)
                out.append(lhs - rhs)
    return out


def symmetry_closure_table(dim, generators):
    """Expected rank-4 table from 1-based (i, j, k, l, value) generators,
    closed under antisymmetry in the first and last index pairs and the pair
    interchange; conflicting assignments raise."""
    table = {}

    def put(i, j, k, l, v):
        key = (i, j, k, l)
        if key in table and table[key] != v:
            raise AssertionError(f"symmetry closure conflict at {key}")
        table[key] = v

    for i, j, k, l, v in generators:
        i, j, k, l, v = i - 1, j - 1, k - 1, l - 1, F(v)
        for a, b, sign1 in ((i, j, 1), (j, i, -1)):
            for c, d, sign2 in ((k, l, 1), (l, k, -1)):
                s = sign1 * sign2
                put(a, b, c, d, s * v)
                put(c, d, a, b, s * v)
    return DenseTensor.from_function(
        (dim, dim, dim, dim), lambda i, j, k, l: table.get((i, j, k, l), F(0))
    )


def trace_ricci(r13):
    """Trace of Z -> R(Z, X)Y straight from the table."""
    m = r13.dims[0]
    t = r13.nested()
    return tuple(
        tuple(sum(t[c][a][b][c] for c in range(m)) for b in range(m)) for a in range(m)
    )


def frame_tables(frame, amb):
    """Induced-metric, J-pairing, projector, and J-after-projector tables of a
    frame, recomputed from scratch for oracle use."""
    m = len(frame.span)
    metric = amb.norden.metric(frame.inducing_metric)

    def pair(u, v):
        return sum(u[i] * sum(metric[i][j] * v[j] for j in range(len(v))) for i in range(len(u)))

    span_cols = list(zip(*frame.span))

    def span_coords(v):
        sol = solve_affine(span_cols, list(v))
        assert sol.kind != "infeasible"
        return sol.particular

    xi_span = span_coords(frame.xi)
    g_ind = tuple(tuple(pair(frame.span[a], frame.span[b]) for b in range(m)) for a in range(m))
    mj = tuple(
        tuple(pair(frame.span[a], amb.norden.apply_j(frame.span[c])) for c in range(m))
        for a in range(m)
    )
    proj = []
    phi = []
    for a in range(m):
        p = list(unit_vector(m, a))
        for q in range(m):
            p[q] -= frame.eta[a] * xi_span[q]
        proj.append(tuple(p))
        p_amb = tuple(
            sum(p[q] * frame.span[q][r] for q in range(m)) for r in range(len(frame.xi))
        )
        phi.append(span_coords(amb.norden.apply_j(p_amb)))
    return {
        "g": g_ind,
        "mj": mj,
        "proj": tuple(proj),
        "phi": tuple(phi),
        "xi_span": xi_span,
    }


def derivation_action_expansion(frame, amb, a_coeff, k_coeff):
    """Fully expanded (R(X,Y).R)(U,V,W) for a closed-form-shaped curvature
    table with screen coefficient ``a_coeff`` and metric coefficient
    ``k_coeff``; returns a function of five basis indices producing span
    coordinates."""
    tables = frame_tables(frame, amb)
    g = tables["g"]
    mj = tables["mj"]
    proj = tables["proj"]
    phi = tables["phi"]
    m = len(g)
    a = F(a_coeff)
    k = F(k_coeff)

    def gp(basis_idx, vec):
        # induced pairing of a basis field with a span-coordinate vector
        return sum(vec[q] * g[basis_idx][q] for q in range(m))

    def value(x, y, u, v, w):
        out = [F(0)] * m

        def add(scale, vec):
            if scale == 0:
                return
            for q in range(m):
                out[q] += scale * vec[q]

        bracket_yu = a * gp(y, phi[u]) - k * mj[y][u]
        bracket_yv = a * gp(y, phi[v]) - k * mj[y][v]
        bracket_xu = a * gp(x, phi[u]) - k * mj[x][u]
        bracket_xv = a * gp(x, phi[v]) - k * mj[x][v]
        add(a * (g[v][w] * bracket_yu - g[u][w] * bracket_yv), phi[x])
        add(-a * (g[v][w] * bracket_xu - g[u][w] * bracket_xv), phi[y])

        coef3 = a * (g[u][w] * g[v][y] - g[v][w] * g[u][y])
        vec3 = [k * unit_vector(m, x)[q] - a * proj[x][q] for q in range(m)]
        add(coef3, vec3)
        coef4 = a * (g[u][w] * g[v][x] - g[v][w] * g[u][x])
        vec4 = [k * unit_vector(m, y)[q] - a * proj[y][q] for q in range(m)]
        add(-coef4, vec4)

        bracket_wx = a * gp(w, phi[x]) - k * mj[w][x]
        bracket_wy = a * gp(w, phi[y]) - k * mj[w][y]
        bracket_ux = a * gp(u, phi[x]) - k * mj[u][x]
        bracket_uy = a * gp(u, phi[y]) - k * mj[u][y]
        bracket_vx = a * gp(v, phi[x]) - k * mj[v][x]
        bracket_vy = a * gp(v, phi[y]) - k * mj[v][y]
        add(
            a
            * (
                g[y][u] * bracket_wx
                - g[x][u] * bracket_wy
                + g[y][w] * bracket_ux
                - g[x][w] * bracket_uy
            ),
            phi[v],
        )
        add(
            -a
            * (
                g[y][v] * bracket_wx
                - g[x][v] * bracket_wy
                + g[y][w] * bracket_vx
                - g[x][w] * bracket_vy
            ),
            phi[u],
        )
        return tuple(out)

    return value


def derivation_action_direct(r13, x, y, u, v, w):
    """(R(X,Y).R)(U,V,W) straight from the definition on a curvature table."""
    m = r13.dims[0]
    t = r13.nested()
    out = [F(0)] * m
    inner = t[u][v][w]
    for kk in range(m):
        if inner[kk] != 0:
            for q in range(m):
                out[q] += inner[kk] * t[x][y][kk][q]
    inner = t[x][y][w]
    for kk in range(m):
        if inner[kk] != 0:
            for q in range(m):
                out[q] -= inner[kk] * t[u][v][kk][q]
    inner = t[x][y][u]
    for kk in range(m):
        if inner[kk] != 0:
            for q in range(m):
                out[q] -= inner[kk] * t[kk][v][w][q]
    inner = t[x][y][v]
    for kk in range(m):
        if inner[kk] != 0:
            for q in range(m):
                out[q] -= inner[kk] * t[u][kk][w][q]
    return tuple(out)


# ---------------------------------------------------------------------------
# randomized instances


def random_unimodular(rng: random.Random, n: int):
    """Product of integer shears and a signed permutation: integer matrix
    with determinant +-1, so its inverse is integral and coordinates stay
    small."""
    m = [[F(1 if i == j else 0) for j in range(n)] for i in range(n)]

    def shear(i, j, u):
        for c in range(n):
            m[i][c] += u * m[j][c]

    for _ in range(4):
        i, j = rng.sample(range(n), 2)
        shear(i, j, F(rng.choice([-2, -1, 1, 2])))
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice([1, -1]) for _ in range(n)]
    m = [[signs[r] * m[perm[r]][c] for c in range(n)] for r in range(n)]
    return tuple(tuple(row) for row in m)


def conjugate_instance(spec: LieAlgebraSpec, ns: NordenStructure, s, vectors):
    """Express the same geometry in the basis whose columns are s: returns a
    new (spec, norden) pair plus the given ambient vectors rewritten in the
    new coordinates."""
    n = spec.dim
    s_inv = mat_inverse(s)
    c = spec.brackets.nested()

    def new_bracket(i, j, r):
        total = F(0)
        for mm in range(n):
            if s[mm][i] == 0:
                continue
            for p in range(n):
                if s[p][j] == 0:
                    continue
                f = s[mm][i] * s[p][j]
                row = c[mm][p]
                for q in range(n):
                    if row[q] != 0:
                        total += f * row[q] * s_inv[r][q]
        return total

    brackets = DenseTensor.from_function((n, n, n), lambda i, j, r: new_bracket(i, j, r))
    new_spec = LieAlgebraSpec(n, spec.basis_labels, brackets)
    g_new = mat_mul(mat_mul(transpose(s), ns.g), s)
    j_new = mat_mul(mat_mul(s_inv, ns.j), s)
    new_ns = norden_structure(g_new, j_new)
    new_vectors = tuple(
        tuple(sum(s_inv[r][q] * v[q] for q in range(n)) for r in range(n)) for v in vectors
    )
    return new_spec, new_ns, new_vectors


def scale_brackets(spec: LieAlgebraSpec, lam: Fraction) -> LieAlgebraSpec:
    """Scale the bracket by a nonzero rational; Jacobi and antisymmetry are
    degree-homogeneous, so validity is preserved while the curvature scales
    by lam^2."""
    return LieAlgebraSpec(spec.dim, spec.basis_labels, spec.brackets.scale(lam))


def random_norden_pair(rng: random.Random, half: int):
    """Random valid Norden structure on dimension 2*half: J conjugated from
    the block form, metric anti-symmetrized through J and retried until
    nondegenerate."""
    n = 2 * half
    j0 = [[F(0)] * n for _ in range(n)]
    for i in range(half):
        j0[half + i][i] = F(1)
        j0[i][half + i] = F(-1)
    while True:
        s = random_unimodular(rng, n)
        s_inv = mat_inverse(s)
        j = mat_mul(mat_mul(s, j0), s_inv)
        m = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        sym = [[(m[i][k] + m[k][i]) / 2 for k in range(n)] for i in range(n)]
        jt = transpose(j)
        jmj = mat_mul(mat_mul(jt, sym), j)
        g = tuple(tuple(sym[i][k] - jmj[i][k] for k in range(n)) for i in range(n))
        from nordenlight.exact import mat_rank

        if mat_rank(g) == n:
            return g, j


def basis_span(dim: int, indices_1based):
    return tuple(unit_vector(dim, i - 1) for i in indices_1based)


class HyperRun:
    """Products of one hypersurface run: classification, frame (with the
    gauge factor filled in), second-fundamental data (with rho when
    umbilical), and the umbilical outcome."""

    def __init__(self, hs, cls, frame=None, rt=None, sf=None, umb=None):
        self.hs = hs
        self.cls = cls
        self.frame = frame
        self.rt = rt
        self.sf = sf
        self.umb = umb


def run_hypersurface(amb, span, inducing, xi_hint=None) -> HyperRun:
    from dataclasses import replace

    from nordenlight.hypersurface import (
        HypersurfaceSpec,
        construct_screen,
        construct_transversal,
        gauss_weingarten,
        induce_and_classify,
        radical_transversal_check,
        umbilical_test,
        validate_span,
    )

    hs = HypersurfaceSpec(tuple(span), inducing, xi_hint)
    validate_span(hs, amb)
    cls = induce_and_classify(hs, amb)
    if cls.kind != "lightlike":
        return HyperRun(hs, cls)
    screen = construct_screen(hs, cls)
    frame = construct_transversal(hs, amb, cls, screen)
    rt = radical_transversal_check(frame, amb)
    if not rt.is_radical_transversal:
        return HyperRun(hs, cls, frame, rt)
    frame = replace(frame, b=rt.b)
    sf = gauss_weingarten(frame, amb)
    umb = umbilical_test(sf, frame, amb)
    if umb.umbilical:
        sf = replace(sf, rho=umb.rho)
    return HyperRun(hs, cls, frame, rt, sf, umb)


def random_rational(rng: random.Random, lo=-4, hi=4, dens=(1, 2, 3)):
    num = rng.randint(lo, hi)
    return F(num, rng.choice(dens))


def nonzero_rational(rng: random.Random, lo=-4, hi=4, dens=(1, 2, 3)):
    while True:
        q = random_rational(rng, lo, hi, dens)
        if q != 0:
            return q
