"""Finite-dimensional modules over the Brauer line algebra as quiver
representations, with radicals, socles, projective covers, syzygies,
homomorphism spaces and isomorphism testing by exact linear algebra.

This module is the brute-force oracle of the package: everything the
symbolic layers compute in closed form is cross-checked here by solving
honest linear systems.

Conventions.  Vertices are 1..N.  For N >= 2 the algebra is generated by
arrows a_i : i -> i+1 and b_i : i+1 -> i (1 <= i <= N-1) subject to

    a_{i+1} a_i = 0,   b_i b_{i+1} = 0,
    a_{i-1} b_{i-1} = b_i a_i   at interior vertices,
    paths of length three act as zero.

For N = 1 the algebra is F[x]/(x^2) and the representation carries the
single nilpotent loop x.  This presentation is reconstructed from the
layer structure of the projectives (head S_i, heart S_{i-1} + S_{i+1},
socle S_i); it is the unique one compatible with that structure.

Left modules throughout: P_i is the span of paths out of vertex i.
"""

from __future__ import annotations

from . import linalg


class QuiverRep:
    """A representation: one vector space per vertex, one matrix per arrow.

    ``dims[v-1]`` is the dimension at vertex v; ``arrows`` maps arrow keys
    ("a", i), ("b", i) (or ("x", 1) when N = 1) to matrices of shape
    (dim target) x (dim source).
    """

    def __init__(self, n, field, dims, arrows):
        self.n = n
        self.field = field
        self.dims = tuple(dims)
        self.arrows = dict(arrows)

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def arrow(self, key):
        return self.arrows[key]

    def __repr__(self):
        return f"QuiverRep(n={self.n}, dims={self.dims})"


def arrow_keys(n: int):
    if n == 1:
        return [("x", 1)]
    keys = [("a", i) for i in range(1, n)]
    keys += [("b", i) for i in range(1, n)]
    return keys


def arrow_endpoints(n: int, key):
    kind, i = key
    if kind == "a":
        return i, i + 1
    if kind == "b":
        return i + 1, i
    return 1, 1  # the loop at the unique vertex when N = 1


def make_rep(n, field, dims, arrows=None):
    """Build a representation, filling unspecified arrows with zero maps."""
    dims = tuple(dims)
    full = {}
    arrows = arrows or {}
    for key in arrow_keys(n):
        s, t = arrow_endpoints(n, key)
        M = arrows.get(key)
        if M is None:
            M = linalg.zeros(field, dims[t - 1], dims[s - 1])
        if len(M) != dims[t - 1] or (M and len(M[0]) != dims[s - 1]):
            raise ValueError(f"arrow {key} has wrong shape")
        full[key] = M
    return QuiverRep(n, field, dims, full)


def zero_rep(n, field):
    return make_rep(n, field, [0] * n)


def simple_rep(n, field, i):
    dims = [0] * n
    dims[i - 1] = 1
    return make_rep(n, field, dims)


def projective_rep(n, field, i):
    """The indecomposable projective P_i.

    Basis per vertex: [head, socle] at vertex i, one middle vector at each
    of i-1 and i+1 (when present).  All structure constants are +1; sign
    conventions live entirely in the morphism layer.
    """
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} out of range 1..{n}")
    field_one = field.one
    if n == 1:
        loop = [[field.zero, field.zero], [field_one, field.zero]]
        return make_rep(1, field, [2], {("x", 1): loop})
    dims = [0] * n
    dims[i - 1] = 2
    if i >= 2:
        dims[i - 2] = 1
    if i <= n - 1:
        dims[i] = 1
    arrows = {}
    if i >= 2:
        # b_{i-1}: head -> middle at i-1; a_{i-1}: middle -> socle
        arrows[("b", i - 1)] = [[field_one, field.zero]]
        arrows[("a", i - 1)] = [[field.zero], [field_one]]
    if i <= n - 1:
        # a_i: head -> middle at i+1; b_i: middle -> socle
        arrows[("a", i)] = [[field_one, field.zero]]
        arrows[("b", i)] = [[field.zero], [field_one]]
    return make_rep(n, field, dims, arrows)


def check_relations(rep: QuiverRep):
    """List of violated relations (empty for a genuine module)."""
    F = rep.field
    n = rep.n
    bad = []
    if n == 1:
        x = rep.arrow(("x", 1))
        if not linalg.is_zero_mat(F, linalg.mat_mul(F, x, x)):
            bad.append("x^2 != 0")
        return bad
    a = {i: rep.arrow(("a", i)) for i in range(1, n)}
    b = {i: rep.arrow(("b", i)) for i in range(1, n)}
    d = rep.dim
    for i in range(1, n - 1):
        if not linalg.is_zero_mat(F, linalg.mat_mul(F, a[i + 1], a[i], out_cols=d(i))):
            bad.append(f"a_{i+1} a_{i} != 0")
        if not linalg.is_zero_mat(F, linalg.mat_mul(F, b[i], b[i + 1], out_cols=d(i + 2))):
            bad.append(f"b_{i} b_{i+1} != 0")
    for v in range(2, n):
        left = linalg.mat_mul(F, a[v - 1], b[v - 1], out_cols=d(v))
        right = linalg.mat_mul(F, b[v], a[v], out_cols=d(v))
        if not linalg.mat_eq(F, left, right):
            bad.append(f"loops at vertex {v} disagree")
    for i in range(1, n):
        aba = linalg.mat_mul(F, a[i], linalg.mat_mul(F, b[i], a[i], out_cols=d(i)), out_cols=d(i))
        bab = linalg.mat_mul(F, b[i], linalg.mat_mul(F, a[i], b[i], out_cols=d(i + 1)), out_cols=d(i + 1))
        if not linalg.is_zero_mat(F, aba):
            bad.append(f"a_{i} b_{i} a_{i} != 0")
        if not linalg.is_zero_mat(F, bab):
            bad.append(f"b_{i} a_{i} b_{i} != 0")
    return bad


def _require_valid(rep):
    bad = check_relations(rep)
    if bad:
        raise ValueError("input is not a module: " + "; ".join(bad))


class RepMorphism:
    """A homomorphism of representations: one block per vertex."""

    def __init__(self, source: QuiverRep, target: QuiverRep, blocks):
        self.source = source
        self.target = target
        self.blocks = {v: blocks[v] for v in range(1, source.n + 1)}

    def block(self, v: int):
        return self.blocks[v]

    def is_intertwiner(self) -> bool:
        F = self.source.field
        for key in arrow_keys(self.source.n):
            s, t = arrow_endpoints(self.source.n, key)
            cols = self.source.dim(s)
            lhs = linalg.mat_mul(F, self.blocks[t], self.source.arrow(key), out_cols=cols)
            rhs = linalg.mat_mul(F, self.target.arrow(key), self.blocks[s], out_cols=cols)
            if not linalg.mat_eq(F, lhs, rhs):
                return False
        return True

    def is_zero(self) -> bool:
        F = self.source.field
        return all(linalg.is_zero_mat(F, B) for B in self.blocks.values())

    def compose(self, other: "RepMorphism") -> "RepMorphism":
        """self after other."""
        F = self.source.field
        blocks = {
            v: linalg.mat_mul(
                F, self.blocks[v], other.blocks[v], out_cols=other.source.dim(v)
            )
            for v in range(1, self.source.n + 1)
        }
        return RepMorphism(other.source, self.target, blocks)

    def add(self, other: "RepMorphism") -> "RepMorphism":
        F = self.source.field
        blocks = {
            v: linalg.mat_add(F, self.blocks[v], other.blocks[v])
            for v in range(1, self.source.n + 1)
        }
        return RepMorphism(self.source, self.target, blocks)

    def scale(self, c) -> "RepMorphism":
        F = self.source.field
        blocks = {v: linalg.mat_scale(F, c, B) for v, B in self.blocks.items()}
        return RepMorphism(self.source, self.target, blocks)

    def equals(self, other: "RepMorphism") -> bool:
        F = self.source.field
        return all(
            linalg.mat_eq(F, self.blocks[v], other.blocks[v])
            for v in range(1, self.source.n + 1)
        )

    def is_invertible(self) -> bool:
        F = self.source.field
        for v in range(1, self.source.n + 1):
            d = self.source.dim(v)
            if d != self.target.dim(v):
                return False
            if d and linalg.rank(F, self.blocks[v]) != d:
                return False
        return True


def identity_morphism(rep: QuiverRep) -> RepMorphism:
    blocks = {v: linalg.identity_matrix(rep.field, rep.dim(v)) for v in range(1, rep.n + 1)}
    return RepMorphism(rep, rep, blocks)


def zero_morphism(source: QuiverRep, target: QuiverRep) -> RepMorphism:
    blocks = {
        v: linalg.zeros(source.field, target.dim(v), source.dim(v))
        for v in range(1, source.n + 1)
    }
    return RepMorphism(source, target, blocks)


def direct_sum(reps):
    """Direct sum with per-summand embeddings and projections."""
    if not reps:
        raise ValueError("empty direct sum; use zero_rep")
    n, F = reps[0].n, reps[0].field
    dims = [sum(r.dim(v) for r in reps) for v in range(1, n + 1)]
    offsets = []
    run = [0] * n
    for r in reps:
        offsets.append(tuple(run))
        run = [run[v] + r.dim(v + 1) for v in range(n)]
    arrows = {}
    for key in arrow_keys(n):
        s, t = arrow_endpoints(n, key)
        M = linalg.zeros(F, dims[t - 1], dims[s - 1])
        for r, off in zip(reps, offsets):
            block = r.arrow(key)
            for ri, row in enumerate(block):
                for ci, val in enumerate(row):
                    M[off[t - 1] + ri][off[s - 1] + ci] = val
        arrows[key] = M
    total = make_rep(n, F, dims, arrows)
    embeddings = []
    projections = []
    for r, off in zip(reps, offsets):
        emb = {}
        proj = {}
        for v in range(1, n + 1):
            E = linalg.zeros(F, total.dim(v), r.dim(v))
            P = linalg.zeros(F, r.dim(v), total.dim(v))
            for j in range(r.dim(v)):
                E[off[v - 1] + j][j] = F.one
                P[j][off[v - 1] + j] = F.one
            emb[v] = E
            proj[v] = P
        embeddings.append(RepMorphism(r, total, emb))
        projections.append(RepMorphism(total, r, proj))
    return total, embeddings, projections


def _submodule(rep: QuiverRep, spanning):
    """Submodule spanned (per vertex) by the given row vectors.

    The span must be arrow-stable.  Returns (sub, inclusion).
    """
    F = rep.field
    bases = {v: linalg.row_span_basis(F, spanning.get(v, [])) for v in range(1, rep.n + 1)}
    dims = [len(bases[v]) for v in range(1, rep.n + 1)]
    arrows = {}
    for key in arrow_keys(rep.n):
        s, t = arrow_endpoints(rep.n, key)
        M = linalg.zeros(F, dims[t - 1], dims[s - 1])
        if dims[s - 1] and rep.dim(t):
            big = rep.arrow(key)
            tgt_rows = bases[t]
            for ci, vec in enumerate(bases[s]):
                img = [
                    sum_products(F, big_row, vec) for big_row in big
                ]
                coords = _coords_in_basis(F, tgt_rows, img)
                if coords is None:
                    raise ValueError("span is not arrow-stable")
                for ri, cval in enumerate(coords):
                    M[ri][ci] = cval
        arrows[key] = M
    sub = make_rep(rep.n, F, dims, arrows)
    blocks = {}
    for v in range(1, rep.n + 1):
        B = linalg.zeros(F, rep.dim(v), dims[v - 1])
        for ci, vec in enumerate(bases[v]):
            for ri in range(rep.dim(v)):
                B[ri][ci] = vec[ri]
        blocks[v] = B
    return sub, RepMorphism(sub, rep, blocks)


def sum_products(field, row, vec):
    acc = field.zero
    for a, b in zip(row, vec):
        if not field.is_zero(a) and not field.is_zero(b):
            acc = field.add(acc, field.mul(a, b))
    return acc


def _coords_in_basis(field, basis_rows, vec):
    if not basis_rows:
        return [] if all(field.is_zero(x) for x in vec) else None
    A = transposed_cols(field, basis_rows)
    return linalg.solve(field, A, list(vec))


def transposed_cols(field, rows):
    m = len(rows[0])
    return [[rows[j][i] for j in range(len(rows))] for i in range(m)]


def radical(rep: QuiverRep) -> QuiverRep:
    """rad M = sum of the images of all arrows (the arrow ideal acting)."""
    _require_valid(rep)
    return radical_with_inclusion(rep)[0]


def radical_with_inclusion(rep: QuiverRep):
    F = rep.field
    spanning = {v: [] for v in range(1, rep.n + 1)}
    for key in arrow_keys(rep.n):
        s, t = arrow_endpoints(rep.n, key)
        M = rep.arrow(key)
        for ci in range(rep.dim(s)):
            col = [M[ri][ci] for ri in range(rep.dim(t))]
            if any(not F.is_zero(x) for x in col):
                spanning[t].append(col)
    return _submodule(rep, spanning)


def head(rep: QuiverRep) -> dict:
    """Multiplicities of the simples in M / rad M, as {vertex: count}."""
    rad = radical(rep)
    out = {}
    for v in range(1, rep.n + 1):
        m = rep.dim(v) - rad.dim(v)
        if m:
            out[v] = m
    return out


def socle(rep: QuiverRep) -> dict:
    """Multiplicities of the simples in the joint kernel of all arrows."""
    F = rep.field
    out = {}
    for v in range(1, rep.n + 1):
        if rep.dim(v) == 0:
            continue
        stacked = []
        for key in arrow_keys(rep.n):
            s, t = arrow_endpoints(rep.n, key)
            if s == v and rep.dim(t):
                stacked.extend(rep.arrow(key))
        if stacked:
            m = rep.dim(v) - linalg.rank(F, stacked)
        else:
            m = rep.dim(v)
        if m:
            out[v] = m
    return out


def loewy_layers(rep: QuiverRep):
    """Heads of the radical filtration, top layer first."""
    layers = []
    cur = rep
    while cur.total_dim:
        layers.append(head(cur))
        cur = radical(cur)
    return layers


def hom_space(M: QuiverRep, N: QuiverRep):
    """A basis of Hom(M, N) as a list of RepMorphisms.

    Solves the intertwiner equations T_t M_alpha = N_alpha T_s exactly.
    """
    F = M.field
    n = M.n
    offsets = {}
    total = 0
    for v in range(1, n + 1):
        offsets[v] = total
        total += N.dim(v) * M.dim(v)
    if total == 0:
        return []

    def var(v, r, c):
        return offsets[v] + r * M.dim(v) + c

    rows = []
    for key in arrow_keys(n):
        s, t = arrow_endpoints(n, key)
        Ma = M.arrow(key)
        Na = N.arrow(key)
        for r in range(N.dim(t)):
            for c in range(M.dim(s)):
                coeffs = {}
                for m in range(M.dim(t)):
                    val = Ma[m][c]
                    if not F.is_zero(val):
                        idx = var(t, r, m)
                        coeffs[idx] = F.add(coeffs.get(idx, F.zero), val)
                for m in range(N.dim(s)):
                    val = Na[r][m]
                    if not F.is_zero(val):
                        idx = var(s, m, c)
                        coeffs[idx] = F.sub(coeffs.get(idx, F.zero), val)
                if coeffs:
                    row = [F.zero] * total
                    for idx, val in coeffs.items():
                        row[idx] = val
                    rows.append(row)
    basis_vecs = linalg.nullspace(F, rows, ncols=total)
    result = []
    for vec in basis_vecs:
        blocks = {}
        for v in range(1, n + 1):
            B = linalg.zeros(F, N.dim(v), M.dim(v))
            for r in range(N.dim(v)):
                for c in range(M.dim(v)):
                    B[r][c] = vec[var(v, r, c)]
            blocks[v] = B
        result.append(RepMorphism(M, N, blocks))
    return result


class CoverData:
    """A projective cover: the cover, the surjection, and its kernel."""

    def __init__(self, cover, surjection, kernel, inclusion, cover_vertices):
        self.cover = cover
        self.surjection = surjection
        self.kernel = kernel
        self.inclusion = inclusion
        self.cover_vertices = cover_vertices  # projective indices, with multiplicity


def projective_cover(rep: QuiverRep) -> CoverData:
    """Cover M by one P_v per head constituent; kernel is the syzygy.

    The head section is deterministic: complements of rad M are spanned by
    the non-pivot standard coordinates of the radical's echelon basis,
    taken in vertex order.
    """
    _require_valid(rep)
    F = rep.field
    n = rep.n
    rad_rows = {v: [] for v in range(1, n + 1)}
    rad_sub, rad_inc = radical_with_inclusion(rep)
    for v in range(1, n + 1):
        B = rad_inc.block(v)
        for ci in range(rad_sub.dim(v)):
            rad_rows[v].append([B[ri][ci] for ri in range(rep.dim(v))])

    generators = []  # (vertex, head representative vector in M_v)
    for v in range(1, n + 1):
        if rep.dim(v) == 0:
            continue
        R, pivots = linalg.rref(F, rad_rows[v]) if rad_rows[v] else ([], [])
        pivset = set(pivots)
        for c in range(rep.dim(v)):
            if c not in pivset:
                e = [F.one if i == c else F.zero for i in range(rep.dim(v))]
                generators.append((v, e))

    if not generators:
        z = zero_rep(n, F)
        return CoverData(z, zero_morphism(z, rep), z, zero_morphism(z, z), [])

    projs = [projective_rep(n, F, v) for v, _ in generators]
    cover, embeds, _ = direct_sum(projs) if len(projs) > 1 else (projs[0], None, None)

    def generator_images(v, gvec):
        """Images in M of the basis of P_v under e_head -> gvec."""
        P = projective_rep(n, F, v)
        imgs = {w: [[F.zero] * P.dim(w) for _ in range(rep.dim(w))] for w in range(1, n + 1)}

        def set_col(w, col_idx, vec):
            for ri in range(rep.dim(w)):
                imgs[w][ri][col_idx] = vec[ri]

        def apply_arrow(key, vec):
            M_ = rep.arrow(key)
            return [sum_products(F, M_[ri], vec) for ri in range(len(M_))]

        set_col(v, 0, gvec)  # head basis vector
        if n == 1:
            set_col(1, 1, apply_arrow(("x", 1), gvec))
            return imgs
        if v <= n - 1:
            u_img = apply_arrow(("a", v), gvec)
            set_col(v + 1, 0, u_img)
            set_col(v, 1, apply_arrow(("b", v), u_img))
        if v >= 2:
            w_img = apply_arrow(("b", v - 1), gvec)
            set_col(v - 1, 0, w_img)
            if v > n - 1:
                set_col(v, 1, apply_arrow(("a", v - 1), w_img))
        return imgs

    blocks = {w: [[] for _ in range(rep.dim(w))] for w in range(1, n + 1)}
    for v, gvec in generators:
        imgs = generator_images(v, gvec)
        for w in range(1, n + 1):
            for ri in range(rep.dim(w)):
                blocks[w][ri].extend(imgs[w][ri])
    surj = RepMorphism(cover, rep, blocks)

    # kernel, per vertex, with induced arrows
    spanning = {}
    for v in range(1, n + 1):
        B = blocks[v]
        null = linalg.nullspace(F, B if rep.dim(v) else [], ncols=cover.dim(v))
        if rep.dim(v) == 0:
            null = [
                [F.one if i == j else F.zero for i in range(cover.dim(v))]
                for j in range(cover.dim(v))
            ]
        spanning[v] = null
    kernel, inclusion = _submodule(cover, spanning)
    return CoverData(cover, surj, kernel, inclusion, [v for v, _ in generators])


def syzygy(rep: QuiverRep) -> QuiverRep:
    """Kernel of a projective cover."""
    return projective_cover(rep).kernel


def syzygy_power(rep: QuiverRep, k: int) -> QuiverRep:
    cur = rep
    for _ in range(k):
        cur = syzygy(cur)
    return cur


def image_subrep(phi: RepMorphism):
    F = phi.source.field
    spanning = {}
    for v in range(1, phi.source.n + 1):
        B = phi.block(v)
        cols = []
        for ci in range(phi.source.dim(v)):
            col = [B[ri][ci] for ri in range(phi.target.dim(v))]
            if any(not F.is_zero(x) for x in col):
                cols.append(col)
        spanning[v] = cols
    return _submodule(phi.target, spanning)


def kernel_subrep(phi: RepMorphism):
    F = phi.source.field
    spanning = {}
    for v in range(1, phi.source.n + 1):
        B = phi.block(v)
        if phi.target.dim(v) == 0:
            vecs = [
                [F.one if i == j else F.zero for i in range(phi.source.dim(v))]
                for j in range(phi.source.dim(v))
            ]
        else:
            vecs = linalg.nullspace(F, B, ncols=phi.source.dim(v))
        spanning[v] = vecs
    return _submodule(phi.source, spanning)


def _invariant_fingerprint(rep: QuiverRep):
    return (rep.dims, tuple(sorted(d.items()) for d in loewy_layers(rep)),
            tuple(sorted(socle(rep).items())))


def iso_witness(M: QuiverRep, N: QuiverRep, seed: int = 0):
    """An invertible morphism M -> N, or None.

    Searches the hom space for an invertible element: exhaustively over
    small finite fields when the space is small, otherwise by seeded
    deterministic sampling (64 attempts).
    """
    if M.dims != N.dims:
        return None
    if M.total_dim == 0:
        return identity_morphism(M)
    basis = hom_space(M, N)
    if not basis:
        return None
    F = M.field
    d = len(basis)
    char = F.characteristic

    def combo(coeffs):
        phi = basis[0].scale(coeffs[0])
        for c, b in zip(coeffs[1:], basis[1:]):
            phi = phi.add(b.scale(c))
        return phi

    if char and char ** d <= 4096:
        from itertools import product

        for coeffs in product(range(char), repeat=d):
            if all(c == 0 for c in coeffs):
                continue
            phi = combo([F.from_int(c) for c in coeffs])
            if phi.is_invertible():
                return phi
        return None

    import random

    rng = random.Random(seed)
    span = char if char else 7
    for _ in range(64):
        coeffs = [F.from_int(rng.randrange(-span, span + 1)) for _ in range(d)]
        phi = combo(coeffs)
        if phi.is_invertible():
            return phi
    return None


def is_isomorphic(M: QuiverRep, N: QuiverRep, seed: int = 0) -> bool:
    if M.dims != N.dims:
        return False
    if M.total_dim == 0:
        return True
    if iso_witness(M, N, seed=seed) is not None:
        return True
    if _invariant_fingerprint(M) != _invariant_fingerprint(N):
        return False
    raise RuntimeError(
        "isomorphism test inconclusive: no invertible hom found but all "
        "filtration invariants agree"
    )
