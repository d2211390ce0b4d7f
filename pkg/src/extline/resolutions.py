"""Closed-form minimal projective resolutions of the simple modules.

The resolution R_i of S_i has k-th term the canonical projective sum of
the interval (i-k, i+k) and differentials following a single uniform
pattern between canonical terms:

  * between distinct terms, the matrix has a step map F(s) wherever the
    target contains s+1 and a co-step FStar(t) wherever it contains s-1,
    all with coefficient +1 (the bidiagonal band);
  * at the plateau degrees, where two consecutive terms are the same
    single projective P_j, the differential is the signed loop

        (-1)^j Loop(j)        for j <= N-1,
        (-1)^(N-1) Loop(N)    for j = N,

    i.e. the composite of a step and a co-step through a neighbour.

Everything is 2N-periodic: terms from degree 0 on, differentials from
degree 1 on.  The verifier certifies d o d = 0, minimality (entries in
the radical), exactness against the representation oracle, and that the
image of d_k is the expected string module at every degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg, reps, strings
from .homs import HomElement, LineAlgebra
from .strings import PSum


@dataclass
class HomMatrix:
    """Matrix of morphisms between sums of projectives.

    entries[r][c] : P_{source.indices[c]} -> P_{target.indices[r]}.
    """

    source: PSum
    target: PSum
    entries: list

    def entry(self, r: int, c: int) -> HomElement:
        return self.entries[r][c]

    def __repr__(self):
        return f"HomMatrix({self.source} -> {self.target})"


def zero_hom_matrix(alg: LineAlgebra, source: PSum, target: PSum) -> HomMatrix:
    entries = [
        [alg.zero_hom(s, t) for s in source.indices] for t in target.indices
    ]
    return HomMatrix(source, target, entries)


def hom_matrix_compose(alg: LineAlgebra, A: HomMatrix, B: HomMatrix) -> HomMatrix:
    if B.target.indices != A.source.indices:
        raise ValueError("shape mismatch composing morphism matrices")
    out = zero_hom_matrix(alg, B.source, A.target)
    for r in range(len(A.target.indices)):
        for c in range(len(B.source.indices)):
            acc = out.entries[r][c]
            for m in range(len(A.source.indices)):
                term = alg.compose(A.entries[r][m], B.entries[m][c])
                acc = alg.add(acc, term)
            out.entries[r][c] = acc
    return out


def hom_matrix_add(alg: LineAlgebra, A: HomMatrix, B: HomMatrix) -> HomMatrix:
    out = zero_hom_matrix(alg, A.source, A.target)
    for r in range(len(A.target.indices)):
        for c in range(len(A.source.indices)):
            out.entries[r][c] = alg.add(A.entries[r][c], B.entries[r][c])
    return out


def hom_matrix_scale(alg: LineAlgebra, c, A: HomMatrix) -> HomMatrix:
    out = zero_hom_matrix(alg, A.source, A.target)
    for r in range(len(A.target.indices)):
        for cidx in range(len(A.source.indices)):
            out.entries[r][cidx] = alg.scale(c, A.entries[r][cidx])
    return out


def hom_matrix_is_zero(alg: LineAlgebra, A: HomMatrix) -> bool:
    return all(e.is_zero(alg.field) for row in A.entries for e in row)


def hom_matrix_equal(alg: LineAlgebra, A: HomMatrix, B: HomMatrix) -> bool:
    if A.source.indices != B.source.indices or A.target.indices != B.target.indices:
        return False
    return all(
        alg.hom_equal(A.entries[r][c], B.entries[r][c])
        for r in range(len(A.target.indices))
        for c in range(len(A.source.indices))
    )


def identity_hom_matrix(alg: LineAlgebra, psum: PSum) -> HomMatrix:
    out = zero_hom_matrix(alg, psum, psum)
    for r, idx in enumerate(psum.indices):
        out.entries[r][r] = alg.identity_hom(idx)
    return out


def common_factor_matrix(alg: LineAlgebra, source: PSum, target: PSum) -> HomMatrix:
    """Identity on the summands the two canonical sums share, zero elsewhere."""
    out = zero_hom_matrix(alg, source, target)
    for r, t in enumerate(target.indices):
        for c, s in enumerate(source.indices):
            if s == t:
                out.entries[r][c] = alg.identity_hom(s)
    return out


def plateau_loop(alg: LineAlgebra, j: int) -> HomElement:
    sign = alg.loop_sign(j)  # (-1)^j, with the boundary convention at j = N
    return alg.scale(alg.field.from_int(sign), alg.loop_hom(j))


def closed_form_differential(alg: LineAlgebra, i: int, j: int) -> HomMatrix:
    """The differential with source the canonical sum of (i, j) and target
    that of (i+1, j-1), given by the uniform band/plateau pattern."""
    n = alg.n
    src = strings.normalize_p(n, i, j)
    tgt = strings.normalize_p(n, i + 1, j - 1)
    if src.indices == tgt.indices and len(src.indices) == 1:
        out = zero_hom_matrix(alg, src, tgt)
        out.entries[0][0] = plateau_loop(alg, src.indices[0])
        return out
    out = zero_hom_matrix(alg, src, tgt)
    for r, t in enumerate(tgt.indices):
        for c, s in enumerate(src.indices):
            if t == s + 1:
                out.entries[r][c] = alg.f_hom(s)
            elif t == s - 1:
                out.entries[r][c] = alg.fstar_hom(t)
    return out


@dataclass
class PeriodicComplex:
    """A non-negatively graded complex of projective sums, eventually
    2N-periodic; terms repeat from degree 0, differentials from degree 1."""

    alg: LineAlgebra
    base_vertex: int
    depth: int
    terms: list  # PSum, degrees 0..depth
    diffs: list  # diffs[k] : term k -> term k-1, for 1 <= k <= depth

    @property
    def period(self) -> int:
        return 2 * self.alg.n

    def term(self, k: int) -> PSum:
        if k < 0:
            raise IndexError("negative degree")
        while k > self.depth:
            k -= self.period
        return self.terms[k]

    def diff(self, k: int) -> HomMatrix:
        if k < 1:
            raise IndexError("differentials start in degree 1")
        while k > self.depth:
            k -= self.period
        return self.diffs[k - 1]


def build_resolution(alg: LineAlgebra, i: int, depth: int | None = None) -> PeriodicComplex:
    """Minimal projective resolution of S_i to the given depth (>= 2N)."""
    alg._check_vertex(i)
    n = alg.n
    if depth is None:
        depth = 4 * n
    depth = max(depth, 2 * n + 2)
    key = (i, depth)
    cached = alg._resolutions.get(key)
    if cached is not None:
        return cached
    terms = [strings.normalize_p(n, i - k, i + k) for k in range(depth + 1)]
    diffs = [closed_form_differential(alg, i - k, i + k) for k in range(1, depth + 1)]
    cx = PeriodicComplex(alg, i, depth, terms, diffs)
    alg._resolutions[key] = cx
    return cx


# ----------------------------------------------------------- realization


def psum_rep(alg: LineAlgebra, psum: PSum):
    """Realize a sum of projectives; returns (rep, offsets per summand)."""
    key = psum.indices
    cached = alg._psum_reps.get(key)
    if cached is not None:
        return cached
    n = alg.n
    summands = [alg.projective(j) for j in psum.indices]
    if not summands:
        rep = reps.zero_rep(n, alg.field)
        offsets = []
    elif len(summands) == 1:
        rep = summands[0]
        offsets = [tuple([0] * n)]
    else:
        rep, embeds, _ = reps.direct_sum(summands)
        offsets = []
        run = [0] * n
        for s in summands:
            offsets.append(tuple(run))
            run = [run[v] + s.dim(v + 1) for v in range(n)]
    alg._psum_reps[key] = (rep, offsets)
    return rep, offsets


def realize_hom_matrix(alg: LineAlgebra, A: HomMatrix) -> reps.RepMorphism:
    src_rep, src_off = psum_rep(alg, A.source)
    tgt_rep, tgt_off = psum_rep(alg, A.target)
    F = alg.field
    phi = reps.zero_morphism(src_rep, tgt_rep)
    for r, t in enumerate(A.target.indices):
        for c, s in enumerate(A.source.indices):
            entry = A.entries[r][c]
            if entry.is_zero(F):
                continue
            small = alg.realize(entry)
            for v in range(1, alg.n + 1):
                B = small.block(v)
                ro = tgt_off[r][v - 1]
                co = src_off[c][v - 1]
                for rr in range(len(B)):
                    for cc in range(len(B[0]) if B else 0):
                        val = B[rr][cc]
                        if not F.is_zero(val):
                            phi.blocks[v][ro + rr][co + cc] = F.add(
                                phi.blocks[v][ro + rr][co + cc], val
                            )
    return phi


# ----------------------------------------------------------- verification


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class ResolutionReport:
    vertex: int
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]


def verify_resolution(cx: PeriodicComplex, i: int, oracle_depth: int | None = None) -> ResolutionReport:
    """Certify the resolution: d o d = 0, minimality, oracle exactness and
    the identification of each image with the expected string module."""
    alg = cx.alg
    F = alg.field
    n = alg.n
    checks = []
    depth = cx.depth if oracle_depth is None else min(oracle_depth, cx.depth)

    bad = []
    for k in range(2, depth + 1):
        if not hom_matrix_is_zero(alg, hom_matrix_compose(alg, cx.diff(k - 1), cx.diff(k))):
            bad.append(k)
    checks.append(
        CheckResult("d o d = 0", not bad, f"failing at degrees {bad}" if bad else "")
    )

    bad = []
    for k in range(1, depth + 1):
        for row in cx.diff(k).entries:
            for e in row:
                if any(g.kind == "id" and not F.is_zero(c) for g, c in e.coeffs.items()):
                    bad.append(k)
    checks.append(
        CheckResult("minimality", not bad, f"identity component at degrees {sorted(set(bad))}" if bad else "")
    )

    bad = []
    for k in range(0, depth + 1):
        expected = strings.normalize_p(n, i - k, i + k)
        if cx.term(k).indices != expected.indices:
            bad.append(k)
    checks.append(CheckResult("terms are canonical interval sums", not bad,
                              f"degrees {bad}" if bad else ""))

    per = []
    for k in range(0, depth + 1 - 2 * n):
        if cx.term(k).indices != cx.term(k + 2 * n).indices:
            per.append(k)
    for k in range(1, depth + 1 - 2 * n):
        if not hom_matrix_equal(alg, cx.diff(k), cx.diff(k + 2 * n)):
            per.append(k)
    checks.append(CheckResult("2N-periodicity", not per, f"degrees {per}" if per else ""))

    # oracle exactness: image of d_{k+1} equals kernel of d_k, vertex by vertex
    realized = {k: realize_hom_matrix(alg, cx.diff(k)) for k in range(1, depth + 1)}
    bad = []
    for k in range(1, depth):
        img = realized[k + 1]
        ker_of = realized[k]
        for v in range(1, n + 1):
            img_cols = _column_vectors(F, img.block(v))
            ker_rows = linalg.nullspace(
                F, ker_of.block(v) if ker_of.target.dim(v) else [],
                ncols=ker_of.source.dim(v),
            )
            if not linalg.span_equal(F, img_cols, ker_rows):
                bad.append((k, v))
    checks.append(CheckResult("exactness in positive degrees", not bad,
                              f"(degree, vertex) pairs {bad}" if bad else ""))

    # degree 0: the cokernel of d_1 is S_i, i.e. the image is rad P_i
    d1 = realized[1]
    rad_sub, rad_inc = reps.radical_with_inclusion(alg.projective(i))
    ok0 = True
    for v in range(1, n + 1):
        img_cols = _column_vectors(F, d1.block(v))
        rad_cols = _column_vectors(F, rad_inc.block(v))
        if not linalg.span_equal(F, img_cols, rad_cols):
            ok0 = False
    checks.append(CheckResult("cokernel in degree 0 is the simple", ok0))

    bad = []
    for k in range(1, depth + 1):
        img_rep, _ = reps.image_subrep(realized[k])
        expected = strings.realize_x(n, F, strings.syzygy_label_power(n, strings.simple_label(i), k))
        if not reps.is_isomorphic(img_rep, expected):
            bad.append(k)
    checks.append(CheckResult("images are the expected string modules", not bad,
                              f"degrees {bad}" if bad else ""))

    return ResolutionReport(i, checks)


def _column_vectors(field, block):
    cols = []
    nrows = len(block)
    ncols = len(block[0]) if block else 0
    for c in range(ncols):
        col = [block[r][c] for r in range(nrows)]
        if any(not field.is_zero(x) for x in col):
            cols.append(col)
    return cols


def corrupted_resolution(alg: LineAlgebra, i: int, depth: int | None = None) -> PeriodicComplex:
    """Negative control: damage one co-step entry of one differential.

    Rescaling a whole differential never disturbs d o d = 0, so the
    corruption must hit a single entry taking part in a two-term
    cancellation.  In characteristic != 2 the entry's sign is flipped; in
    characteristic 2 signs are invisible, so the entry is zeroed instead
    (which leaves one of the two cancelling composites alive).  Candidates
    are tried until d o d = 0 actually breaks; if none breaks it (the
    resolutions for N <= 2 have only 1x1 differentials), a plateau loop is
    zeroed instead, which the verifier catches as an exactness failure.
    """
    cx = build_resolution(alg, i, depth)
    F = alg.field

    def with_entry(k, r, c, new_entry):
        diffs = list(cx.diffs)
        A = diffs[k - 1]
        B = zero_hom_matrix(alg, A.source, A.target)
        for rr in range(len(A.target.indices)):
            for cc in range(len(A.source.indices)):
                B.entries[rr][cc] = A.entries[rr][cc]
        B.entries[r][c] = new_entry
        diffs[k - 1] = B
        return PeriodicComplex(alg, i, cx.depth, list(cx.terms), diffs)

    def breaks_dd(cand):
        for k in range(2, cand.depth + 1):
            if not hom_matrix_is_zero(
                alg, hom_matrix_compose(alg, cand.diff(k - 1), cand.diff(k))
            ):
                return True
        return False

    for k in range(1, cx.depth + 1):
        A = cx.diff(k)
        nonzero = sum(
            1 for row in A.entries for e in row if not e.is_zero(F)
        )
        if nonzero < 2:
            continue
        for r in range(len(A.target.indices)):
            for c in range(len(A.source.indices)):
                e = A.entries[r][c]
                if not any(g.kind == "fstar" for g in e.coeffs):
                    continue
                if F.characteristic == 2:
                    cand = with_entry(k, r, c, alg.zero_hom(e.source, e.target))
                else:
                    cand = with_entry(k, r, c, alg.scale(F.from_int(-1), e))
                if breaks_dd(cand):
                    return cand

    # fallback for the tiny cases: kill a plateau loop (exactness failure)
    for k in range(1, cx.depth + 1):
        A = cx.diff(k)
        for r in range(len(A.target.indices)):
            for c in range(len(A.source.indices)):
                e = A.entries[r][c]
                if any(g.kind == "loop" for g in e.coeffs):
                    return with_entry(k, r, c, alg.zero_hom(e.source, e.target))
    raise RuntimeError("no entry found to corrupt")
