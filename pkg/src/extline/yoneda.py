"""Chain-level Ext: maps between the periodic resolutions, null-homotopy
certificates, and the degree-1 and degree-N generator families.

A shift-r chain map f assigns to each degree k >= r a morphism matrix
term_k(source) -> term_{k-r}(target) commuting with the differentials
(no auxiliary signs: squares commute on the nose).  All our complexes and
maps are eventually 2N-periodic, so a map is stored on a finite window
and read off periodically beyond it.

Null-homotopy is decided exactly, in two stages.  Because the
resolutions are minimal (all differentials land in radicals), the
homotopy class of a shift-r map f is faithfully recorded by the induced
cocycle of its bottom component: the head coefficients of f_r into the
base projective of the target.  A nonzero readout certifies that no
homotopy whatsoever exists; a zero readout guarantees one exists (build
it degreewise through the exact tail).  For the explicit certificate a
homotopy is then sought among eventually periodic families
s_k : term_k(source) -> term_{k-r+1}(target) with f = d o s + s o d; one
period of unknowns plus a matching window is a finite linear system over
the ground field, and the period is widened in multiples of 2N when
needed (a forced drift can make the minimal certificate period a proper
multiple of 2N).  Found certificates are re-verified degreewise.

The generator x_i (shift 1, R_i -> R_{i+1}) is the identity on common
summands away from the special degrees, with

    component (-1)^(N-i) FStar(N-i)  at degrees k = N mod 2N,
    component (-1)^i     F(i)        at degrees k = 0 mod 2N (k >= 1);

x_i^* swaps the roles of the step and co-step maps, and y_i (shift N,
R_i -> R_{N+1-i}) is the identity in every degree >= N, the terms of the
two resolutions being literally equal there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homs import HomElement, LineAlgebra
from .linalg import LinearSystem, SpanBuilder
from .resolutions import (
    HomMatrix,
    PeriodicComplex,
    build_resolution,
    common_factor_matrix,
    hom_matrix_add,
    hom_matrix_compose,
    hom_matrix_equal,
    hom_matrix_is_zero,
    hom_matrix_scale,
    zero_hom_matrix,
)
from .ext_table import ext_dim_via_x as _ext_dim_via_x


class ChainMapError(AssertionError):
    pass


@dataclass
class ChainMap:
    source: PeriodicComplex
    target: PeriodicComplex
    shift: int
    periodic_start: int
    components: list  # index k in 0..stored_depth; None below shift

    @property
    def period(self) -> int:
        return 2 * self.source.alg.n

    @property
    def stored_depth(self) -> int:
        return len(self.components) - 1

    def component(self, k: int):
        """The degree-k component (None when the target degree is < 0)."""
        if k < self.shift:
            return None
        if k <= self.stored_depth:
            return self.components[k]
        while k > self.stored_depth:
            k -= self.period
        if k < self.periodic_start:
            raise ChainMapError("window too shallow for periodic read-back")
        return self.components[k]

    def verify(self, window: int | None = None):
        """Check the chain-map squares degreewise; raises on failure."""
        alg = self.source.alg
        hi = window or (self.periodic_start + 2 * self.period + 2)
        for k in range(self.shift + 1, hi + 1):
            lhs_prev = self.component(k - 1)
            lhs = hom_matrix_compose(alg, lhs_prev, self.source.diff(k))
            rhs = hom_matrix_compose(alg, self.target.diff(k - self.shift), self.component(k))
            if not hom_matrix_equal(alg, lhs, rhs):
                raise ChainMapError(
                    f"chain-map square fails at degree {k} "
                    f"(shift {self.shift}, source S_{self.source.base_vertex})"
                )
        return self


def _window_depth(alg, periodic_start):
    return periodic_start + 2 * alg.n


def _assemble(source, target, shift, periodic_start, maker) -> ChainMap:
    alg = source.alg
    depth = _window_depth(alg, periodic_start)
    comps = [None] * shift + [maker(k) for k in range(shift, depth + 1)]
    return ChainMap(source, target, shift, periodic_start, comps)


def generator_x(alg: LineAlgebra, i: int) -> ChainMap:
    """The shift-1 map R_i -> R_{i+1} representing the step class."""
    if not 1 <= i <= alg.n - 1:
        raise ValueError(f"no step generator at {i}")
    n = alg.n
    source = build_resolution(alg, i)
    target = build_resolution(alg, i + 1)
    F = alg.field

    def maker(k):
        src = source.term(k)
        tgt = target.term(k - 1)
        m = k % (2 * n)
        if k >= 1 and m == n % (2 * n):
            out = zero_hom_matrix(alg, src, tgt)
            sign = F.from_int(-1 if (n - i) % 2 else 1)
            out.entries[0][0] = alg.scale(sign, alg.fstar_hom(n - i))
            return out
        if k >= 1 and m == 0:
            out = zero_hom_matrix(alg, src, tgt)
            sign = F.from_int(-1 if i % 2 else 1)
            out.entries[0][0] = alg.scale(sign, alg.f_hom(i))
            return out
        return common_factor_matrix(alg, src, tgt)

    return _assemble(source, target, 1, 1, maker).verify()


def generator_xstar(alg: LineAlgebra, i: int) -> ChainMap:
    """The shift-1 map R_{i+1} -> R_i: the step map with f and f* swapped."""
    if not 1 <= i <= alg.n - 1:
        raise ValueError(f"no co-step generator at {i}")
    n = alg.n
    source = build_resolution(alg, i + 1)
    target = build_resolution(alg, i)
    F = alg.field

    def maker(k):
        src = source.term(k)
        tgt = target.term(k - 1)
        m = k % (2 * n)
        if k >= 1 and m == n % (2 * n):
            out = zero_hom_matrix(alg, src, tgt)
            sign = F.from_int(-1 if (n - i) % 2 else 1)
            out.entries[0][0] = alg.scale(sign, alg.f_hom(n - i))
            return out
        if k >= 1 and m == 0:
            out = zero_hom_matrix(alg, src, tgt)
            sign = F.from_int(-1 if i % 2 else 1)
            out.entries[0][0] = alg.scale(sign, alg.fstar_hom(i))
            return out
        return common_factor_matrix(alg, src, tgt)

    return _assemble(source, target, 1, 1, maker).verify()


def generator_y(alg: LineAlgebra, i: int) -> ChainMap:
    """The shift-N projection R_i -> R_{N+1-i}: identity in degrees >= N."""
    alg._check_vertex(i)
    n = alg.n
    source = build_resolution(alg, i)
    target = build_resolution(alg, n + 1 - i)

    def maker(k):
        src = source.term(k)
        tgt = target.term(k - n)
        if src.indices != tgt.indices:
            raise ChainMapError(
                f"terms of R_{i} and the shifted R_{n + 1 - i} differ at degree {k}"
            )
        return common_factor_matrix(alg, src, tgt)

    return _assemble(source, target, n, n, maker).verify()


def cached_generator(alg: LineAlgebra, kind: str, i: int) -> ChainMap:
    key = (kind, i)
    if key not in alg._generator_cache:
        builder = {"x": generator_x, "xstar": generator_xstar, "y": generator_y}[kind]
        alg._generator_cache[key] = builder(alg, i)
    return alg._generator_cache[key]


def compose(f: ChainMap, g: ChainMap) -> ChainMap:
    """f after g (Yoneda product at chain level); shifts add."""
    if g.target is not f.source and g.target.base_vertex != f.source.base_vertex:
        raise ChainMapError("endpoint mismatch in composition")
    alg = f.source.alg
    shift = f.shift + g.shift
    ps = max(g.periodic_start, f.periodic_start + g.shift, shift)

    def maker(k):
        return hom_matrix_compose(alg, f.component(k - g.shift), g.component(k))

    return _assemble(g.source, f.target, shift, ps, maker)


def chain_add(f: ChainMap, g: ChainMap, c=None) -> ChainMap:
    """f + c*g (default c = 1)."""
    alg = f.source.alg
    if (f.shift != g.shift or f.source.base_vertex != g.source.base_vertex
            or f.target.base_vertex != g.target.base_vertex):
        raise ChainMapError("adding chain maps of different type")
    if c is None:
        c = alg.field.one
    ps = max(f.periodic_start, g.periodic_start)

    def maker(k):
        return hom_matrix_add(
            alg, f.component(k), hom_matrix_scale(alg, c, g.component(k))
        )

    return _assemble(f.source, f.target, f.shift, ps, maker)


def chain_sub(f: ChainMap, g: ChainMap) -> ChainMap:
    return chain_add(f, g, c=f.source.alg.field.from_int(-1))


def chain_scale(c, f: ChainMap) -> ChainMap:
    alg = f.source.alg

    def maker(k):
        return hom_matrix_scale(alg, c, f.component(k))

    return _assemble(f.source, f.target, f.shift, f.periodic_start, maker)


def identity_chain_map(alg: LineAlgebra, i: int) -> ChainMap:
    source = build_resolution(alg, i)

    def maker(k):
        return common_factor_matrix(alg, source.term(k), source.term(k))

    return _assemble(source, source, 0, 1, maker).verify()


def chain_equal_strict(f: ChainMap, g: ChainMap) -> bool:
    """Degreewise equality over a window covering both periodic tails."""
    alg = f.source.alg
    if f.shift != g.shift:
        return False
    hi = max(f.periodic_start, g.periodic_start) + 2 * f.period + 2
    for k in range(f.shift, hi + 1):
        if not hom_matrix_equal(alg, f.component(k), g.component(k)):
            return False
    return True


def chain_is_zero_strict(f: ChainMap) -> bool:
    alg = f.source.alg
    hi = f.periodic_start + f.period
    return all(
        hom_matrix_is_zero(alg, f.component(k)) for k in range(f.shift, hi + 1)
    )


# ------------------------------------------------------------- homotopies


@dataclass
class Homotopy:
    source: PeriodicComplex
    target: PeriodicComplex
    shift: int  # shift of the map it null-homotopes
    lo: int
    maps: list  # s_k for k in lo..hi, term_k(source) -> term_{k-shift+1}(target)
    periodic_start: int
    period_len: int  # eventual period (a multiple of 2N)

    @property
    def hi(self) -> int:
        return self.lo + len(self.maps) - 1

    def component(self, k: int):
        if k < self.lo:
            return None
        while k > self.hi:
            k -= self.period_len
        if k < self.lo:
            raise ChainMapError("homotopy window too shallow")
        return self.maps[k - self.lo]


class _VarTable:
    """Register one scalar unknown per (slot, generator)."""

    def __init__(self):
        self.index = {}

    def var(self, key):
        if key not in self.index:
            self.index[key] = len(self.index)
        return self.index[key]

    @property
    def count(self):
        return len(self.index)


def _sym_matrix_for(alg, table, slot, src_psum, tgt_psum):
    """Symbolic morphism matrix: each entry a dict gen -> {var: 1}."""
    out = []
    for r, t in enumerate(tgt_psum.indices):
        row = []
        for c, s in enumerate(src_psum.indices):
            entry = {}
            for gen in alg.generators(s, t):
                entry[gen] = {table.var((slot, r, c, gen)): alg.field.one}
            row.append(entry)
        out.append(row)
    return out


def _sym_compose_fixed_sym(alg, fixed: HomElement, sym: dict) -> dict:
    F = alg.field
    out = {}
    for gf, cf in fixed.coeffs.items():
        for gs, form in sym.items():
            hit = alg._compose_generators(gf, gs)
            if hit is None:
                continue
            sign, gout = hit
            factor = F.mul(cf, F.from_int(sign))
            dst = out.setdefault(gout, {})
            for var, cv in form.items():
                dst[var] = F.add(dst.get(var, F.zero), F.mul(factor, cv))
    return out


def _sym_compose_sym_fixed(alg, sym: dict, fixed: HomElement) -> dict:
    F = alg.field
    out = {}
    for gs, form in sym.items():
        for gf, cf in fixed.coeffs.items():
            hit = alg._compose_generators(gs, gf)
            if hit is None:
                continue
            sign, gout = hit
            factor = F.mul(cf, F.from_int(sign))
            dst = out.setdefault(gout, {})
            for var, cv in form.items():
                dst[var] = F.add(dst.get(var, F.zero), F.mul(factor, cv))
    return out


def _sym_add(alg, a: dict, b: dict) -> dict:
    F = alg.field
    out = {g: dict(f) for g, f in a.items()}
    for g, form in b.items():
        dst = out.setdefault(g, {})
        for var, cv in form.items():
            dst[var] = F.add(dst.get(var, F.zero), cv)
    return out


def _sym_mat_fixed_after_sym(alg, A: HomMatrix, S):
    """A o S where A is a fixed matrix and S a symbolic one."""
    rows = len(A.target.indices)
    mids = len(A.source.indices)
    cols = len(S[0]) if S else 0
    out = [[{} for _ in range(cols)] for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            acc = {}
            for m in range(mids):
                acc = _sym_add(alg, acc, _sym_compose_fixed_sym(alg, A.entries[r][m], S[m][c]))
            out[r][c] = acc
    return out


def _sym_mat_sym_after_fixed(alg, S, A: HomMatrix):
    """S o A where S is symbolic and A fixed."""
    rows = len(S)
    mids = len(A.target.indices)
    cols = len(A.source.indices)
    out = [[{} for _ in range(cols)] for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            acc = {}
            for m in range(mids):
                acc = _sym_add(alg, acc, _sym_compose_sym_fixed(alg, S[r][m], A.entries[m][c]))
            out[r][c] = acc
    return out


def _sym_mat_add(alg, A, B):
    if A is None:
        return B
    if B is None:
        return A
    return [
        [_sym_add(alg, A[r][c], B[r][c]) for c in range(len(A[0]))]
        for r in range(len(A))
    ]


def _emit_equations(system, alg, sym_mat, rhs: HomMatrix | None, tgt_psum, src_psum):
    F = alg.field
    for r, t in enumerate(tgt_psum.indices):
        for c, s in enumerate(src_psum.indices):
            lhs = sym_mat[r][c] if sym_mat is not None else {}
            rhs_entry = rhs.entries[r][c].coeffs if rhs is not None else {}
            gens = set(lhs) | set(rhs_entry)
            for g in gens:
                system.add_equation(lhs.get(g, {}), rhs_entry.get(g, F.zero))


def chain_head_class(f: ChainMap):
    """The induced cocycle of f: head coefficients of the bottom component
    into the base projective of the target resolution.

    Two chain maps are homotopic iff these readouts agree (minimality of
    the resolutions: differentials land in radicals, so precomposition
    and postcomposition with them die in the head).
    """
    alg = f.source.alg
    F = alg.field
    j = f.target.base_vertex
    bottom = f.component(f.shift)
    out = []
    id_gen = None
    for c, s in enumerate(bottom.source.indices):
        if s != j:
            continue
        entry = bottom.entries[0][c]
        if id_gen is None:
            from .homs import HomGenerator

            id_gen = HomGenerator("id", j)
        out.append(entry.coeffs.get(id_gen, F.zero))
    return out


def class_is_zero(f: ChainMap) -> bool:
    F = f.source.alg.field
    return all(F.is_zero(c) for c in chain_head_class(f))


def _periodic_homotopy(f: ChainMap, period_multiple: int):
    """Solve for a homotopy with eventual period 2N * period_multiple."""
    alg = f.source.alg
    n = alg.n
    plen = 2 * n * period_multiple
    r = f.shift
    s_lo = max(r - 1, 0)
    s0 = max(f.periodic_start, s_lo, 1)
    s_hi = s0 + plen - 1
    table = _VarTable()

    sym = {}
    for k in range(s_lo, s_hi + 1):
        sym[k] = _sym_matrix_for(alg, table, k, f.source.term(k), f.target.term(k - r + 1))

    def s_at(k):
        if k < s_lo:
            return None
        kk = k
        while kk > s_hi:
            kk -= plen
        return sym[kk]

    system = LinearSystem(alg.field, 0)
    eq_hi = s0 + 2 * plen + 2
    rows = []
    for k in range(r, eq_hi + 1):
        total = None
        sk = s_at(k)
        if sk is not None and k - r + 1 >= 1:
            total = _sym_mat_add(alg, total, _sym_mat_fixed_after_sym(alg, f.target.diff(k - r + 1), sk))
        sk1 = s_at(k - 1)
        if sk1 is not None and k >= 1:
            total = _sym_mat_add(alg, total, _sym_mat_sym_after_fixed(alg, sk1, f.source.diff(k)))
        rows.append((total, f.component(k), f.target.term(k - r), f.source.term(k)))
    system.nvars = table.count
    for total, rhs, tgt, src in rows:
        _emit_equations(system, alg, total, rhs, tgt, src)
    sol = system.solution()
    if sol is None:
        return None
    maps = []
    for k in range(s_lo, s_hi + 1):
        M = zero_hom_matrix(alg, f.source.term(k), f.target.term(k - r + 1))
        for rr, t in enumerate(M.target.indices):
            for cc, s in enumerate(M.source.indices):
                items = []
                for gen in alg.generators(s, t):
                    v = table.index.get((k, rr, cc, gen))
                    if v is not None:
                        items.append((gen, sol[v]))
                M.entries[rr][cc] = alg.hom_from(s, t, items)
        maps.append(M)
    htpy = Homotopy(f.source, f.target, r, s_lo, maps, s0, plen)
    if not verify_homotopy(f, htpy, window=eq_hi):
        raise ChainMapError("homotopy certificate failed re-verification")
    return htpy


def null_homotopy(f: ChainMap, max_period_multiple: int = 4):
    """An eventually periodic homotopy certifying f = d s + s d, or None.

    None certifies non-nullity: the induced cocycle (head readout on the
    minimal resolution) is nonzero, so no homotopy of any shape exists.
    When the readout vanishes a certificate exists and is searched for
    with eventual periods 2N, 4N, ..., re-verified degreewise.
    """
    if not class_is_zero(f):
        return None
    for m in range(1, max_period_multiple + 1):
        htpy = _periodic_homotopy(f, m)
        if htpy is not None:
            return htpy
    raise ChainMapError(
        "the induced cocycle vanishes but no periodic homotopy was found "
        f"(eventual period up to {max_period_multiple} full turns)"
    )


def verify_homotopy(f: ChainMap, htpy: Homotopy, window: int | None = None) -> bool:
    """Independent degreewise check that f = d o s + s o d."""
    alg = f.source.alg
    r = f.shift
    hi = window or (htpy.periodic_start + 2 * htpy.period_len + 2)
    for k in range(r, hi + 1):
        acc = zero_hom_matrix(alg, f.source.term(k), f.target.term(k - r))
        sk = htpy.component(k)
        if sk is not None and k - r + 1 >= 1:
            acc = hom_matrix_add(alg, acc, hom_matrix_compose(alg, f.target.diff(k - r + 1), sk))
        sk1 = htpy.component(k - 1)
        if sk1 is not None and k >= 1:
            acc = hom_matrix_add(alg, acc, hom_matrix_compose(alg, sk1, f.source.diff(k)))
        if not hom_matrix_equal(alg, acc, f.component(k)):
            return False
    return True


def is_null_homotopic(f: ChainMap) -> bool:
    return class_is_zero(f)


def class_difference_scalar(f: ChainMap, g: ChainMap):
    """A scalar c with f - c*g null-homotopic, or None.

    Classes are compared through their induced cocycles, which determine
    them faithfully on the minimal resolutions.
    """
    alg = f.source.alg
    F = alg.field
    if (f.shift != g.shift or f.source.base_vertex != g.source.base_vertex
            or f.target.base_vertex != g.target.base_vertex):
        return None
    hf = chain_head_class(f)
    hg = chain_head_class(g)
    c = None
    for a, b in zip(hf, hg):
        if F.is_zero(b):
            if not F.is_zero(a):
                return None
            continue
        ratio = F.mul(a, F.inv(b))
        if c is None:
            c = ratio
        elif not F.is_zero(F.sub(c, ratio)):
            return None
    return F.zero if c is None else c


# --------------------------------------------------------------- lifting


@dataclass
class ExtClass:
    i: int
    j: int
    k: int
    chain_map: ChainMap
    nonzero: bool


def _first_nonzero_coefficient(alg, f: ChainMap):
    F = alg.field
    hi = f.periodic_start + 2 * alg.n
    for k in range(f.shift, hi + 1):
        M = f.component(k)
        for r in range(len(M.target.indices)):
            for c in range(len(M.source.indices)):
                entry = M.entries[r][c]
                for gen in sorted(entry.coeffs, key=lambda g: g.sort_key()):
                    cv = entry.coeffs[gen]
                    if not F.is_zero(cv):
                        return cv
    return None


def normalize_class(f: ChainMap) -> ChainMap:
    """Rescale so the first nonzero coefficient (lowest degree, row-major,
    identity < loop < step < co-step) is 1."""
    alg = f.source.alg
    lead = _first_nonzero_coefficient(alg, f)
    if lead is None:
        return f
    return chain_scale(alg.field.inv(lead), f)


def lift_cocycle(alg: LineAlgebra, i: int, j: int, k: int) -> ExtClass:
    """A chain map R_i -> R_j[k] whose degree-k component hits the head of
    the P_j summand; certified non-null-homotopic."""
    if _ext_dim_via_x(alg.n, i, j, k) == 0:
        raise ValueError(f"Ext^{k}(S_{i}, S_{j}) = 0: requested class is zero")
    n = alg.n
    source = build_resolution(alg, i)
    target = build_resolution(alg, j)
    if k == 0 and i == j:
        cls = identity_chain_map(alg, i)
        return ExtClass(i, j, 0, cls, True)

    p0 = k + 1
    phi_hi = p0 + 2 * n - 1
    table = _VarTable()
    sym = {}
    for m in range(k, phi_hi + 1):
        sym[m] = _sym_matrix_for(alg, table, m, source.term(m), target.term(m - k))

    def phi_at(m):
        if m < k:
            return None
        mm = m
        while mm > phi_hi:
            mm -= 2 * n
        return sym[mm]

    system = LinearSystem(alg.field, 0)
    rows = []
    # chain-map squares
    for m in range(k + 1, p0 + 4 * n + 3):
        lhs = None
        pm1 = phi_at(m - 1)
        if pm1 is not None:
            lhs = _sym_mat_add(alg, lhs, _sym_mat_sym_after_fixed(alg, pm1, source.diff(m)))
        rhs_sym = _sym_mat_fixed_after_sym(alg, target.diff(m - k), phi_at(m))
        neg = [
            [{g: {v: alg.field.neg(cv) for v, cv in form.items()} for g, form in e.items()}
             for e in row]
        for row in rhs_sym]
        lhs = _sym_mat_add(alg, lhs, neg)
        rows.append((lhs, None, target.term(m - k - 1), source.term(m)))
    system.nvars = table.count
    for lhs, rhs, tgt, src in rows:
        _emit_equations(system, alg, lhs, rhs, tgt, src)
    # pin the head coefficient: the unique P_j summand of term_k maps by
    # the identity onto term_0(R_j) = P_j
    col = source.term(k).indices.index(j)
    id_gen = alg.identity_hom(j).coeffs
    (id_gen_obj,) = id_gen
    system.add_equation({table.var((k, 0, col, id_gen_obj)): alg.field.one}, alg.field.one)
    sol = system.solution()
    if sol is None:
        raise ChainMapError(
            f"no eventually periodic lift found for Ext^{k}(S_{i}, S_{j})"
        )

    def maker(m):
        M = zero_hom_matrix(alg, source.term(m), target.term(m - k))
        mm = m
        while mm > phi_hi:
            mm -= 2 * n
        for rr, t in enumerate(M.target.indices):
            for cc, s in enumerate(M.source.indices):
                items = []
                for gen in alg.generators(s, t):
                    v = table.index.get((mm, rr, cc, gen))
                    if v is not None:
                        items.append((gen, sol[v]))
                M.entries[rr][cc] = alg.hom_from(s, t, items)
        return M

    chain = _assemble(source, target, k, p0, maker).verify()
    chain = normalize_class(chain)
    if null_homotopy(chain) is not None:
        raise ChainMapError("lifted representative is null-homotopic")
    return ExtClass(i, j, k, chain, True)


def ext_class_dimension(alg: LineAlgebra, i: int, j: int, k: int) -> int:
    """dim Hom modulo homotopy of shift-k maps R_i -> R_j, computed as the
    rank of the induced-cocycle readout on the space of eventually
    periodic chain maps.

    The readout identifies homotopic maps and nothing more (minimality),
    so this is the Ext dimension provided every cocycle lifts to a
    periodic chain map; agreement with the combinatorial table is exactly
    what the test suite certifies.
    """
    n = alg.n
    source = build_resolution(alg, i)
    target = build_resolution(alg, j)
    phi_hi = k + 2 * n  # ansatz: components repeat from k+1 on
    eq_hi = k + 6 * n + 3
    table = _VarTable()
    phi_sym = {}
    for m in range(k, phi_hi + 1):
        phi_sym[m] = _sym_matrix_for(alg, table, ("phi", m), source.term(m), target.term(m - k))

    def phi_at(m):
        if m < k:
            return None
        mm = m
        while mm > phi_hi:
            mm -= 2 * n
        return phi_sym[mm]

    system = LinearSystem(alg.field, 0)
    for m in range(k + 1, eq_hi + 1):
        lhs = _sym_mat_sym_after_fixed(alg, phi_at(m - 1), source.diff(m))
        rhs_sym = _sym_mat_fixed_after_sym(alg, target.diff(m - k), phi_at(m))
        lhs = _sym_mat_add(alg, lhs, _sym_neg(alg, rhs_sym))
        _emit_equations(system, alg, lhs, None, target.term(m - k - 1), source.term(m))
    system.nvars = table.count

    from .homs import HomGenerator

    head_vars = []
    bottom_src = source.term(k)
    for c, s in enumerate(bottom_src.indices):
        if s == j:
            head_vars.append(table.index.get((("phi", k), 0, c, HomGenerator("id", j))))

    F = alg.field
    span = SpanBuilder(F)
    for vec in system.nullspace_basis():
        coords = {
            pos: vec[v]
            for pos, v in enumerate(head_vars)
            if v is not None and not F.is_zero(vec[v])
        }
        span.add(coords)
    return span.dim


def _sym_neg(alg, S):
    F = alg.field
    return [
        [{g: {v: F.neg(cv) for v, cv in form.items()} for g, form in e.items()} for e in row]
        for row in S
    ]


# -------------------------------------------------------------- relations


@dataclass
class RelationCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class RelationsReport:
    n: int
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_chain_relations(alg: LineAlgebra) -> RelationsReport:
    """Machine check of the generator relations.

    The mixed degree-(N+1) relations hold strictly at chain level; the
    degree-2 relations hold up to an explicit homotopy certificate.
    """
    n = alg.n
    checks = []
    if n == 1:
        checks.append(RelationCheck("no degree-1 generators", True, "vacuous"))
        return RelationsReport(n, checks)

    x = {i: cached_generator(alg, "x", i) for i in range(1, n)}
    xs = {i: cached_generator(alg, "xstar", i) for i in range(1, n)}
    y = {i: cached_generator(alg, "y", i) for i in range(1, n + 1)}

    def homotopic_zero(f):
        h = null_homotopy(f)
        return h is not None and verify_homotopy(f, h)

    checks.append(
        RelationCheck("xstar_1 o x_1 = 0", homotopic_zero(compose(xs[1], x[1])))
    )
    checks.append(
        RelationCheck(
            f"x_{n-1} o xstar_{n-1} = 0",
            homotopic_zero(compose(x[n - 1], xs[n - 1])),
        )
    )
    for i in range(1, n - 1):
        diff = chain_sub(compose(x[i], xs[i]), compose(xs[i + 1], x[i + 1]))
        checks.append(
            RelationCheck(
                f"x_{i} o xstar_{i} = xstar_{i+1} o x_{i+1}", homotopic_zero(diff)
            )
        )
    for i in range(1, n):
        lhs = compose(y[i + 1], x[i])
        rhs = compose(xs[n - i], y[i])
        checks.append(
            RelationCheck(
                f"y_{i+1} o x_{i} = xstar_{n-i} o y_{i} (strict)",
                chain_equal_strict(lhs, rhs),
            )
        )
        lhs = compose(y[i], xs[i])
        rhs = compose(x[n - i], y[i + 1])
        checks.append(
            RelationCheck(
                f"y_{i} o xstar_{i} = x_{n-i} o y_{i+1} (strict)",
                chain_equal_strict(lhs, rhs),
            )
        )
    return RelationsReport(n, checks)
