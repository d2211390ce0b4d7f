"""Ext dimensions between simples and their Poincare series.

Three independent routes compute dim Ext^k(S_i, S_j) and must agree:

  * the head criterion on the k-th syzygy string of S_i;
  * the multiplicity of P_j in degree k of the closed-form resolution;
  * the coefficient of t^k in the rational series

        (Q_{i,j}(t) + t^(2N-1) Q_{i,j}(1/t)) / (1 - t^(2N)),

    where Q_{i,j}(t) = t^|j-i| + t^(|j-i|+2) + ... + t^(N-1-|N+1-j-i|).

All entries are 0 or 1, the table is symmetric in (i, j) and 2N-periodic
in k.  Everything here is integer combinatorics: no field enters, since
the dimensions count head constituents.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import strings
from .fields import field_for_characteristic
from .homs import LineAlgebra
from .resolutions import build_resolution


class RouteMismatchError(AssertionError):
    """Two supposedly equal computations of an Ext dimension disagreed."""


def _check_range(n, i, j):
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i},{j}) out of range 1..{n}")


def q_polynomial(n: int, i: int, j: int):
    """Coefficient list of Q_{i,j}; 0/1 coefficients, constant parity."""
    _check_range(n, i, j)
    lo = abs(j - i)
    hi = n - 1 - abs(n + 1 - j - i)
    coeffs = [0] * (hi + 1)
    for e in range(lo, hi + 1, 2):
        coeffs[e] = 1
    return coeffs


def poincare_numerator(n: int, i: int, j: int):
    """Q_{i,j}(t) + t^(2N-1) Q_{i,j}(1/t) as a polynomial (degree < 2N)."""
    q = q_polynomial(n, i, j)
    num = [0] * (2 * n)
    for e, c in enumerate(q):
        if c:
            num[e] += c
            num[2 * n - 1 - e] += c
    return num


def poincare_series(n: int, i: int, j: int, max_degree: int):
    """Coefficients 0..max_degree of the Ext Poincare series."""
    num = poincare_numerator(n, i, j)
    out = []
    for k in range(max_degree + 1):
        c = num[k] if k < len(num) else 0
        if k >= 2 * n:
            c += out[k - 2 * n]
        out.append(c)
    return out


def ext_dim_via_x(n: int, i: int, j: int, k: int) -> int:
    """Head criterion: 1 iff S_j is a head constituent of the k-th syzygy."""
    _check_range(n, i, j)
    if k < 0:
        raise ValueError("negative degree")
    label = strings.normalize_x(n, strings.upper_label(i - k, i + k))
    head, _, _ = strings.structure_of(n, label)
    return 1 if j in head else 0


def ext_dim_via_resolution(alg: LineAlgebra, i: int, j: int, k: int) -> int:
    """Multiplicity of P_j in degree k of the minimal resolution of S_i."""
    cx = build_resolution(alg, i, depth=max(k, 2 * alg.n + 2))
    if k > cx.depth:
        raise ValueError("resolution not built deep enough")
    return cx.term(k).multiplicity(j)


@dataclass
class ExtTable:
    n: int
    max_degree: int
    data: dict  # (i, j) -> tuple of 0/1 over k = 0..max_degree
    routes: tuple = ("head-criterion", "poincare-series", "resolution-terms")

    def entry(self, i: int, j: int, k: int) -> int:
        return self.data[(i, j)][k]

    def row(self, i: int, j: int):
        return self.data[(i, j)]


def ext_table(n: int, max_degree: int | None = None) -> ExtTable:
    """Fill the table by the head criterion and cross-check every entry
    against the series expansion and the resolution terms.  A mismatch is
    an implementation bug and raises RouteMismatchError."""
    if n < 1:
        raise ValueError("need n >= 1")
    if max_degree is None:
        max_degree = 4 * n
    # the resolution route needs an algebra; dimensions are field-free, so
    # any exact field works and F_2 is the cheapest
    alg = LineAlgebra(n, field_for_characteristic(2))
    data = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            series = poincare_series(n, i, j, max_degree)
            row = []
            for k in range(max_degree + 1):
                via_x = ext_dim_via_x(n, i, j, k)
                via_res = ext_dim_via_resolution(alg, i, j, k)
                via_series = series[k]
                if not (via_x == via_res == via_series):
                    raise RouteMismatchError(
                        f"routes disagree at (i={i}, j={j}, k={k}): "
                        f"head={via_x}, resolution={via_res}, series={via_series}"
                    )
                row.append(via_x)
            data[(i, j)] = tuple(row)
    return ExtTable(n, max_degree, data)
