"""The six-vertex and fused higher-spin models.

Everything is computed in squared spectral variables: a vertex at row i and
column j carries x_i = X_i^2 and y_j = Y_j^2, so the c-weight
(q - q^{-1}) sqrt(x y) becomes the honest monomial (q - q^{-1}) X Y and all
objects live in polynomial rings.

Edge labels are 0..l; label l is the fully "plus" symmetric state.  A vertex
maps (left, bottom) -> (right, top) with conservation
left + bottom = right + top; domain-wall boundaries put l on the left/top
edges and 0 on the bottom/right ones.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from macvertex.cyclotomic import CyclotomicNumber
from macvertex.multipoly import (
    MultiPoly,
    bareiss_det,
    cofactor_det,
    vandermonde_product,
)


class ResourceError(RuntimeError):
    """State space exceeds the configured cap."""


class FusionInvarianceError(ArithmeticError):
    """Fused application left the symmetric subspace (implementation bug)."""


class ConfigError(ValueError):
    """A grid configuration violates boundary or conservation invariants."""


def _inv(q):
    """Inverse of q in its ring (cyclotomic number or monomial)."""
    if isinstance(q, CyclotomicNumber):
        return q.inverse()
    return q ** -1


# ---------------------------------------------------------------------------
# spin-1/2 weights and R-matrix


def weight_abc(kind: str, X, Y, q):
    """The §2.1 weights in squared variables x = X^2, y = Y^2."""
    if kind == "a":
        return q * X * X - _inv(q) * Y * Y
    if kind == "b":
        return X * X - Y * Y
    if kind == "c":
        return (q - _inv(q)) * X * Y
    raise ValueError(f"unknown weight kind {kind!r}")


def r_matrix(X, Y, q):
    """4x4 R-matrix [[a,0,0,0],[0,b,c,0],[0,c,b,0],[0,0,0,a]].

    Basis order (s1, s2) in {++, +-, -+, --}; the two tensor slots enter
    symmetrically, the spectral arguments do not: entries are a(x, y) etc.
    with x = X^2 carried by the first slot.
    """
    a = weight_abc("a", X, Y, q)
    b = weight_abc("b", X, Y, q)
    c = weight_abc("c", X, Y, q)
    zero = a - a
    return [
        [a, zero, zero, zero],
        [zero, b, c, zero],
        [zero, c, b, zero],
        [zero, zero, zero, a],
    ]


def annihilation_rmatrix(i: int, X, q):
    """R_{i,i+1}(q^{2i-2} x, q^{2i} x): the fusion projector factor, equal to
    (q^2 - 1) q^{2i-2} x [[0,0,0,0],[0,-1,1,0],[0,1,-1,0],[0,0,0,0]]."""
    return r_matrix(q ** (i - 1) * X, q ** i * X, q)


# ---------------------------------------------------------------------------
# tensor calculus on words of 2l spins

# words are integers; bit k set means "minus" at site k


def apply_rmatrix(vec: dict[int, object], mat, site1: int, site2: int) -> dict:
    """Apply a 4x4 two-site R-matrix to a sparse vector on spin words."""
    out: dict[int, object] = {}
    for word, coef in vec.items():
        s1 = (word >> site1) & 1
        s2 = (word >> site2) & 1
        col = 2 * s1 + s2
        base = word & ~((1 << site1) | (1 << site2))
        for row in range(4):
            entry = mat[row][col]
            if _is_zero(entry):
                continue
            t1, t2 = row >> 1, row & 1
            new_word = base | (t1 << site1) | (t2 << site2)
            add = coef * entry
            if new_word in out:
                out[new_word] = out[new_word] + add
            else:
                out[new_word] = add
    return {w: c for w, c in out.items() if not _is_zero(c)}


def _is_zero(value) -> bool:
    if isinstance(value, (CyclotomicNumber, MultiPoly)):
        return value.is_zero
    return value == 0


def symmetric_state(ell: int, minus_count: int) -> dict[int, int]:
    """|l; l-m> as a 0/1 vector: coefficient 1 on every word of length l
    with exactly `minus_count` minus entries."""
    if not 0 <= minus_count <= ell:
        raise ValueError(f"minus count {minus_count} out of range 0..{ell}")
    out = {}
    for positions in itertools.combinations(range(ell), minus_count):
        word = 0
        for p in positions:
            word |= 1 << p
        out[word] = 1
    return out


# ---------------------------------------------------------------------------
# fusion


class WeightTensor:
    """Fused weights R^{(l)}_{alpha beta}^{gamma eta}, labels in 0..l."""

    __slots__ = ("ell", "entries", "zero")

    def __init__(self, ell: int, entries: dict, zero):
        self.ell = ell
        self.entries = entries
        self.zero = zero

    def entry(self, alpha: int, beta: int, gamma: int, eta: int):
        return self.entries.get((alpha, beta, gamma, eta), self.zero)


def fused_r(ell: int, X, Y, q) -> WeightTensor:
    """R^{(l)}(x, y) on V^{(l)} (x) V^{(l)} by the l^2-fold product of small
    R-matrices, normalization C(x,y) = 1.

    Matrix elements are read off the coefficient of a representative word of
    each (gamma, eta); a second representative is checked for consistency.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    mats = {}
    for i in range(1, ell + 1):
        for j in range(1, ell + 1):
            mats[(i, j)] = r_matrix(q ** (i - 1) * X, q ** (j - 1) * Y, q)
    one = q ** 0
    entries: dict[tuple, object] = {}
    zero = one - one
    for alpha in range(ell + 1):
        for beta in range(ell + 1):
            vec: dict[int, object] = {}
            left = symmetric_state(ell, ell - alpha)
            right = symmetric_state(ell, ell - beta)
            for wl in left:
                for wr in right:
                    vec[wl | (wr << ell)] = one
            # rightmost factor of the displayed product acts first:
            # rows i = l..1, and inside each row j = 1..l
            for i in range(ell, 0, -1):
                for j in range(1, ell + 1):
                    vec = apply_rmatrix(vec, mats[(i, j)], i - 1, ell + j - 1)
            for gamma in range(ell + 1):
                eta = alpha + beta - gamma
                if not 0 <= eta <= ell:
                    continue
                rep1 = _word_with_minuses_low(ell - gamma) | (
                    _word_with_minuses_low(ell - eta) << ell
                )
                rep2 = _word_with_minuses_high(ell, ell - gamma) | (
                    _word_with_minuses_high(ell, ell - eta) << ell
                )
                val1 = vec.get(rep1, zero)
                val2 = vec.get(rep2, zero)
                if not _is_zero(val1 - val2):
                    raise FusionInvarianceError(
                        f"representative words disagree at "
                        f"({alpha},{beta})->({gamma},{eta})"
                    )
                if not _is_zero(val1):
                    entries[(alpha, beta, gamma, eta)] = val1
    return WeightTensor(ell, entries, zero)


def _word_with_minuses_low(count: int) -> int:
    return (1 << count) - 1


def _word_with_minuses_high(ell: int, count: int) -> int:
    return ((1 << count) - 1) << (ell - count)


def fused_matrix(tensor: WeightTensor):
    """The fused R as a dense matrix on the (l+1)^2-dimensional space
    V^{(l)} (x) V^{(l)}, index = alpha*(l+1)+beta."""
    ell = tensor.ell
    dim = (ell + 1) ** 2
    return [
        [
            tensor.entry(a_in, b_in, a_out, b_out)
            for a_in in range(ell + 1)
            for b_in in range(ell + 1)
        ]
        for a_out in range(ell + 1)
        for b_out in range(ell + 1)
    ]


def extend_spectral(vars_: Sequence, ell: int, q) -> list:
    """x -> (x, q^2 x, ..., q^{2l-2} x), grouped per original variable."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    out = []
    for v in vars_:
        for k in range(ell):
            out.append(q ** (2 * k) * v)
    return out


# ---------------------------------------------------------------------------
# enumeration by transfer-matrix contraction


def enumerate_partition_function(
    n: int,
    ell: int,
    X: Sequence,
    Y: Sequence,
    q,
    max_states: int = 100_000,
):
    """Z_{n,l}(x, y): the weighted sum over boundary-compatible
    configurations, contracted row by row over vertical edge labels."""
    if len(X) != n or len(Y) != n:
        raise ValueError("need n spectral values on each side")
    if (ell + 1) ** n > max_states:
        raise ResourceError(
            f"state space (l+1)^n = {(ell + 1) ** n} exceeds cap {max_states}"
        )
    tensors = [[fused_r(ell, X[i], Y[j], q) for j in range(n)] for i in range(n)]
    one = q ** 0
    zero = one - one
    # states: vertical labels below the current row; start below row n (all 0)
    states = {(0,) * n: one}
    for i in range(n - 1, -1, -1):
        new_states: dict[tuple, object] = {}
        for below, acc in states.items():
            # partial: (horizontal carry, tops chosen so far) -> value
            partial = {((), ell): acc}
            for j in range(n):
                nxt = {}
                for (tops, h), val in partial.items():
                    tensor = tensors[i][j]
                    beta = below[j]
                    for gamma in range(ell + 1):
                        eta = h + beta - gamma
                        if not 0 <= eta <= ell:
                            continue
                        w = tensor.entry(h, beta, gamma, eta)
                        if _is_zero(w):
                            continue
                        key = (tops + (eta,), gamma)
                        add = val * w
                        if key in nxt:
                            nxt[key] = nxt[key] + add
                        else:
                            nxt[key] = add
                partial = nxt
            for (tops, h), val in partial.items():
                if h != 0:
                    continue
                if tops in new_states:
                    new_states[tops] = new_states[tops] + val
                else:
                    new_states[tops] = val
        states = new_states
    return states.get((ell,) * n, zero)


def transfer_matrix(ell: int, X, Ys: Sequence, q) -> list[list]:
    """The row operator with left boundary l and right boundary 0, as a
    matrix from bottom vertical labels to top vertical labels."""
    n = len(Ys)
    tensors = [fused_r(ell, X, Ys[j], q) for j in range(n)]
    one = q ** 0
    zero = one - one
    labels = list(itertools.product(range(ell + 1), repeat=n))
    index = {lab: k for k, lab in enumerate(labels)}
    size = len(labels)
    mat = [[zero for _ in range(size)] for _ in range(size)]
    for below in labels:
        partial = {((), ell): one}
        for j in range(n):
            nxt = {}
            for (tops, h), val in partial.items():
                beta = below[j]
                for gamma in range(ell + 1):
                    eta = h + beta - gamma
                    if not 0 <= eta <= ell:
                        continue
                    w = tensors[j].entry(h, beta, gamma, eta)
                    if _is_zero(w):
                        continue
                    key = (tops + (eta,), gamma)
                    add = val * w
                    nxt[key] = nxt[key] + add if key in nxt else add
            partial = nxt
        for (tops, h), val in partial.items():
            if h == 0:
                row = index[tops]
                mat[row][index[below]] = mat[row][index[below]] + val
    return mat


# ---------------------------------------------------------------------------
# grid configurations and higher-spin ASMs


class GridConfig:
    """Edge labels of one configuration: h[i][j] is the horizontal edge to
    the left of cell (i,j) (0-based, j = 0..n), v[i][j] the vertical edge
    above row i at column j (i = 0..n)."""

    __slots__ = ("n", "ell", "h", "v")

    def __init__(self, n: int, ell: int, h, v):
        self.n = n
        self.ell = ell
        self.h = [list(row) for row in h]
        self.v = [list(row) for row in v]
        self.validate()

    def validate(self):
        n, ell = self.n, self.ell
        if len(self.h) != n or any(len(r) != n + 1 for r in self.h):
            raise ConfigError("horizontal edge array has wrong shape")
        if len(self.v) != n + 1 or any(len(r) != n for r in self.v):
            raise ConfigError("vertical edge array has wrong shape")
        for i in range(n):
            if self.h[i][0] != ell or self.h[i][n] != 0:
                raise ConfigError("left/right boundary violated")
        for j in range(n):
            if self.v[0][j] != ell or self.v[n][j] != 0:
                raise ConfigError("top/bottom boundary violated")
        for row in self.h:
            for lab in row:
                if not 0 <= lab <= ell:
                    raise ConfigError(f"label {lab} out of range")
        for row in self.v:
            for lab in row:
                if not 0 <= lab <= ell:
                    raise ConfigError(f"label {lab} out of range")
        for i in range(n):
            for j in range(n):
                alpha, beta = self.h[i][j], self.v[i + 1][j]
                gamma, eta = self.h[i][j + 1], self.v[i][j]
                if alpha + beta != gamma + eta:
                    raise ConfigError(f"conservation fails at cell ({i},{j})")

    def to_json(self) -> dict:
        return {"n": self.n, "ell": self.ell, "h": self.h, "v": self.v}


def brute_force_configs(n: int, ell: int) -> list[GridConfig]:
    """All boundary-compatible configurations, by exhausting the internal
    vertical edges (the horizontal edges are then forced)."""
    configs = []
    internal_rows = n - 1
    for choice in itertools.product(
        range(ell + 1), repeat=internal_rows * n
    ):
        v = [[ell] * n]
        for i in range(internal_rows):
            v.append(list(choice[i * n: (i + 1) * n]))
        v.append([0] * n)
        h = [[ell] + [None] * n for _ in range(n)]
        ok = True
        for i in range(n):
            for j in range(n):
                gamma = h[i][j] + v[i + 1][j] - v[i][j]
                if not 0 <= gamma <= ell:
                    ok = False
                    break
                h[i][j + 1] = gamma
            if not ok or (h[i][n] != 0):
                ok = False
                break
        if ok:
            configs.append(GridConfig(n, ell, h, v))
    return configs


class HigherSpinASM:
    """n x n integer matrix, entries in -l..l, all line sums l, all partial
    line sums in 0..l (the edge labels of the vertex picture)."""

    __slots__ = ("n", "ell", "rows")

    def __init__(self, n: int, ell: int, rows):
        self.n = n
        self.ell = ell
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        self.validate()

    def validate(self):
        n, ell = self.n, self.ell
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ConfigError("matrix has wrong shape")
        for i in range(n):
            run = 0
            for j in range(n):
                e = self.rows[i][j]
                if not -ell <= e <= ell:
                    raise ConfigError(f"entry {e} out of range")
                run += e
                if not 0 <= run <= ell:
                    raise ConfigError("row partial sum out of 0..ell")
            if run != ell:
                raise ConfigError("row sum != ell")
        for j in range(n):
            run = 0
            for i in range(n):
                run += self.rows[i][j]
                if not 0 <= run <= ell:
                    raise ConfigError("column partial sum out of 0..ell")
            if run != ell:
                raise ConfigError("column sum != ell")

    def __eq__(self, other):
        return isinstance(other, HigherSpinASM) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def config_to_hsasm(config: GridConfig) -> HigherSpinASM:
    """Entry (i,j) = top edge label - bottom edge label at vertex (i,j)."""
    n = config.n
    rows = [
        [config.v[i][j] - config.v[i + 1][j] for j in range(n)]
        for i in range(n)
    ]
    return HigherSpinASM(n, config.ell, rows)


def enumerate_hsasm(n: int, ell: int) -> list[HigherSpinASM]:
    """All higher-spin ASMs by direct search with partial-sum pruning
    (independent of the vertex model)."""
    out = []
    col_sums = [0] * n

    def fill(i: int, rows: list):
        if i == n:
            if all(s == ell for s in col_sums):
                out.append(HigherSpinASM(n, ell, rows))
            return
        def fill_row(j: int, row: list, row_sum: int):
            if j == n:
                if row_sum == ell:
                    rows.append(tuple(row))
                    fill(i + 1, rows)
                    rows.pop()
                return
            remaining_rows = n - i - 1
            for e in range(-ell, ell + 1):
                if not 0 <= row_sum + e <= ell:
                    continue
                new_col = col_sums[j] + e
                if not 0 <= new_col <= ell:
                    continue
                if new_col + remaining_rows * ell < ell:
                    continue
                col_sums[j] = new_col
                row.append(e)
                fill_row(j + 1, row, row_sum + e)
                row.pop()
                col_sums[j] = new_col - e
        fill_row(0, [], 0)

    fill(0, [])
    return out


def count_configs(n: int, ell: int, max_states: int = 100_000) -> int:
    """Number of boundary-compatible configurations, by the transfer DP with
    unit weights (all six-vertex types allowed)."""
    if (ell + 1) ** n > max_states:
        raise ResourceError("state space exceeds cap")
    states = {(0,) * n: 1}
    for _ in range(n):
        new_states: dict[tuple, int] = {}
        for below, acc in states.items():
            partial = {((), ell): acc}
            for j in range(n):
                nxt: dict[tuple, int] = {}
                for (tops, h), val in partial.items():
                    beta = below[j]
                    for gamma in range(ell + 1):
                        eta = h + beta - gamma
                        if 0 <= eta <= ell:
                            key = (tops + (eta,), gamma)
                            nxt[key] = nxt.get(key, 0) + val
                partial = nxt
            for (tops, h), val in partial.items():
                if h == 0:
                    new_states[tops] = new_states.get(tops, 0) + val
        states = new_states
    return states.get((ell,) * n, 0)


# ---------------------------------------------------------------------------
# the fused block determinant


def _xbar_atoms(n: int, ell: int, q: CyclotomicNumber, offset: int):
    """Symbolic extended variables q^{2k} x_i as (var index, scalar) pairs."""
    return [
        (offset + i, q ** (2 * k)) for i in range(n) for k in range(ell)
    ]


def _linear(var: int, scale, shift_var: int, shift_scale, nvars: int, order: int):
    """scale*z_var - shift_scale*z_shift_var as a MultiPoly."""
    terms = {}
    e1 = tuple(1 if k == var else 0 for k in range(nvars))
    e2 = tuple(1 if k == shift_var else 0 for k in range(nvars))
    terms[e1] = scale
    if e2 in terms:
        terms[e1] = terms[e1] - shift_scale
    else:
        terms[e2] = -shift_scale
    return MultiPoly(nvars, order, terms)


def _cleared_block_matrix(n: int, ell: int, q: CyclotomicNumber):
    """The block matrix A_l with each row multiplied by the product of its
    entry denominators: entry ((alpha,i),(beta,j)) becomes the product of
    (q^{2j'} x_alpha - q^{2i-1} y_beta')(q^{2j'} x_alpha - q^{2i+1} y_beta')
    over all (beta', j') != (beta, j)."""
    order = q.order
    nvars = 2 * n
    qi = q.inverse()
    size = n * ell
    rows = []
    for alpha in range(n):
        for i in range(ell):
            row = []
            for beta in range(n):
                for j in range(ell):
                    entry = MultiPoly.constant(1, nvars, order)
                    for bp in range(n):
                        for jp in range(ell):
                            if (bp, jp) == (beta, j):
                                continue
                            f1 = _linear(
                                alpha, q ** (2 * jp), n + bp, q ** (2 * i) * qi,
                                nvars, order,
                            )
                            f2 = _linear(
                                alpha, q ** (2 * jp), n + bp, q ** (2 * i) * q,
                                nvars, order,
                            )
                            entry = entry * f1 * f2
                    row.append(entry)
            rows.append(row)
    return rows


def _extra_factor(n: int, ell: int, q: CyclotomicNumber) -> MultiPoly:
    """E = prod_{i,j} prod_{k=0}^{l-1} prod_{p=1}^{l-1} (q^{2k}x_i - q^{2p-1}y_j),
    the part of the row-clearing product not cancelled by the prefactor."""
    order = q.order
    nvars = 2 * n
    out = MultiPoly.constant(1, nvars, order)
    for i in range(n):
        for j in range(n):
            for k in range(ell):
                for p in range(1, ell):
                    out = out * _linear(
                        i, q ** (2 * k), n + j, q ** (2 * p - 1), nvars, order
                    )
    return out


def _delta_extended(n: int, ell: int, q: CyclotomicNumber, offset: int) -> MultiPoly:
    order = q.order
    nvars = 2 * n
    atoms = [
        MultiPoly.monomial(
            tuple(1 if k == offset + i else 0 for k in range(nvars)),
            q ** (2 * s),
            nvars,
            order,
        )
        for i in range(n)
        for s in range(ell)
    ]
    return vandermonde_product(atoms)


def fused_determinant(n: int, ell: int, q: CyclotomicNumber) -> MultiPoly:
    """The normalized partition function Z_{n,l}(x, y) of Eq. redef_Znl as an
    exact polynomial in (x_1..x_n, y_1..y_n).

    The block determinant is cleared row by row to polynomial entries, the
    determinant is computed fraction-free, and the Vandermonde and surplus
    linear factors are divided out exactly (polynomiality is §4's lemma; a
    division failure signals an arithmetic bug)."""
    if n < 1 or ell < 1:
        raise ValueError("n and ell must be >= 1")
    if not isinstance(q, CyclotomicNumber):
        q = CyclotomicNumber.from_rational(q)
    mat = _cleared_block_matrix(n, ell, q)
    size = n * ell
    det = cofactor_det(mat) if size <= 3 else bareiss_det(mat)
    result = det.exact_div(_delta_extended(n, ell, q, 0))
    result = result.exact_div(_delta_extended(n, ell, q, n))
    if ell > 1:
        result = result.exact_div(_extra_factor(n, ell, q))
    return result


def fused_determinant_point(
    n: int, ell: int, q: CyclotomicNumber, xs: Sequence, ys: Sequence
) -> CyclotomicNumber:
    """Z_{n,l} evaluated at one point, without symbolic expansion."""
    if not isinstance(q, CyclotomicNumber):
        q = CyclotomicNumber.from_rational(q)
    order = q.order
    xs = [_as_cyclo(v, order) for v in xs]
    ys = [_as_cyclo(v, order) for v in ys]
    xbar = [q ** (2 * k) * xs[i] for i in range(n) for k in range(ell)]
    ybar = [q ** (2 * k) * ys[i] for i in range(n) for k in range(ell)]
    qi = q.inverse()
    size = n * ell
    rows = []
    for alpha in range(n):
        for i in range(ell):
            row = []
            for beta in range(n):
                for j in range(ell):
                    entry = CyclotomicNumber.one(order)
                    for bp in range(n):
                        for jp in range(ell):
                            if (bp, jp) == (beta, j):
                                continue
                            u = q ** (2 * jp) * xs[alpha]
                            entry = (
                                entry
                                * (u - q ** (2 * i) * qi * ys[bp])
                                * (u - q ** (2 * i) * q * ys[bp])
                            )
                    row.append(entry)
            rows.append(row)
    det = _field_det(rows, order)
    denom = CyclotomicNumber.one(order)
    for lst in (xbar, ybar):
        for a in range(size):
            for b in range(a + 1, size):
                denom = denom * (lst[b] - lst[a])
    for i in range(n):
        for j in range(n):
            for k in range(ell):
                for p in range(1, ell):
                    denom = denom * (q ** (2 * k) * xs[i] - q ** (2 * p - 1) * ys[j])
    if denom.is_zero:
        raise ZeroDivisionError("degenerate evaluation point")
    return det * denom.inverse()


def _as_cyclo(v, order: int) -> CyclotomicNumber:
    if isinstance(v, CyclotomicNumber):
        return v.as_order(order) if v.order != order else v
    return CyclotomicNumber.from_rational(v, order)


def _field_det(rows: list[list[CyclotomicNumber]], order: int) -> CyclotomicNumber:
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = CyclotomicNumber.one(order)
    for k in range(n - 1):
        if a[k][k].is_zero:
            for s in range(k + 1, n):
                if not a[s][k].is_zero:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return CyclotomicNumber.zero(order)
        inv_prev = prev.inverse()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) * inv_prev
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


_INTERP_PRIMES = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
]


def fused_determinant_interp(n: int, ell: int, q: CyclotomicNumber) -> MultiPoly:
    """Z_{n,l} reconstructed from exact evaluations on a tensor grid, using
    the per-variable degree bound l(n-1) and homogeneity of degree l n (n-1).

    Independent cross-check of the symbolic elimination, and the route that
    makes (n,l) = (3,2) affordable: x_1 is pinned to 1 and restored from
    homogeneity."""
    if not isinstance(q, CyclotomicNumber):
        q = CyclotomicNumber.from_rational(q)
    order = q.order
    if n == 1:
        val = fused_determinant_point(n, ell, q, [1], [1])
        return MultiPoly.constant(val, 2, order)
    dmax = ell * (n - 1)
    total = ell * n * (n - 1)
    npts = dmax + 1
    free = 2 * n - 1  # all variables except x_1
    nodes = [
        [Fraction(_INTERP_PRIMES[v * npts + s]) for s in range(npts)]
        for v in range(free)
    ]
    grid_vals: dict[tuple, CyclotomicNumber] = {}
    for combo in itertools.product(range(npts), repeat=free):
        xs = [Fraction(1)] + [nodes[v][combo[v]] for v in range(n - 1)]
        ys = [nodes[n - 1 + v][combo[n - 1 + v]] for v in range(n)]
        grid_vals[combo] = fused_determinant_point(n, ell, q, xs, ys)
    # tensorized Lagrange: convert values to coefficients one axis at a time
    lagrange = [_lagrange_matrix(nodes[v]) for v in range(free)]
    coeffs = grid_vals
    for axis in range(free):
        new: dict[tuple, CyclotomicNumber] = {}
        mat = lagrange[axis]
        for key in coeffs:
            if key[axis] != 0:
                continue
            line = [
                coeffs[key[:axis] + (s,) + key[axis + 1:]] for s in range(npts)
            ]
            for k in range(npts):
                acc = CyclotomicNumber.zero(order)
                for s in range(npts):
                    w = mat[k][s]
                    if w:
                        acc = acc + w * line[s]
                new[key[:axis] + (k,) + key[axis + 1:]] = acc
        coeffs = new
    terms = {}
    for key, val in coeffs.items():
        if val.is_zero:
            continue
        deg_free = sum(key)
        e1 = total - deg_free
        if not 0 <= e1 <= dmax:
            raise ArithmeticError(
                "interpolated term violates the degree bounds; grid too small"
            )
        exp = (e1,) + key
        terms[exp] = val
    return MultiPoly(2 * n, order, terms)


def _lagrange_matrix(nodes: list[Fraction]) -> list[list[Fraction]]:
    """Row k = coefficients of z^k of each Lagrange basis polynomial."""
    npts = len(nodes)
    cols = []
    for s in range(npts):
        poly = [Fraction(1)]
        denom = Fraction(1)
        for t in range(npts):
            if t == s:
                continue
            new = [Fraction(0)] * (len(poly) + 1)
            for d, c in enumerate(poly):
                new[d] -= c * nodes[t]
                new[d + 1] += c
            poly = new
            denom *= nodes[s] - nodes[t]
        inv = 1 / denom
        cols.append([c * inv for c in poly])
    return [[cols[s][k] for s in range(npts)] for k in range(npts)]


def determinant_side_value(
    n: int, ell: int, q: CyclotomicNumber, Xs: Sequence, Ys: Sequence
) -> CyclotomicNumber:
    """The determinant-route prediction for the enumeration at amplitudes
    (X, Y): the determinant lives in rescaled variables (x, y) with
    x = X^2, y = q^{-1} Y^2, and the enumeration differs from it by the
    monomial prod (X_i Y_i)^l, the surplus linear factor E of the extended
    grid, and a constant that the caller measures."""
    if not isinstance(q, CyclotomicNumber):
        q = CyclotomicNumber.from_rational(q)
    order = q.order
    qi = q.inverse()
    xs = [_as_cyclo(x, order) * _as_cyclo(x, order) for x in Xs]
    ys = [qi * _as_cyclo(y, order) * _as_cyclo(y, order) for y in Ys]
    det = fused_determinant_point(n, ell, q, xs, ys)
    out = det
    for xi in xs:
        for yj in ys:
            for k in range(ell):
                for p in range(1, ell):
                    out = out * (q ** (2 * k) * xi - q ** (2 * p - 1) * yj)
    for v in list(Xs) + list(Ys):
        out = out * _as_cyclo(v, order) ** ell
    return out


# ---------------------------------------------------------------------------
# q-factorials, the leading coefficient, and the recursion


def q_integer(a: int, q):
    """[a] = (q^a - q^{-a})/(q - q^{-1}) = q^{a-1} + q^{a-3} + ... + q^{1-a}."""
    total = q ** (a - 1)
    for k in range(1, a):
        total = total + q ** (a - 1 - 2 * k)
    return total


def q_factorial(ell: int, q):
    """[l]! = [l][l-1]...[1]."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    out = q ** 0
    for a in range(1, ell + 1):
        out = out * q_integer(a, q)
    return out


def gamma_const(n: int, ell: int, q: CyclotomicNumber, variant: str) -> CyclotomicNumber:
    """The proportionality constant gamma_{n,l}; the two published formulas
    disagree in the q-exponent for n >= 3, so both are exposed."""
    if variant == "prop":
        expo = 2 * (n - 1) * ell * (ell - 1)
    elif variant == "appendix":
        expo = n * (n - 1) * ell * (ell - 1)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    sign = -1 if (n * (ell * (ell - 1) // 2)) % 2 else 1
    return sign * q ** expo * q_factorial(ell, q) ** n


def leading_exponents(n: int, ell: int) -> tuple[int, ...]:
    """Exponent vector of prod_i (x_i y_i)^{l(i-1)}."""
    return tuple(ell * i for i in range(n)) * 2


def leading_coefficient(n: int, ell: int, q: CyclotomicNumber) -> CyclotomicNumber:
    """gamma_{n,l} extracted from the symbolic partition function."""
    if n * ell <= 4:
        z = fused_determinant(n, ell, q)
    else:
        z = fused_determinant_interp(n, ell, q)
    return z.coefficient(leading_exponents(n, ell))


def recursion_check(n: int, ell: int, q: CyclotomicNumber):
    """The Appendix A.5 identity
    Z_{n,l}|_{x1=y1=0} = (-1)^C(l,2) q^{2(n-1)l(l-1)} [l]! prod_{i>=2}(x_i y_i)^l Z_{n-1,l};
    returns (holds, difference polynomial)."""
    if n < 2:
        raise ValueError("recursion needs n >= 2")
    if not isinstance(q, CyclotomicNumber):
        q = CyclotomicNumber.from_rational(q)
    big = fused_determinant(n, ell, q)
    restricted = big.substitute_scalar(0, 0).substitute_scalar(n, 0)
    small = fused_determinant(n - 1, ell, q)
    # re-embed Z_{n-1} into the 2n-variable ring on (x_2..x_n, y_2..y_n)
    lifted = MultiPoly.zero(2 * n, q.order)
    for exp, coef in small.terms.items():
        new_exp = (0,) + exp[: n - 1] + (0,) + exp[n - 1:]
        lifted = lifted + MultiPoly.monomial(new_exp, coef, 2 * n, q.order)
    mono_exp = [0] * (2 * n)
    for i in range(1, n):
        mono_exp[i] = ell
        mono_exp[n + i] = ell
    sign = -1 if (ell * (ell - 1) // 2) % 2 else 1
    scalar = sign * q ** (2 * (n - 1) * ell * (ell - 1)) * q_factorial(ell, q)
    expected = MultiPoly.monomial(tuple(mono_exp), scalar, 2 * n, q.order) * lifted
    diff = restricted - expected
    return diff.is_zero, diff
