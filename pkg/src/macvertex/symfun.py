"""Symmetric-function bases and the Macdonald construction.

Monomial and power-sum bases, the (p,t) scalar product, Gram-Schmidt
orthogonalization against dominance-lower monomials, the Schur bialternant,
the branch parametrization p(u), t(u) on the surface p^{l-1} t^3 = 1, and
the renormalized limit of Macdonald polynomials at the branch point u0.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from macvertex.cyclotomic import CyclotomicNumber, zeta
from macvertex.multipoly import (
    MultiPoly,
    RationalFunction,
    bareiss_det,
    univariate_pole_order,
)
from macvertex.partitions import (
    Partition,
    dominance_leq,
    dominance_lt,
    partitions_of,
)


class RankError(ValueError):
    """Raised when a basis-change matrix is degenerate for the given nvars."""


class SingularBranchError(ArithmeticError):
    """The u-parametrized inner product is identically singular (only the
    l = 1 branch, where t(u) is the constant zeta_3)."""


class DegenerateDiagramError(ArithmeticError):
    """Every renormalized Macdonald coefficient vanished at u0."""


# ---------------------------------------------------------------------------
# bases


def monomial_sym(lam: Partition, nvars: int, order: int = 1) -> MultiPoly:
    """m_lambda: one term per distinct permutation of the exponent vector."""
    if lam.nonzero_count > nvars:
        raise ValueError(
            f"partition {lam!r} has more than {nvars} nonzero parts"
        )
    exps = tuple(lam.padded(nvars)) if len(lam) <= nvars else tuple(lam.stripped().padded(nvars))
    terms = {perm: 1 for perm in set(permutations(exps))}
    return MultiPoly(nvars, order, terms)


def power_sum(lam: Partition, nvars: int, order: int = 1) -> MultiPoly:
    """p_lambda = prod_i (x_1^{lambda_i} + ... + x_n^{lambda_i})."""
    out = MultiPoly.constant(1, nvars, order)
    for part in lam:
        if part == 0:
            continue
        pk = MultiPoly(
            nvars,
            order,
            {
                tuple(part if j == i else 0 for j in range(nvars)): 1
                for i in range(nvars)
            },
        )
        out = out * pk
    return out


def z_lambda(lam: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i! over multiplicities m_i."""
    mult: dict[int, int] = {}
    for part in lam:
        if part:
            mult[part] = mult.get(part, 0) + 1
    out = 1
    for i, m in mult.items():
        out *= i ** m * math.factorial(m)
    return out


# ---------------------------------------------------------------------------
# (p,t) scalar product; variables: index 0 = p, index 1 = t

PT_VARS = 2


def _pt_poly(terms) -> MultiPoly:
    return MultiPoly(PT_VARS, 1, terms)


def pt_inner_product(lam: Partition, mu: Partition) -> RationalFunction:
    """<p_lam, p_mu>_{p,t} = delta z_lam prod (1-p^{lam_i})/(1-t^{lam_i})."""
    if lam.stripped().parts != mu.stripped().parts:
        return RationalFunction(MultiPoly.zero(PT_VARS, 1))
    num = _pt_poly({(0, 0): z_lambda(lam)})
    den = MultiPoly.constant(1, PT_VARS, 1)
    for part in lam.stripped():
        num = num * _pt_poly({(0, 0): 1, (part, 0): -1})
        den = den * _pt_poly({(0, 0): 1, (0, part): -1})
    return RationalFunction(num, den)


# ---------------------------------------------------------------------------
# basis change m <-> p


@lru_cache(maxsize=None)
def _basis_change_cached(degree: int, nvars: int):
    if degree == 0:
        unit = {(): {(): Fraction(1)}}
        return unit, unit
    index = [p.parts for p in partitions_of(degree, degree)]
    if nvars < max(len(p) for p in index):
        raise RankError(
            f"nvars={nvars} cannot host all partitions of degree {degree}"
        )
    # p_rho expanded over the monomial basis: read the coefficient of the
    # sorted exponent vector of each sigma
    p_in_m: dict[tuple, dict[tuple, Fraction]] = {}
    for rho in index:
        poly = power_sum(Partition(rho), nvars)
        row = {}
        for sigma in index:
            exp = tuple(Partition(sigma).padded(nvars))
            c = poly.coefficient(exp)
            if not c.is_zero:
                row[sigma] = c.rational_value()
        p_in_m[rho] = row
    # invert over Q by Gaussian elimination
    n = len(index)
    aug = [
        [Fraction(p_in_m[index[i]].get(index[j], 0)) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise RankError("power sums dependent: nvars too small")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    m_in_p = {
        index[i]: {
            index[j]: aug[i][n + j] for j in range(n) if aug[i][n + j] != 0
        }
        for i in range(n)
    }
    return p_in_m, m_in_p


def basis_change_monomial_powersum(degree: int, nvars: int):
    """Transition matrices between {m_lambda} and {p_lambda} at this degree.

    Returns (p_in_m, m_in_p): p_rho = sum p_in_m[rho][sigma] m_sigma and
    m_lam = sum m_in_p[lam][rho] p_rho, as nested dicts keyed by part tuples.
    """
    p_in_m, m_in_p = _basis_change_cached(degree, nvars)
    return (
        {Partition(k): {Partition(kk): vv for kk, vv in v.items()} for k, v in p_in_m.items()},
        {Partition(k): {Partition(kk): vv for kk, vv in v.items()} for k, v in m_in_p.items()},
    )


# ---------------------------------------------------------------------------
# inner-product models: where the diagonal <p_rho, p_rho> lives


class PTSymbolicModel:
    """Fully symbolic (p,t): elements are RationalFunctions in two variables."""

    nvars = PT_VARS
    order = 1

    def one(self) -> RationalFunction:
        return RationalFunction.constant(1, self.nvars, self.order)

    def scalar(self, value: Fraction) -> RationalFunction:
        return RationalFunction.constant(value, self.nvars, self.order)

    def diag(self, rho: Partition) -> RationalFunction:
        return pt_inner_product(rho, rho)


class SchurModel:
    """The p = t specialization: <p_rho, p_rho> = z_rho."""

    nvars = 1
    order = 1

    def one(self) -> RationalFunction:
        return RationalFunction.constant(1, self.nvars, self.order)

    def scalar(self, value: Fraction) -> RationalFunction:
        return RationalFunction.constant(value, self.nvars, self.order)

    def diag(self, rho: Partition) -> RationalFunction:
        return RationalFunction.constant(z_lambda(rho), self.nvars, self.order)


class BranchModel:
    """The branch substitution p = p(u), t = t(u): univariate in u over
    Q(zeta_{3(2l+1)})."""

    nvars = 1

    def __init__(self, params: "BranchParametrization"):
        self.params = params
        self.order = params.field_order

    def one(self) -> RationalFunction:
        return RationalFunction.constant(1, 1, self.order)

    def scalar(self, value: Fraction) -> RationalFunction:
        return RationalFunction.constant(value, 1, self.order)

    def diag(self, rho: Partition) -> RationalFunction:
        bp = self.params
        num = MultiPoly.constant(z_lambda(rho), 1, self.order)
        den = MultiPoly.constant(1, 1, self.order)
        for part in rho.stripped():
            num = num * (
                MultiPoly.constant(1, 1, self.order)
                - MultiPoly.monomial((bp.p_exponent * part,), 1, 1, self.order)
            )
            t_term = MultiPoly.monomial(
                (bp.t_exponent * part,), bp.omega ** part, 1, self.order
            )
            factor = MultiPoly.constant(1, 1, self.order) - t_term
            if factor.is_zero:
                raise SingularBranchError(
                    f"1 - t(u)^{part} vanishes identically on the l={bp.ell} branch"
                )
            den = den * factor
        return RationalFunction(num, den)


# ---------------------------------------------------------------------------
# Gram matrix and the Macdonald system


class ScaledGram:
    """The Gram form of the monomial basis at one degree, scaled by a common
    nonzero multiple that clears every <p_rho, p_rho> denominator.

    Scaling the inner product leaves the orthogonality equations (and hence
    the Macdonald coefficients) unchanged, and makes every Gram entry a true
    polynomial, so determinants stay fraction-free.
    """

    def __init__(self, degree: int, model):
        self.degree = degree
        self.model = model
        _, m_in_p = _basis_change_cached(degree, max(degree, 1))
        self.rows = m_in_p
        support = sorted(m_in_p.keys())
        diags = {rho: model.diag(Partition(rho)) for rho in support}
        scaled: dict[tuple, MultiPoly] = {}
        for rho in support:
            p = diags[rho].num
            for rho2 in support:
                if rho2 != rho:
                    p = p * diags[rho2].den
            scaled[rho] = p
        self.scaled_diag = scaled

    def entry(self, mu: Partition, nu: Partition) -> MultiPoly:
        """Scaled <m_mu, m_nu>; may contain Laurent terms on some branches."""
        row_mu = self.rows[mu.stripped().parts]
        row_nu = self.rows[nu.stripped().parts]
        total = MultiPoly.zero(self.model.nvars, self.model.order)
        for rho, a in row_mu.items():
            b = row_nu.get(rho)
            if b is not None:
                total = total + MultiPoly.constant(
                    a * b, self.model.nvars, self.model.order
                ) * self.scaled_diag[rho]
        return total


def _clear_row_laurent(row: list[MultiPoly]) -> list[MultiPoly]:
    """Multiply a whole equation by a monomial so all entries are true
    polynomials (a nonzero row scaling, harmless for the linear system)."""
    nvars = row[0].nvars
    shift = [0] * nvars
    for p in row:
        for exp in p.terms:
            for i, e in enumerate(exp):
                shift[i] = min(shift[i], e)
    if all(s == 0 for s in shift):
        return row
    mono = MultiPoly.monomial(tuple(-s for s in shift), 1, nvars, row[0].order)
    return [p * mono for p in row]


def macdonald_coeffs(lam: Partition, model=None) -> dict[Partition, RationalFunction]:
    """Coefficients c_{lam,mu} of P_lam = m_lam + sum_{mu<lam} c m_mu,
    determined by orthogonality to every m_nu with nu < lam.

    Solved by Cramer's rule on the scaled Gram system with fraction-free
    Bareiss determinants.
    """
    if model is None:
        model = PTSymbolicModel()
    lam = lam.stripped()
    d = lam.size
    below = [
        p for p in partitions_of(d, d) if dominance_lt(p, lam)
    ]
    out: dict[Partition, RationalFunction] = {lam: model.one()}
    if not below:
        return out
    gram = ScaledGram(d, model)
    k = len(below)
    mat: list[list[MultiPoly]] = []
    rhs: list[MultiPoly] = []
    for nu in below:
        row = [gram.entry(mu, nu) for mu in below] + [-gram.entry(lam, nu)]
        row = _clear_row_laurent(row)
        mat.append(row[:k])
        rhs.append(row[k])
    det_main = bareiss_det(mat)
    if det_main.is_zero:
        raise ArithmeticError("singular Gram system; use the u-parametrized path")
    for j, mu in enumerate(below):
        replaced = [
            [rhs[i] if jj == j else mat[i][jj] for jj in range(k)]
            for i in range(k)
        ]
        out[mu] = RationalFunction(bareiss_det(replaced), det_main)
    return out


class SymFunExpansion:
    """A symmetric polynomial as a map from Partition to coefficient over
    the monomial basis; coefficients are RationalFunctions (parameters) or
    CyclotomicNumbers (specialized)."""

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: dict):
        clean = {}
        for key, val in coeffs.items():
            key = key.stripped() if isinstance(key, Partition) else Partition(key).stripped()
            if key.size != degree:
                raise ValueError(f"{key!r} is not a partition of {degree}")
            if key.nonzero_count > nvars:
                raise ValueError(f"{key!r} needs more than {nvars} variables")
            is_zero = val.is_zero
            if not is_zero:
                clean[key] = val
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunExpansion is immutable")

    def __eq__(self, other):
        if not isinstance(other, SymFunExpansion):
            return NotImplemented
        if self.nvars != other.nvars or self.degree != other.degree:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        for key in keys:
            a, b = self.coeffs.get(key), other.coeffs.get(key)
            if a is None or b is None:
                return False
            if not (a == b):
                return False
        return True

    def to_multipoly(self, order: int | None = None) -> MultiPoly:
        """Expand into the ambient polynomial ring; requires cyclotomic
        (specialized) coefficients."""
        if order is None:
            orders = {c.order for c in self.coeffs.values()}
            order = orders.pop() if orders else 1
        out = MultiPoly.zero(self.nvars, order)
        for lam, coef in self.coeffs.items():
            if isinstance(coef, RationalFunction):
                if coef.num.total_degree() == 0 and coef.den.total_degree() == 0:
                    coef = coef.num.coefficient((0,) * coef.nvars) * coef.den.coefficient(
                        (0,) * coef.nvars
                    ).inverse()
                    coef = CyclotomicNumber.from_rational(
                        coef.rational_value(), order
                    ) if coef.is_rational else coef.as_order(order)
                else:
                    raise TypeError(
                        "expansion with parameter coefficients; specialize first"
                    )
            out = out + MultiPoly.constant(coef.as_order(order), self.nvars, order) * monomial_sym(
                lam, self.nvars, order
            )
        return out

    def to_json(self) -> dict:
        items = []
        for lam in sorted(self.coeffs, key=lambda p: p.parts):
            val = self.coeffs[lam]
            if isinstance(val, CyclotomicNumber):
                ser = val.to_json()
            else:
                ser = {
                    "num": val.num.to_json(),
                    "den": val.den.to_json(),
                }
            items.append({"partition": list(lam.parts), "value": ser})
        return {"degree": self.degree, "nvars": self.nvars, "coeffs": items}

    @staticmethod
    def from_json(data: dict) -> "SymFunExpansion":
        coeffs = {}
        for item in data["coeffs"]:
            val = item["value"]
            if "order" in val:
                coeffs[Partition(item["partition"])] = CyclotomicNumber.from_json(val)
            else:
                coeffs[Partition(item["partition"])] = RationalFunction(
                    MultiPoly.from_json(val["num"]), MultiPoly.from_json(val["den"])
                )
        return SymFunExpansion(int(data["nvars"]), int(data["degree"]), coeffs)


def macdonald(lam: Partition, nvars: int, model=None) -> SymFunExpansion:
    """P_lam(x; p, t) as a monomial-basis expansion with coefficients in the
    model's fraction field (symbolic (p,t) by default)."""
    lam = lam.stripped()
    if lam.nonzero_count > nvars:
        raise ValueError(f"{lam!r} does not fit in {nvars} variables")
    coeffs = macdonald_coeffs(lam, model)
    return SymFunExpansion(nvars, lam.size, coeffs)


def symfun_from_multipoly(p: MultiPoly) -> SymFunExpansion:
    """Read a symmetric homogeneous polynomial into the monomial basis;
    raises if the reconstruction does not reproduce the input."""
    if not p.is_homogeneous():
        raise ValueError("expected a homogeneous polynomial")
    d = p.total_degree()
    coeffs: dict[Partition, CyclotomicNumber] = {}
    for lam in partitions_of(d, p.nvars):
        c = p.coefficient(tuple(lam.padded(p.nvars)))
        if not c.is_zero:
            coeffs[lam] = c
    exp = SymFunExpansion(p.nvars, d, coeffs)
    if exp.to_multipoly(p.order) != p:
        raise ValueError("polynomial is not symmetric")
    return exp


# ---------------------------------------------------------------------------
# Schur polynomials


def schur(lam: Partition, nvars: int, order: int = 1) -> MultiPoly:
    """Bialternant S_lam = det|x_i^{m-j+lam_j}| / det|x_i^{m-j}|."""
    lam = lam.stripped()
    if lam.nonzero_count > nvars:
        raise ValueError(f"{lam!r} does not fit in {nvars} variables")
    padded = lam.padded(nvars)
    powers_num = [nvars - 1 - j + padded[j] for j in range(nvars)]
    powers_den = [nvars - 1 - j for j in range(nvars)]

    def alt_det(powers):
        terms: dict[tuple, CyclotomicNumber] = {}
        for sigma in permutations(range(nvars)):
            sign = _perm_sign(sigma)
            exp = [0] * nvars
            for i in range(nvars):
                exp[sigma[i]] = powers[i]
            exp = tuple(exp)
            cur = terms.get(exp)
            add = CyclotomicNumber.from_rational(sign, order)
            terms[exp] = add if cur is None else cur + add
        return MultiPoly(nvars, order, {e: c for e, c in terms.items() if not c.is_zero})

    return alt_det(powers_num).exact_div(alt_det(powers_den))


def _perm_sign(sigma: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _gt_count(parts: tuple[int, ...], m: int) -> int:
    """Number of Gelfand-Tsetlin patterns: s_lambda(1^m) by the branching
    rule over interlacing partitions."""
    parts = tuple(p for p in parts if p)
    if not parts:
        return 1
    if m <= 0:
        return 0
    if m == 1:
        return 1 if len(parts) == 1 else 0

    total = 0

    def build(i: int, prev_cap: int, mu: list[int]):
        nonlocal total
        if i == len(parts):
            total += _gt_count(tuple(mu), m - 1)
            return
        low = parts[i + 1] if i + 1 < len(parts) else 0
        high = min(parts[i], prev_cap)
        for v in range(high, low - 1, -1):
            mu.append(v)
            build(i + 1, v, mu)
            mu.pop()

    build(0, parts[0], [])
    return total


def schur_ones(lam: Partition, m: int) -> int:
    """s_lambda(1^m), counted by Gelfand-Tsetlin patterns (no determinants)."""
    return _gt_count(tuple(lam.stripped()), m)


# ---------------------------------------------------------------------------
# branch parametrization


class BranchParametrization:
    """The curve (p(u), t(u)) on the surface p^{l-1} t^3 = 1 through the
    combinatorial point, with p(u0) = q^2 and t(u0) = q for q = zeta_{2l+1}.

    p(u) = u^{p_exponent}; t(u) = omega * u^{t_exponent}; all exact in
    Q(zeta_{3(2l+1)}).
    """

    __slots__ = (
        "ell",
        "m",
        "p_exponent",
        "t_exponent",
        "omega",
        "u0",
        "field_order",
        "q",
    )

    def __init__(self, ell: int):
        if ell < 1:
            raise ValueError("ell must be >= 1")
        m = math.gcd(3, ell - 1)
        big = 3 * (2 * ell + 1)
        p_exp = 3 // m
        t_exp = -(ell - 1) // m
        omega = (
            CyclotomicNumber.one(big) if m == 1 else zeta(big, big // 3)
        )
        residue = ell % 3
        if residue == 1:
            u0 = zeta(big, 6)  # e^{4 pi i/(2l+1)}
        elif residue == 0:
            u0 = zeta(big, 2) * zeta(big, big // 3)  # e^{4 pi i/big} e^{2 pi i/3}
        else:
            u0 = zeta(big, 2) * zeta(big, -(big // 3))  # e^{4 pi i/big} e^{-2 pi i/3}
        q = zeta(big, 3)  # zeta_{2l+1} embedded
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "p_exponent", p_exp)
        object.__setattr__(self, "t_exponent", t_exp)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "u0", u0)
        object.__setattr__(self, "field_order", big)
        object.__setattr__(self, "q", q)
        if not (self.p_at(u0) == q ** 2 and self.t_at(u0) == q):
            raise ArithmeticError(
                f"published branch phase fails for ell={ell}: "
                f"p(u0)={self.p_at(u0)!r}, t(u0)={self.t_at(u0)!r}, q={q!r}"
            )
        # p(u)^{l-1} t(u)^3 = omega^3 u^{(l-1)p_exp + 3 t_exp} must be 1
        if (ell - 1) * p_exp + 3 * t_exp != 0 or not (omega ** 3 == 1):
            raise ArithmeticError("branch does not lie on the wheel surface")

    def __setattr__(self, name, value):
        raise AttributeError("BranchParametrization is immutable")

    def p_at(self, u: CyclotomicNumber) -> CyclotomicNumber:
        return u ** self.p_exponent

    def t_at(self, u: CyclotomicNumber) -> CyclotomicNumber:
        return self.omega * u ** self.t_exponent


def branch_params(ell: int) -> BranchParametrization:
    return BranchParametrization(ell)


# ---------------------------------------------------------------------------
# the renormalized limit at u0


def _t_order_and_reduce(poly: MultiPoly, t_value: CyclotomicNumber):
    """Vanishing order of a (p,t)-polynomial along t = t_value, and the
    polynomial with (t - t_value)^order divided out."""
    order_count = 0
    linear = MultiPoly(
        PT_VARS, poly.order, {(0, 1): CyclotomicNumber.one(poly.order), (0, 0): -t_value}
    )
    while not poly.is_zero and poly.substitute_scalar(1, t_value).is_zero:
        poly = poly.exact_div(linear)
        order_count += 1
    return order_count, poly


def _pt_to_u(poly: MultiPoly, bp: BranchParametrization) -> MultiPoly:
    """Ring map Q[p,t] -> Q(zeta)[u, u^-1]: p -> u^pe, t -> omega u^te."""
    out: dict[tuple, CyclotomicNumber] = {}
    for (a, b), coef in poly.terms.items():
        c = coef.as_order(bp.field_order) * bp.omega ** b
        e = (a * bp.p_exponent + b * bp.t_exponent,)
        if e in out:
            s = out[e] + c
            if s.is_zero:
                del out[e]
            else:
                out[e] = s
        else:
            out[e] = c
    return MultiPoly(1, bp.field_order, out)


def _branch_coeffs(lam: Partition, bp: BranchParametrization) -> dict[Partition, RationalFunction]:
    """Macdonald coefficients restricted to the branch, as univariate
    rational functions of u."""
    try:
        return macdonald_coeffs(lam, BranchModel(bp))
    except SingularBranchError:
        pass
    # l = 1: t(u) is the constant zeta_3 and some <p_rho, p_rho> blow up.
    # Compute symbolically in (p,t), then restrict to the line t = omega,
    # clearing the common power of (t - omega) from every numerator and the
    # shared denominator first.
    symbolic = macdonald_coeffs(lam, PTSymbolicModel())
    omega = bp.omega
    out: dict[Partition, RationalFunction] = {}
    for mu, frac in symbolic.items():
        num = frac.num.map_coefficients(lambda c: c.as_order(bp.field_order), bp.field_order)
        den = frac.den.map_coefficients(lambda c: c.as_order(bp.field_order), bp.field_order)
        ord_num, num = _t_order_and_reduce(num, omega)
        ord_den, den = _t_order_and_reduce(den, omega)
        if ord_num < ord_den:
            raise ArithmeticError(
                f"coefficient of {mu!r} has a pole along the whole l=1 branch"
            )
        num_u = _pt_to_u(num.substitute_scalar(1, omega), bp)
        den_u = _pt_to_u(den.substitute_scalar(1, omega), bp)
        if ord_num > ord_den:
            num_u = MultiPoly.zero(1, bp.field_order)
        out[mu] = RationalFunction(num_u, den_u)
    return out


def _shifted_value_at(
    frac: RationalFunction, u0: CyclotomicNumber, shift: int
) -> CyclotomicNumber:
    """Value of (u - u0)^shift * frac at u = u0 (zero when the total order
    is positive; the order is never negative when shift = max pole order)."""
    order = univariate_pole_order(frac, u0)
    total = order + shift
    if total > 0:
        return CyclotomicNumber.zero(frac.order)
    if total < 0:
        raise ArithmeticError("renormalization shift smaller than pole order")
    num, den = frac.num, frac.den
    linear = MultiPoly(
        1, frac.order, {(1,): CyclotomicNumber.one(frac.order), (0,): -u0}
    )
    # make both operands true polynomials before dividing
    from macvertex.multipoly import _laurent_clear

    num, den = _laurent_clear(num, den)
    while num.eval([u0]).is_zero:
        num = num.exact_div(linear)
    while den.eval([u0]).is_zero:
        den = den.exact_div(linear)
    return num.eval([u0]) * den.eval([u0]).inverse()


def macdonald_at_combinatorial_point(
    lam: Partition, ell: int, nvars: int
) -> tuple[SymFunExpansion, int]:
    """The renormalized Macdonald polynomial at the branch point:
    coefficients of (u - u0)^N P_lam(z; u) at u = u0, over Q(zeta_{3(2l+1)}).

    Returns (expansion, N) where N is the maximal pole order over all
    Gram-Schmidt coefficients (N = 0 when all are regular).
    """
    lam = lam.stripped()
    if lam.nonzero_count > nvars:
        raise ValueError(f"{lam!r} does not fit in {nvars} variables")
    bp = branch_params(ell)
    coeffs_u = _branch_coeffs(lam, bp)
    max_pole = 0
    for frac in coeffs_u.values():
        if frac.is_zero:
            continue
        order = univariate_pole_order(frac, bp.u0)
        max_pole = max(max_pole, -order)
    shift = max_pole
    values: dict[Partition, CyclotomicNumber] = {}
    for mu, frac in coeffs_u.items():
        if frac.is_zero:
            continue
        val = _shifted_value_at(frac, bp.u0, shift)
        if not val.is_zero:
            values[mu] = val
    if not values:
        raise DegenerateDiagramError(
            f"every renormalized coefficient of {lam!r} vanishes at u0"
        )
    return SymFunExpansion(nvars, lam.size, values), shift
