"""Sparse multivariate Laurent polynomials over cyclotomic coefficients,
rational functions, and fraction-free determinants."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from macvertex.cyclotomic import CyclotomicNumber, OrderMismatchError

Coefficient = Union[int, Fraction, CyclotomicNumber]


class DivisibilityError(ArithmeticError):
    """Exact division failed; carries the nonzero remainder as witness."""

    def __init__(self, message: str, remainder: "MultiPoly"):
        super().__init__(message)
        self.remainder = remainder


class EvaluationError(ArithmeticError):
    """Raised when a zero coordinate meets a negative exponent."""


def grlex_key(exponents: tuple[int, ...]) -> tuple:
    """Sort key for graded-lexicographic term order (ascending)."""
    return (sum(exponents), exponents)


class MultiPoly:
    """Sparse polynomial in `nvars` variables over Q(zeta_order).

    Negative exponents (Laurent terms) are allowed; operations that require
    true polynomials check for them explicitly.
    """

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: Mapping[tuple, Coefficient]):
        clean: dict[tuple[int, ...], CyclotomicNumber] = {}
        for exp, coef in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(
                    f"exponent vector {exp} has length {len(exp)}, expected {nvars}"
                )
            if not isinstance(coef, CyclotomicNumber):
                coef = CyclotomicNumber.from_rational(coef, order)
            elif coef.order != order:
                raise OrderMismatchError(
                    f"coefficient order {coef.order} != ring order {order}"
                )
            if not coef.is_zero:
                if exp in clean:
                    coef = clean[exp] + coef
                    if coef.is_zero:
                        del clean[exp]
                        continue
                clean[exp] = coef
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(nvars: int, order: int = 1) -> "MultiPoly":
        return MultiPoly(nvars, order, {})

    @staticmethod
    def constant(value: Coefficient, nvars: int, order: int = 1) -> "MultiPoly":
        if isinstance(value, CyclotomicNumber):
            order = value.order
        return MultiPoly(nvars, order, {(0,) * nvars: value})

    @staticmethod
    def variable(index: int, nvars: int, order: int = 1) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} vars")
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        return MultiPoly(nvars, order, {exp: 1})

    @staticmethod
    def monomial(
        exponents: Sequence[int], coef: Coefficient, nvars: int, order: int = 1
    ) -> "MultiPoly":
        if isinstance(coef, CyclotomicNumber):
            order = coef.order
        return MultiPoly(nvars, order, {tuple(exponents): coef})

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_laurent(self) -> bool:
        return any(e < 0 for exp in self.terms for e in exp)

    def is_homogeneous(self) -> bool:
        degs = {sum(exp) for exp in self.terms}
        return len(degs) <= 1

    def total_degree(self) -> int:
        """Max total degree; 0 for the zero polynomial by convention."""
        if not self.terms:
            return 0
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return 0
        return max(exp[var] for exp in self.terms)

    def leading_term(self) -> tuple[tuple[int, ...], CyclotomicNumber]:
        """Leading term in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def coefficient(self, exponents: Sequence[int]) -> CyclotomicNumber:
        """Coefficient of the given monomial (zero if absent)."""
        exp = tuple(int(e) for e in exponents)
        if len(exp) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        return self.terms.get(exp, CyclotomicNumber.zero(self.order))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            if other.order != self.order:
                raise OrderMismatchError(
                    f"ring orders {self.order} and {other.order} differ"
                )
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return MultiPoly.constant(other, self.nvars, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            if exp in terms:
                s = terms[exp] + coef
                if s.is_zero:
                    del terms[exp]
                else:
                    terms[exp] = s
            else:
                terms[exp] = coef
        out = MultiPoly.zero(self.nvars, self.order)
        object.__setattr__(out, "terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.zero(self.nvars, self.order)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], CyclotomicNumber] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if exp in terms:
                    s = terms[exp] + prod
                    if s.is_zero:
                        del terms[exp]
                    else:
                        terms[exp] = s
                else:
                    terms[exp] = prod
        out = MultiPoly.zero(self.nvars, self.order)
        object.__setattr__(out, "terms", terms)
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self.terms) == 1:
                exp, coef = next(iter(self.terms.items()))
                return MultiPoly.monomial(
                    tuple(e * exponent for e in exp),
                    coef ** exponent,
                    self.nvars,
                    self.order,
                )
            raise ValueError("negative powers require a monomial (Laurent inverse)")
        result = MultiPoly.constant(1, self.nvars, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = self._coerce(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.order, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"MultiPoly({self.nvars} vars, 0)"
        parts = []
        for exp in sorted(self.terms, key=grlex_key, reverse=True):
            mono = "*".join(
                f"z{i}^{e}" if e != 1 else f"z{i}"
                for i, e in enumerate(exp)
                if e
            )
            parts.append(f"({self.terms[exp]!r})*{mono}" if mono else f"({self.terms[exp]!r})")
        return f"MultiPoly({self.nvars} vars, {' + '.join(parts[:6])}{'...' if len(parts) > 6 else ''})"

    # -- evaluation and substitution ----------------------------------------

    def _coerce_value(self, value) -> CyclotomicNumber:
        if isinstance(value, CyclotomicNumber):
            if value.order != self.order:
                raise OrderMismatchError(
                    f"point order {value.order} != ring order {self.order}"
                )
            return value
        return CyclotomicNumber.from_rational(value, self.order)

    def eval(self, point: Sequence) -> CyclotomicNumber:
        """Exact value at a point of Q(zeta_order)^nvars."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        vals = [self._coerce_value(v) for v in point]
        total = CyclotomicNumber.zero(self.order)
        cache: list[dict[int, CyclotomicNumber]] = [dict() for _ in range(self.nvars)]
        for exp, coef in self.terms.items():
            term = coef
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                if vals[i].is_zero and e < 0:
                    raise EvaluationError(
                        f"zero coordinate {i} raised to negative exponent {e}"
                    )
                if e not in cache[i]:
                    cache[i][e] = vals[i] ** e
                term = term * cache[i][e]
            total = total + term
        return total

    def substitute_scalar(self, var: int, value) -> "MultiPoly":
        """Replace one variable by a scalar; the variable slot remains."""
        val = self._coerce_value(value)
        terms: dict[tuple[int, ...], CyclotomicNumber] = {}
        for exp, coef in self.terms.items():
            e = exp[var]
            if e == 0:
                new_coef = coef
            elif val.is_zero:
                if e < 0:
                    raise EvaluationError(
                        f"zero substituted into negative exponent {e}"
                    )
                continue
            else:
                new_coef = coef * val ** e
            new_exp = exp[:var] + (0,) + exp[var + 1:]
            if new_exp in terms:
                s = terms[new_exp] + new_coef
                if s.is_zero:
                    del terms[new_exp]
                else:
                    terms[new_exp] = s
            else:
                terms[new_exp] = new_coef
        out = MultiPoly.zero(self.nvars, self.order)
        object.__setattr__(out, "terms", terms)
        return out

    def substitute_var(self, src: int, scale, dst: int) -> "MultiPoly":
        """Replace z_src by scale * z_dst."""
        val = self._coerce_value(scale)
        terms: dict[tuple[int, ...], CyclotomicNumber] = {}
        for exp, coef in self.terms.items():
            e = exp[src]
            new_coef = coef if e == 0 else coef * val ** e
            new_exp = list(exp)
            new_exp[src] = 0
            new_exp[dst] += e
            new_exp = tuple(new_exp)
            if new_exp in terms:
                s = terms[new_exp] + new_coef
                if s.is_zero:
                    del terms[new_exp]
                else:
                    terms[new_exp] = s
            else:
                terms[new_exp] = new_coef
        out = MultiPoly.zero(self.nvars, self.order)
        object.__setattr__(out, "terms", terms)
        return out

    def permute_vars(self, perm: Sequence[int]) -> "MultiPoly":
        """Apply z_i -> z_{perm[i]}."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("not a permutation")
        terms = {}
        for exp, coef in self.terms.items():
            new_exp = [0] * self.nvars
            for i, e in enumerate(exp):
                new_exp[perm[i]] = e
            terms[tuple(new_exp)] = coef
        out = MultiPoly.zero(self.nvars, self.order)
        object.__setattr__(out, "terms", terms)
        return out

    def map_coefficients(self, fn, order: int | None = None) -> "MultiPoly":
        new_order = self.order if order is None else order
        terms = {}
        for exp, coef in self.terms.items():
            c = fn(coef)
            if not isinstance(c, CyclotomicNumber):
                c = CyclotomicNumber.from_rational(c, new_order)
            if not c.is_zero:
                terms[exp] = c
        return MultiPoly(self.nvars, new_order, terms)

    def embed_order(self, target: int) -> "MultiPoly":
        """Embed all coefficients into Q(zeta_target)."""
        return self.map_coefficients(lambda c: c.as_order(target), target)

    # -- division -----------------------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact multivariate division in graded-lex order.

        Both operands must be true polynomials (no Laurent terms); raises
        DivisibilityError with the remainder if the division is not exact.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_laurent or divisor.is_laurent:
            raise ValueError("exact division requires true polynomials")
        if self.is_zero:
            return self
        lead_exp, lead_coef = divisor.leading_term()
        lead_inv = lead_coef.inverse()
        quot_terms: dict[tuple[int, ...], CyclotomicNumber] = {}
        rem = self
        while not rem.is_zero:
            r_exp, r_coef = rem.leading_term()
            t_exp = tuple(a - b for a, b in zip(r_exp, lead_exp))
            if any(e < 0 for e in t_exp):
                raise DivisibilityError("division not exact", rem)
            t_coef = r_coef * lead_inv
            quot_terms[t_exp] = t_coef
            rem = rem - MultiPoly.monomial(t_exp, t_coef, self.nvars, self.order) * divisor
        return MultiPoly(self.nvars, self.order, quot_terms)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for exp in sorted(self.terms, key=grlex_key):
            terms.append(
                {"exp": list(exp), "coef": self.terms[exp].to_json()["coeffs"]}
            )
        return {"nvars": self.nvars, "order": self.order, "terms": terms}

    @staticmethod
    def from_json(data: dict) -> "MultiPoly":
        nvars = int(data["nvars"])
        order = int(data["order"])
        terms = {}
        for item in data["terms"]:
            coef = CyclotomicNumber.from_json(
                {"order": order, "coeffs": item["coef"]}
            )
            terms[tuple(item["exp"])] = coef
        return MultiPoly(nvars, order, terms)


def vandermonde_product(atoms: Sequence[MultiPoly]) -> MultiPoly:
    """prod_{i<j} (v_j - v_i); 1 for a single atom."""
    if not atoms:
        raise ValueError("need at least one variable")
    out = MultiPoly.constant(1, atoms[0].nvars, atoms[0].order)
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            out = out * (atoms[j] - atoms[i])
    return out


class RationalFunction:
    """Quotient of two MultiPolys over the same ring.

    Normalization: monomial denominators are divided out (exact in the
    Laurent ring); univariate true-polynomial pairs are reduced by their gcd
    and the denominator is made monic; otherwise the denominator is scaled
    so its graded-lex leading coefficient is 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, reduce: bool = True):
        if den is None:
            den = MultiPoly.constant(1, num.nvars, num.order)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.nvars != den.nvars or num.order != den.order:
            raise ValueError("numerator and denominator live in different rings")
        if reduce:
            num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def order(self) -> int:
        return self.num.order

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == MultiPoly.constant(1, self.nvars, self.order)

    def as_poly(self) -> MultiPoly:
        if self.den.total_degree() == 0 and len(self.den.terms) == 1:
            c = next(iter(self.den.terms.values()))
            return self.num.map_coefficients(lambda x: x * c.inverse())
        q = self.num.exact_div(self.den)
        return q

    @staticmethod
    def from_poly(p: MultiPoly) -> "RationalFunction":
        return RationalFunction(p)

    @staticmethod
    def constant(value, nvars: int, order: int = 1) -> "RationalFunction":
        return RationalFunction(MultiPoly.constant(value, nvars, order))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return RationalFunction.constant(other, self.nvars, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero:
            raise ZeroDivisionError("inverting zero rational function")
        return RationalFunction(self.den, self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable")

    def eval(self, point) -> CyclotomicNumber:
        d = self.den.eval(point)
        if d.is_zero:
            raise EvaluationError("denominator vanishes at point")
        return self.num.eval(point) * d.inverse()

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"


def _laurent_clear(p: MultiPoly, q: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Multiply both by a single monomial so each becomes a true polynomial."""
    shift = [0] * p.nvars
    for i in range(p.nvars):
        m = 0
        for poly in (p, q):
            for exp in poly.terms:
                m = min(m, exp[i])
        shift[i] = -m
    if all(s == 0 for s in shift):
        return p, q
    mono = MultiPoly.monomial(shift, 1, p.nvars, p.order)
    return p * mono, q * mono


def _univariate_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd of univariate true polynomials via Euclid."""
    def to_list(p):
        n = p.total_degree()
        out = [CyclotomicNumber.zero(p.order)] * (n + 1)
        for exp, c in p.terms.items():
            out[exp[0]] = c
        return out

    def trim(lst):
        while lst and lst[-1].is_zero:
            lst.pop()
        return lst

    ra, rb = trim(to_list(a)), trim(to_list(b))
    while rb:
        lead = rb[-1].inverse()
        db = len(rb) - 1
        while len(ra) - 1 >= db and ra:
            c = ra[-1] * lead
            shift = len(ra) - 1 - db
            for j in range(db + 1):
                ra[shift + j] = ra[shift + j] - c * rb[j]
            trim(ra)
        ra, rb = rb, ra
    lead_inv = ra[-1].inverse()
    order = a.order
    return MultiPoly(1, order, {(i,): c * lead_inv for i, c in enumerate(ra)})


def _normalize(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    num, den = _laurent_clear(num, den)
    if num.is_zero:
        return num, MultiPoly.constant(1, num.nvars, num.order)
    if len(den.terms) == 1:
        exp, coef = next(iter(den.terms.items()))
        inv = coef.inverse()
        mono = MultiPoly.monomial(tuple(-e for e in exp), inv, num.nvars, num.order)
        out = num * mono
        out, one = _laurent_clear(out, MultiPoly.constant(1, num.nvars, num.order))
        return out, one
    if num.nvars == 1:
        g = _univariate_gcd(num, den)
        if g.total_degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    _, lead = den.leading_term()
    inv = lead.inverse()
    num = num.map_coefficients(lambda c: c * inv)
    den = den.map_coefficients(lambda c: c * inv)
    return num, den


class PolyMatrix:
    """Dense matrix with RationalFunction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        template = None
        for row in entries:
            for e in row:
                if isinstance(e, (RationalFunction, MultiPoly)):
                    template = (e.nvars, e.order)
                    break
            if template:
                break
        nvars, order = template if template else (1, 1)

        def coerce(e):
            if isinstance(e, RationalFunction):
                return e
            if isinstance(e, MultiPoly):
                return RationalFunction(e)
            return RationalFunction.constant(e, nvars, order)

        grid = []
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            grid.append([coerce(e) for e in row])
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")


def bareiss_det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free Bareiss determinant of a square MultiPoly matrix.

    All intermediate divisions are exact in the polynomial ring.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 1:
        return matrix[0][0]
    a = [list(row) for row in matrix]
    nvars, order = a[0][0].nvars, a[0][0].order
    one = MultiPoly.constant(1, nvars, order)
    prev = one
    sign = 1
    for k in range(n - 1):
        if a[k][k].is_zero:
            for swap in range(k + 1, n):
                if not a[swap][k].is_zero:
                    a[k], a[swap] = a[swap], a[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(nvars, order)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = val.exact_div(prev)
            a[i][k] = MultiPoly.zero(nvars, order)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def cofactor_det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Cofactor-expansion determinant (oracle for small matrices)."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    nvars, order = matrix[0][0].nvars, matrix[0][0].order
    total = MultiPoly.zero(nvars, order)
    for j in range(n):
        if matrix[0][j].is_zero:
            continue
        minor = [
            [matrix[i][jj] for jj in range(n) if jj != j] for i in range(1, n)
        ]
        term = matrix[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_fraction_free(m: PolyMatrix) -> RationalFunction:
    """Exact determinant of a matrix of rational functions.

    Each row is scaled by the product of its entry denominators, the
    resulting polynomial matrix is eliminated fraction-free, and the scale
    is divided back out.
    """
    if m.rows != m.cols:
        raise ValueError(f"matrix is {m.rows}x{m.cols}, not square")
    n = m.rows
    if n == 0:
        raise ValueError("empty matrix")
    first = m.entries[0][0]
    nvars, order = first.nvars, first.order
    scale = MultiPoly.constant(1, nvars, order)
    poly_rows: list[list[MultiPoly]] = []
    for row in m.entries:
        row_den = MultiPoly.constant(1, nvars, order)
        for e in row:
            row_den = row_den * e.den
        poly_row = []
        for j, e in enumerate(row):
            others = MultiPoly.constant(1, nvars, order)
            for jj, e2 in enumerate(row):
                if jj != j:
                    others = others * e2.den
            poly_row.append(e.num * others)
        poly_rows.append(poly_row)
        scale = scale * row_den
    det_poly = bareiss_det(poly_rows)
    return RationalFunction(det_poly, scale)


def univariate_pole_order(f: RationalFunction, at: CyclotomicNumber) -> int:
    """Order of vanishing (positive) or pole (negative) of univariate f at
    u = at, by exact repeated division by (u - at)."""
    if f.nvars != 1:
        raise ValueError("pole order requires a univariate rational function")
    if f.num.is_zero:
        raise ValueError("order of the zero function is undefined")
    at = at if isinstance(at, CyclotomicNumber) else CyclotomicNumber.from_rational(
        at, f.order
    )
    num, den = _laurent_clear(f.num, f.den)

    def vanishing_order(p: MultiPoly) -> int:
        linear = MultiPoly(
            1, p.order, {(1,): CyclotomicNumber.one(p.order), (0,): -at}
        )
        count = 0
        while p.eval([at]).is_zero:
            p = p.exact_div(linear)
            count += 1
        return count

    return vanishing_order(num) - vanishing_order(den)
