"""Wheel-condition substitutions and the V_n membership checks.

A polynomial in z = (x_1..x_n, y_1..y_n) obeys the (r,k)-wheel condition if
it vanishes whenever k+1 of its variables form a chain
z_{i_{alpha+1}} = t p^{s_alpha} z_{i_alpha} with non-negative shifts summing
to at most r-1.  All checks are exact: a substitution either is identically
zero or it is not.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from macvertex.cyclotomic import CyclotomicNumber
from macvertex.multipoly import MultiPoly


class WheelPreconditionError(ValueError):
    """The parameter relation p^{r-1} t^{k+1} = 1 does not hold."""


@dataclass(frozen=True)
class WheelChain:
    """One substitution pattern: 1-based variable positions i_1 < ... <
    i_{k+1} and shifts s_1..s_k with sum <= r-1."""

    indices: tuple[int, ...]
    shifts: tuple[int, ...]
    r: int
    k: int

    def __post_init__(self):
        if len(self.indices) != self.k + 1 or len(self.shifts) != self.k:
            raise ValueError("chain has wrong arity")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("indices must be strictly increasing")
        if any(s < 0 for s in self.shifts) or sum(self.shifts) > self.r - 1:
            raise ValueError("shifts violate the total bound")

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "shifts": list(self.shifts),
            "r": self.r,
            "k": self.k,
        }


@dataclass
class WheelReport:
    total_chains: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "total_chains": self.total_chains,
            "pass": self.passed,
            "failures": [
                {
                    "chain": chain.to_json(),
                    "witness": None
                    if point is None
                    else [str(v) for v in point],
                    "value": repr(value),
                }
                for chain, point, value in self.failures
            ],
        }


def wheel_chains(
    r: int, k: int, nvars: int, base_shift: int = 0
) -> list[WheelChain]:
    """Every chain: index tuples 1 <= i_1 < ... < i_{k+1} <= nvars combined
    with every shift pattern of total at most r-1-base_shift."""
    if r < 1 or k < 1:
        raise ValueError("wheel parameters require r >= 1 and k >= 1")
    if nvars < k + 1:
        raise ValueError("need at least k+1 variables")
    budget = r - 1 - base_shift
    shift_patterns = [
        s
        for s in itertools.product(range(budget + 1), repeat=k)
        if sum(s) <= budget
    ]
    return [
        WheelChain(idx, s, r, k)
        for idx in itertools.combinations(range(1, nvars + 1), k + 1)
        for s in shift_patterns
    ]


_SYMBOLIC_TERM_CAP = 20_000


def check_wheel(
    poly: MultiPoly,
    r: int,
    k: int,
    p: CyclotomicNumber,
    t: CyclotomicNumber,
    trials: int = 0,
    seed: int = 0,
    force: bool = False,
) -> WheelReport:
    """Restrict `poly` to every (r,k)-wheel chain and assert vanishing.

    By default the restriction is symbolic (free variables remain); when the
    polynomial is too large, or `trials` > 0 demands it, seeded rational
    evaluation is used instead, with enough trials to be definitive by the
    interpolation bound."""
    if not force:
        check = p ** (r - 1) * t ** (k + 1)
        if not check.is_rational or check.rational_value() != 1:
            raise WheelPreconditionError(
                f"p^{r - 1} t^{k + 1} != 1 (got {check!r})"
            )
    chains = wheel_chains(r, k, poly.nvars)
    symbolic = trials == 0 and len(poly.terms) <= _SYMBOLIC_TERM_CAP
    if trials == 0:
        degree_bound = max(
            (poly.degree_in(v) for v in range(poly.nvars)), default=0
        )
        trials = degree_bound + 2
    rng = random.Random(seed)
    failures = []
    for chain in chains:
        restricted = _restrict(poly, chain, p, t)
        if symbolic:
            if not restricted.is_zero:
                point, value = _find_witness(restricted, rng)
                failures.append((chain, point, value))
        else:
            for _ in range(trials):
                point = _random_point(restricted.nvars, rng)
                value = restricted.eval(point)
                if not _value_is_zero(value):
                    failures.append((chain, point, value))
                    break
    return WheelReport(total_chains=len(chains), failures=failures)


def _restrict(
    poly: MultiPoly, chain: WheelChain, p: CyclotomicNumber, t: CyclotomicNumber
) -> MultiPoly:
    base = chain.indices[0] - 1
    cumulative = t ** 0
    out = poly
    for alpha, s in enumerate(chain.shifts):
        cumulative = cumulative * t * p ** s
        out = out.substitute_var(chain.indices[alpha + 1] - 1, cumulative, base)
    return out


def _random_point(nvars: int, rng: random.Random) -> list[Fraction]:
    return [
        Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
        for _ in range(nvars)
    ]


def _value_is_zero(value) -> bool:
    if isinstance(value, CyclotomicNumber):
        return value.is_zero
    return value == 0


def _find_witness(restricted: MultiPoly, rng: random.Random):
    for _ in range(50):
        point = _random_point(restricted.nvars, rng)
        value = restricted.eval(point)
        if not _value_is_zero(value):
            return point, value
    return None, restricted


def check_Vn_membership(
    poly: MultiPoly, n: int, ell: int, q: CyclotomicNumber
) -> dict:
    """All defining bullets of the uniqueness space V_n, reported per bullet:
    homogeneity, total degree l n(n-1), per-variable degree <= l(n-1),
    symmetry in x, in y, stability under x <-> y, and the (l,2)-wheel
    condition at p = q^2, t = q."""
    if poly.nvars != 2 * n:
        raise ValueError("polynomial must live in 2n variables")
    report: dict[str, bool] = {}
    report["homogeneous"] = poly.is_homogeneous()
    report["total_degree"] = poly.is_zero or poly.total_degree() == ell * n * (n - 1)
    report["partial_degree"] = all(
        poly.degree_in(v) <= ell * (n - 1) for v in range(2 * n)
    )
    report["x_symmetric"] = _block_symmetric(poly, list(range(n)), n)
    report["y_symmetric"] = _block_symmetric(poly, list(range(n, 2 * n)), n)
    swap = poly.permute_vars(list(range(n, 2 * n)) + list(range(n)))
    report["swap_stable"] = swap == poly
    wheel = check_wheel(poly, ell, 2, q * q, q)
    report["wheel"] = wheel.passed
    report["wheel_report"] = wheel
    return report


def _block_symmetric(poly: MultiPoly, block: list[int], n: int) -> bool:
    """Invariance under adjacent transpositions inside one variable block."""
    for a in range(len(block) - 1):
        perm = list(range(poly.nvars))
        perm[block[a]], perm[block[a + 1]] = perm[block[a + 1]], perm[block[a]]
        if poly.permute_vars(perm) != poly:
            return False
    return True
