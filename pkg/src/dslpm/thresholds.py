"""Threshold polynomials, their largest real roots, and the auxiliary scalars.

Coefficients are assembled in exact integer arithmetic.  Roots are located
by Sturm-sequence bisection on the squarefree part (exact rational
evaluation), then polished with Newton's method in double precision.

theta(n) is deliberately not computed from its closed radical form: for
moderate n the inner square root has a negative argument and the formula
needs complex cube roots.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Number = Union[int, Fraction]

BISECTION_WIDTH = 1e-10
RESIDUAL_RTOL = 1e-9


class RootError(ArithmeticError):
    """No real root, or a constant polynomial."""


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial with degree-descending exact coefficients."""

    coefficients: tuple[Number, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("polynomial needs at least one coefficient")
        if self.coefficients[0] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def from_coefficients(cls, coefficients: Sequence) -> Polynomial:
        """Build from ints, Fractions or floats; floats are converted exactly."""
        exact = [c if isinstance(c, (int, Fraction)) else Fraction(c) for c in coefficients]
        exact = [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in exact]
        while len(exact) > 1 and exact[0] == 0:
            exact.pop(0)
        return cls(tuple(exact))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def max_abs_coefficient(self) -> float:
        return float(max(abs(c) for c in self.coefficients))

    def as_floats(self) -> list[float]:
        return [float(c) for c in self.coefficients]

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)})"


# Exact polynomial arithmetic on descending coefficient lists

def _trim(p: list[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _derivative(p: list[Fraction]) -> list[Fraction]:
    d = len(p) - 1
    if d == 0:
        return [Fraction(0)]
    return [c * (d - i) for i, c in enumerate(p[:-1])]


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [Fraction(0)], a
    quot = []
    lead = b[0]
    for i in range(len(a) - len(b) + 1):
        coef = a[i] / lead
        quot.append(coef)
        if coef:
            for j, bj in enumerate(b):
                a[i + j] -= coef * bj
    rem = _trim(a[len(a) - len(b) + 1:] or [Fraction(0)])
    return quot, rem


def _is_zero(p: list[Fraction]) -> bool:
    return all(c == 0 for c in p)


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while not _is_zero(b):
        _, r = _divmod(a, b)
        a, b = b, r
    return [c / a[0] for c in a]


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')``, monic."""
    coeffs = [Fraction(c) for c in p.coefficients]
    if len(coeffs) == 1:
        return Polynomial.from_coefficients([1])
    g = _gcd(coeffs, _derivative(coeffs))
    q, _ = _divmod(coeffs, g)
    return Polynomial.from_coefficients([c / q[0] for c in q])


def sturm_sequence(p: Polynomial) -> list[list[Fraction]]:
    p0 = [Fraction(c) for c in p.coefficients]
    seq = [p0, _derivative(p0)]
    while len(seq[-1]) > 1 or seq[-1][0] != 0:
        _, r = _divmod(seq[-2], seq[-1])
        if _is_zero(r):
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq: list[list[Fraction]], x: Fraction) -> int:
    changes = 0
    prev = 0
    for q in seq:
        v = 0
        for c in q:
            v = v * x + c
        if v == 0:
            continue
        sign = 1 if v > 0 else -1
        if prev and sign != prev:
            changes += 1
        prev = sign
    return changes


def count_roots(p: Polynomial, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    seq = sturm_sequence(squarefree_part(p))
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def cauchy_bound(p: Polynomial) -> Fraction:
    lead = Fraction(p.coefficients[0])
    return 1 + max((abs(Fraction(c) / lead) for c in p.coefficients[1:]), default=Fraction(0))


def largest_real_root(p: Polynomial, hint_bracket: tuple[float, float] | None = None) -> float:
    """Largest real root of ``p``.

    Sturm counting isolates the rightmost root; bisection narrows it to
    width 1e-10 and a Newton step on the squarefree part polishes it.  A
    ``hint_bracket`` ``(lo, hi)`` is used only if it provably contains the
    largest root, otherwise the Cauchy bracket ``[-B, B]`` is used.
    """
    if p.degree < 1:
        raise RootError("constant polynomial has no roots to isolate")
    sf = squarefree_part(p)
    seq = sturm_sequence(sf)
    bound = cauchy_bound(sf)

    def above(x: Fraction) -> int:
        return _sign_changes(seq, x) - _sign_changes(seq, bound)

    lo, hi = -bound, bound
    if above(lo) == 0:
        raise RootError(f"{p!r} has no real root")
    if hint_bracket is not None:
        hlo, hhi = Fraction(hint_bracket[0]), Fraction(hint_bracket[1])
        if hlo < hhi and above(hhi) == 0 and above(hlo) >= 1:
            lo, hi = hlo, hhi
    # invariant: exactly the roots > lo that exist lie in (lo, hi], at least one
    while hi - lo > BISECTION_WIDTH:
        mid = (lo + hi) / 2
        if above(mid) >= 1:
            lo = mid
        else:
            hi = mid
    return _polish(p, sf, float(lo), float(hi))


def _polish(p: Polynomial, sf: Polynomial, lo: float, hi: float) -> float:
    f = sf.as_floats()
    df = [c * (len(f) - 1 - i) for i, c in enumerate(f[:-1])]

    def horner(cs, x):
        acc = 0.0
        for c in cs:
            acc = acc * x + c
        return acc

    def residual(x: float) -> float:
        return abs(float(p(Fraction(x))))

    x = 0.5 * (lo + hi)
    best, best_res = x, residual(x)
    slack = 10 * BISECTION_WIDTH
    for _ in range(8):
        d = horner(df, x)
        if d == 0:
            break
        nxt = x - horner(f, x) / d
        if not (lo - slack <= nxt <= hi + slack) or nxt == x:
            break
        x = nxt
        r = residual(x)
        if r < best_res:
            best, best_res = x, r
    tol = RESIDUAL_RTOL * p.max_abs_coefficient()
    if best_res > tol:
        raise RootError(f"residual {best_res:.3e} above {tol:.3e} at x={best!r}")
    return best


def characteristic_polynomial(matrix: Sequence[Sequence]) -> Polynomial:
    """``det(xI - M)`` by the Faddeev-LeVerrier recursion in exact arithmetic."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        prev = m
        m = [[sum((a[i][t] * prev[t][j] for t in range(n)), Fraction(0)) for j in range(n)]
             for i in range(n)]
        for i in range(n):
            m[i][i] += coeffs[-1]
        am = [[sum((a[i][t] * m[t][j] for t in range(n)), Fraction(0)) for j in range(n)]
              for i in range(n)]
        trace = sum((am[i][i] for i in range(n)), Fraction(0))
        coeffs.append(-trace / k)
    return Polynomial.from_coefficients(coeffs)


# Threshold polynomials

def poly_f_tilde(n: int) -> Polynomial:
    return Polynomial((1, 5 - 5 * n, 8 * n**2 - 25 * n + 32, -4 * n**3 + 22 * n**2 - 54 * n + 48))


def poly_f(n: int, s: int) -> Polynomial:
    """Characteristic polynomial of the 3-block quotient of Q(K_s v (K_{n-2s-1} u co-K_{s+1}))."""
    return Polynomial((
        1,
        6 - s - 5 * n,
        8 * n**2 - n * s - 24 * n + 8 * s**2 + 8 * s + 16,
        -4 * n**3 + 2 * n**2 * s + 20 * n**2 - 8 * n * s**2 - 14 * n * s - 32 * n
        - 2 * s**3 + 14 * s**2 + 20 * s + 16,
    ))


def poly_g(n: int, s: int) -> Polynomial:
    # meaningful for n = 2s + 2, defined for all n, s
    return Polynomial((1, -(n + 6 * s + 2), 4 * n - 8 * s + 5 * n * s + 4 * s**2 - 8))


def poly_h(n: int, s: int) -> Polynomial:
    """Characteristic polynomial of :func:`h_source_quotient`.

    That matrix differs from the true quotient of Q(Gamma_{s,s-1}) in two
    entries, so the largest root is not the radius of Gamma_{s,s-1}; see
    :func:`poly_gamma` for the measured one.
    """
    return Polynomial((
        1,
        2 * s - 20 * n + 14,
        145 * n**2 - 38 * n * s - 214 * n + 12 * s**2 + 10 * s + 74,
        -(450 * n**3 - 190 * n**2 * s - 1052 * n**2 + 82 * n * s**2 + 189 * n * s + 775 * n
          - 78 * s**2 + 2 * s - 172),
        504 * n**4 - 282 * n**3 * s - 1656 * n**3 + 150 * n**2 * s**2 + 517 * n**2 * s
        + 1951 * n**2 - 24 * n * s**3 - 226 * n * s**2 - 220 * n * s - 938 * n
        + 12 * s**4 - 24 * s**3 + 138 * s**2 - 46 * s + 144,
    ))


def poly_h_tilde(n: int) -> Polynomial:
    return Polynomial((
        1,
        12 - 18 * n,
        119 * n**2 - 190 * n + 76,
        -(342 * n**3 - 915 * n**2 + 826 * n - 252),
        360 * n**4 - 1383 * n**3 + 2026 * n**2 - 1362 * n + 364,
    ))


def h_source_quotient(n: int, s: int) -> list[list[int]]:
    """The 4x4 matrix whose characteristic polynomial is :func:`poly_h`."""
    return [
        [7 * n - 2 * s - 2, 2 * n - 2 * s, s - 1, 3 * n - 3 * s + 3],
        [2 * s, 5 * n - 2 * s - 4, s - 1, n - s + 1],
        [s, n - s, 3 * n + 2 * s - 6, 2 * n - 2 * s + 3],
        [3 * s, n - s, 2 * s - 2, 5 * n - 2],
    ]


def gamma_quotient(n: int, s: int) -> list[list[int]]:
    """Equitable quotient of Q(Gamma_{s,s-1}) over (S, X-S, N(S), Y-N(S)).

    Entries follow from the distances 1 (across sides, if adjacent), 2 (same
    side) and 3 (S to Y-N(S)).
    """
    return [
        [5 * n - 2, 2 * (n - s), s - 1, 3 * (n - s + 1)],
        [2 * s, 5 * n - 2 * s - 4, s - 1, n - s + 1],
        [s, n - s, 3 * n + 2 * s - 6, 2 * (n - s + 1)],
        [3 * s, n - s, 2 * s - 2, 5 * n - 2],
    ]


def poly_gamma(n: int, s: int) -> Polynomial:
    return characteristic_polynomial(gamma_quotient(n, s))


# Threshold values

def _require_even_order(n: int) -> None:
    if n < 4 or n % 2:
        raise ValueError(f"n must be an even integer >= 4, got {n}")


@lru_cache(maxsize=None)
def theta(n: int) -> float:
    _require_even_order(n)
    value = largest_real_root(poly_f_tilde(n), hint_bracket=(2 * n - 2, 3 * n))
    if not 2 * n - 2 < value < 3 * n:
        raise RootError(f"theta({n}) = {value} escaped the bracket (2n-2, 3n)")
    return value


def split_threshold(n: int) -> float:
    return 2 * n + math.sqrt(n * (n + 2) / 2) - 2


def theorem1_branch(n: int) -> str:
    """``"theta"`` for n = 4 or n >= 12, ``"split"`` for n in {6, 8, 10}."""
    _require_even_order(n)
    return "split" if n in (6, 8, 10) else "theta"


@lru_cache(maxsize=None)
def theorem1_threshold(n: int) -> float:
    return split_threshold(n) if theorem1_branch(n) == "split" else theta(n)


@lru_cache(maxsize=None)
def kappa(n: int) -> float:
    if n < 3:
        raise ValueError(f"kappa needs n >= 3, got {n}")
    return largest_real_root(poly_h_tilde(n), hint_bracket=(6 * n, 8 * n))


@lru_cache(maxsize=None)
def gamma_radius(n: int) -> float:
    """Spectral radius of Q(Gamma_{n-1,n-2}) from its corrected quotient."""
    if n < 3:
        raise ValueError(f"gamma_radius needs n >= 3, got {n}")
    return largest_real_root(poly_gamma(n, n - 1))


def phi(n: int, s: int, kappa_value: float | None = None) -> float:
    k = kappa(n) if kappa_value is None else kappa_value
    return (2 * k**3 + (12 * s - 26 * n - 2) * k**2
            + (78 * s - 29 * n - 82 * n * s + 108 * n**2 - 80) * k
            - 144 * n**3 + 138 * n**2 * s + 129 * n**2 - 12 * n * s**2 - 250 * n * s
            + 204 * n + 12 * s**3 - 36 * s**2 + 174 * s - 220)


def psi(n: int, s) -> float:
    return 78 * n**2 + (218 - 24 * s) * n + 36 * s**2 - 72 * s + 174


def gamma_all_ones_rayleigh(n: int) -> Fraction:
    """``1^T Q(Gamma_{n-1,n-2}) 1 / (2n)``, exactly."""
    sizes = [n - 1, 1, n - 2, 2]
    b = gamma_quotient(n, n - 1)
    total = sum(sizes[i] * sum(b[i]) for i in range(4))
    return Fraction(total, 2 * n)
