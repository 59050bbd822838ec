"""Multivariate polynomials with exact rational coefficients.

Terms are stored as {exponent tuple: coefficient}; zero coefficients are
never stored.  Includes exact integration over rational polytopes via
triangulation and the closed form for monomial integrals over the standard
simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import DomainError
from .polytopes import Polytope, triangulation, _span_sublattice
from .linalg import det, solve, vsub
from .rationals import Q, ZERO


@dataclass(frozen=True)
class Polynomial:
    terms: dict
    num_vars: int

    def __post_init__(self):
        clean = {}
        for exp, coef in self.terms.items():
            c = Q(coef)
            if c != 0:
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.num_vars:
                    raise DomainError("exponent length does not match variable count")
                clean[exp] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls({}, num_vars)

    @classmethod
    def constant(cls, c, num_vars: int) -> "Polynomial":
        return cls({(0,) * num_vars: Q(c)}, num_vars)

    @classmethod
    def variable(cls, i: int, num_vars: int) -> "Polynomial":
        exp = tuple(1 if j == i else 0 for j in range(num_vars))
        return cls({exp: Q(1)}, num_vars)

    @classmethod
    def linear(cls, coeffs, const=0) -> "Polynomial":
        n = len(coeffs)
        terms = {(0,) * n: Q(const)}
        for i, c in enumerate(coeffs):
            terms[tuple(1 if j == i else 0 for j in range(n))] = Q(c)
        return cls(terms, n)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree 0 here."""
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict:
        out = {}
        for exp, coef in self.terms.items():
            d = sum(exp)
            out.setdefault(d, {})[exp] = coef
        return {d: Polynomial(t, self.num_vars) for d, t in sorted(out.items())}

    def top_component(self) -> "Polynomial":
        if not self.terms:
            return self
        d = self.degree()
        return Polynomial({e: c for e, c in self.terms.items() if sum(e) == d},
                          self.num_vars)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            terms[exp] = terms.get(exp, ZERO) + coef
        return Polynomial(terms, self.num_vars)

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self.terms.items()}, self.num_vars)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Q(other)
            return Polynomial({e: c * v for e, v in self.terms.items()}, self.num_vars)
        if other.num_vars != self.num_vars:
            raise DomainError("variable count mismatch")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, ZERO) + c1 * c2
        return Polynomial(terms, self.num_vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.constant(1, self.num_vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.num_vars == other.num_vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __call__(self, point):
        point = tuple(Q(x) for x in point)
        total = ZERO
        for exp, coef in self.terms.items():
            v = coef
            for x, e in zip(point, exp):
                if e:
                    v *= x ** e
            total += v
        return total

    def compose_affine(self, matrix, offset) -> "Polynomial":
        """Substitute x_i = offset_i + sum_j matrix[i][j] y_j.

        matrix has one row per old variable; the result is a polynomial in
        len(matrix[0]) new variables (0 rows/columns allowed).
        """
        new_vars = len(matrix[0]) if matrix and len(matrix) else 0
        if matrix and len(matrix) != self.num_vars:
            raise DomainError("substitution matrix row count mismatch")
        if not matrix:
            new_vars = 0
        linear_forms = [Polynomial.linear([Q(c) for c in row], Q(off))
                        for row, off in zip(matrix, offset)]
        power_cache = [dict() for _ in range(self.num_vars)]

        def var_power(i, e):
            cache = power_cache[i]
            if e not in cache:
                cache[e] = linear_forms[i] ** e
            return cache[e]

        result = Polynomial.zero(new_vars)
        for exp, coef in self.terms.items():
            term = Polynomial.constant(coef, new_vars)
            for i, e in enumerate(exp):
                if e:
                    term = term * var_power(i, e)
            result = result + term
        return result

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise DomainError("variable count mismatch")
            return other
        return Polynomial.constant(other, self.num_vars)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), e)):
            coef = self.terms[exp]
            monos = [f"x{i}" if e == 1 else f"x{i}^{e}"
                     for i, e in enumerate(exp) if e]
            body = "*".join(monos)
            if body:
                parts.append(f"{coef}*{body}" if coef != 1 else body)
            else:
                parts.append(str(coef))
        return " + ".join(parts)


def _simplex_monomial_integral(exponents):
    """Integral of prod t_i^{a_i} over the standard simplex {t >= 0, sum t <= 1}."""
    m = len(exponents)
    num = 1
    for a in exponents:
        num *= factorial(a)
    return Q(num, factorial(m + sum(exponents)))


def integrate(poly: Polynomial, p: Polytope, lattice) -> "Q":
    """Exact integral of poly over p, with the measure on p's affine span
    normalized so a fundamental cell of (lattice direction) ∩ span has
    volume 1.  For a 0-dimensional p this is poly evaluated at the point
    (the volume(point)=1 convention).
    """
    if poly.num_vars != p.ambient_dim:
        raise DomainError("polynomial/polytope dimension mismatch")
    k = p.dim
    if k == 0:
        return poly(p.base)
    sub = _span_sublattice(p, lattice)
    cols = [tuple(m[i] for m in sub) for i in range(p.ambient_dim)]
    total = ZERO
    for simplex in triangulation(p):
        v0 = simplex[0]
        edges = [vsub(v, v0) for v in simplex[1:]]
        tcoords = [solve(cols, e) for e in edges]
        jac = abs(det(tcoords))
        if jac == 0:
            continue
        # ambient substitution x = v0 + E t, columns of E are the edges
        matrix = [tuple(e[i] for e in edges) for i in range(p.ambient_dim)]
        g = poly.compose_affine(matrix, v0)
        piece = ZERO
        for exp, coef in g.terms.items():
            piece += coef * _simplex_monomial_integral(exp)
        total += jac * piece
    return total
