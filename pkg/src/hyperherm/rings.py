"""Exact scalar arithmetic: rationals and polynomials in the family parameters.

Every geometric quantity in this package lives in an exact ring so identities
are decided by literal equality, never by a floating-point tolerance.  Two
scalar realizations share one arithmetic surface:

* rational numbers, realized by :class:`fractions.Fraction` (always reduced,
  positive denominator, arbitrary precision), and
* :class:`Poly`, polynomials in the four parameters l1..l4 with rational
  coefficients.

Plain ``int`` values interoperate with both, so ``0`` and ``1`` can be used
as universal additive/multiplicative identities in generic code.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import product

NVARS = 4
VAR_NAMES = ("l1", "l2", "l3", "l4")

Exponents = tuple  # length-NVARS tuple of non-negative ints


def _grevkey(exps: Exponents):
    # graded-lex: total degree first, then lexicographic on the exponent vector
    return (sum(exps), exps)


class Poly:
    """A polynomial in l1..l4 over the rationals.

    Terms are stored as a map from exponent vector to a nonzero Fraction
    coefficient; zero coefficients are never stored, so equal polynomials
    have equal term maps.  Instances are immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    exps = tuple(int(e) for e in exps)
                    if len(exps) != NVARS or any(e < 0 for e in exps):
                        raise ValueError(f"bad exponent vector {exps!r}")
                    clean[exps] = coeff
        self.terms = clean
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls({})

    @classmethod
    def const(cls, value) -> "Poly":
        return cls({(0,) * NVARS: Fraction(value)})

    @classmethod
    def variable(cls, i: int) -> "Poly":
        if not 0 <= i < NVARS:
            raise ValueError(f"variable index {i} out of range")
        exps = [0] * NVARS
        exps[i] = 1
        return cls({tuple(exps): Fraction(1)})

    @classmethod
    def variables(cls) -> tuple["Poly", ...]:
        return tuple(cls.variable(i) for i in range(NVARS))

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * NVARS, Fraction(0))

    def degree(self) -> int:
        # degree of the zero polynomial is reported as 0
        return max((sum(e) for e in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exps, Fraction(0)) + c1 * c2
                if acc:
                    terms[exps] = acc
                else:
                    terms.pop(exps, None)
        return Poly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by a nonzero rational scalar only; Poly/Poly is not a ring op here
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation ---------------------------------------------------

    def evaluate(self, point) -> Fraction:
        """Substitute rationals for l1..l4 (a ring homomorphism to Q)."""
        vals = [Fraction(v) for v in point]
        if len(vals) != NVARS:
            raise ValueError(f"expected {NVARS} values, got {len(vals)}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                term *= v ** e
            total += term
        return total

    # -- rendering ----------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grevkey(kv[0]), reverse=True)

    def render(self) -> str:
        """Canonical human-readable form, deterministic graded-lex order.

        A common rational factor is pulled out when it is not +-1, e.g.
        ``-3/2*(l1^2 + l2^2 - l3^2 - l4^2)``.
        """
        items = self._sorted_terms()
        if not items:
            return "0"
        if len(items) == 1:
            return _render_term(items[0][1], items[0][0])
        nums = [c.numerator for _, c in items]
        dens = [c.denominator for _, c in items]
        content = Fraction(math.gcd(*nums), math.lcm(*dens))
        if items[0][1] < 0:
            content = -content
        if content == 1:
            return _join_terms(items)
        inner = [(e, c / content) for e, c in items]
        return f"{content}*({_join_terms(inner)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()!r})"


def _render_monomial(exps: Exponents) -> str:
    parts = []
    for name, e in zip(VAR_NAMES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _render_term(coeff: Fraction, exps: Exponents) -> str:
    mono = _render_monomial(exps)
    if not mono:
        return str(coeff)
    if coeff == 1:
        return mono
    if coeff == -1:
        return f"-{mono}"
    return f"{coeff}*{mono}"


def _join_terms(items) -> str:
    out = _render_term(items[0][1], items[0][0])
    for exps, coeff in items[1:]:
        if coeff < 0:
            out += f" - {_render_term(-coeff, exps)}"
        else:
            out += f" + {_render_term(coeff, exps)}"
    return out


# -- scalar helpers (shared by all modules) ---------------------------

Scalar = "int | Fraction | Poly"


def as_scalar(x):
    """Coerce an int to Fraction; pass Fraction and Poly through."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, Poly)):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def scalar_is_zero(x) -> bool:
    return x == 0


def scalar_str(x) -> str:
    """Canonical string form used verbatim in reports."""
    if isinstance(x, Poly):
        return x.render()
    if isinstance(x, (int, Fraction)):
        return str(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def lambda_symbols() -> tuple[Poly, Poly, Poly, Poly]:
    """The four family parameters as symbolic generators."""
    return Poly.variables()


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(token: str) -> Fraction:
    """Parse 'p' or 'p/q' exactly; decimal notation is rejected on purpose."""
    token = token.strip()
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"not an exact rational (use p or p/q): {token!r}")
    return Fraction(token)


def random_poly(rng, max_degree: int = 3, max_terms: int = 5) -> Poly:
    """Uniform-ish random polynomial, used by property tests and audits."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_degree) for _ in range(NVARS))
        terms[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return Poly(terms)


def all_exponents(max_degree: int):
    """All exponent vectors with per-variable degree bound (test helper)."""
    return product(range(max_degree + 1), repeat=NVARS)
