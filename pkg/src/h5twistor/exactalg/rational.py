"""Exact multivariate rational functions: the universal scalar for all
symbolic identities.

Equality is decided by cross-multiplication, so num/den pairs never need a
multivariate GCD.  Normalization still cancels cheap common factors (shared
monomials, exact polynomial division, scalar content) to keep objects small.
"""

from __future__ import annotations

from typing import Mapping

from .crational import CRational
from .poly import Context, ContextError, MultiPoly


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.one(num.ctx)
        if num.ctx != den.ctx:
            raise ContextError("numerator and denominator contexts differ")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def ctx(self) -> Context:
        return self.num.ctx

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ctx: Context) -> "RationalFunction":
        return RationalFunction(MultiPoly.zero(ctx))

    @staticmethod
    def one(ctx: Context) -> "RationalFunction":
        return RationalFunction(MultiPoly.one(ctx))

    @staticmethod
    def const(ctx: Context, c) -> "RationalFunction":
        return RationalFunction(MultiPoly.const(ctx, c))

    @staticmethod
    def var(ctx: Context, name: str) -> "RationalFunction":
        return RationalFunction(MultiPoly.var(ctx, name))

    def _coerce(self, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, MultiPoly):
            return RationalFunction(x)
        return RationalFunction.const(self.ctx, x)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == MultiPoly.one(self.ctx)

    # -- field operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    # -- calculus ---------------------------------------------------------------

    def derivative(self, name: str) -> "RationalFunction":
        """Quotient rule: (p/q)' = (p'q - pq') / q^2."""
        if self.is_polynomial():
            return RationalFunction(self.num.derivative(name))
        p, q = self.num, self.den
        return RationalFunction(
            p.derivative(name) * q - p * q.derivative(name), q * q
        )

    def substitute(self, values: Mapping[str, MultiPoly]) -> "RationalFunction":
        return RationalFunction(self.num.substitute(values), self.den.substitute(values))

    def evaluate(self, point: Mapping[str, complex]) -> complex:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("evaluation on the denominator's zero locus")
        return self.num.evaluate(point) / d

    # -- comparison ----------------------------------------------------------------

    def __eq__(self, other):
        """True iff self.num * other.den == other.num * self.den exactly."""
        if not isinstance(other, (RationalFunction, MultiPoly, int, CRational)):
            return NotImplemented
        other = self._coerce(other)
        if self.ctx != other.ctx:
            raise ContextError("comparing rational functions from different contexts")
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        # normalization is canonical enough for hashing polynomials only
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _normalize(num: MultiPoly, den: MultiPoly):
    """Cheap canonicalization: shared monomial factor, exact division when it
    succeeds, then a unit scaling so the denominator's lex-leading
    coefficient is 1 (hence the den of a polynomial is the constant 1)."""
    if num.is_zero():
        return num, MultiPoly.one(num.ctx)
    mono = num.monomial_gcd(den)
    if any(mono):
        num = num.shift_down(mono)
        den = den.shift_down(mono)
    if not den.is_constant():
        q = num.try_div(den)
        if q is not None:
            num, den = q, MultiPoly.one(num.ctx)
        else:
            q = den.try_div(num)
            if q is not None:
                num, den = MultiPoly.one(num.ctx), q
    _, lead = den.leading()
    if lead != CRational(1):
        inv = lead.inverse()
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Exact field arithmetic dispatched on an operator symbol."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    return a == b
