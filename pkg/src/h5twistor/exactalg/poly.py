"""Multivariate polynomials over Q(i) with an explicit, fixed variable context.

A context is an ordered tuple of variable names.  Mixing values from
different contexts is an error, never a silent coercion; use
``MultiPoly.substitute`` to move between contexts.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .crational import CRational, CR_ONE, CR_ZERO

Context = Tuple[str, ...]
Exponents = Tuple[int, ...]


class ContextError(ValueError):
    """Raised when operands live in different variable contexts."""


def make_context(*names: str) -> Context:
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in context {names}")
    return tuple(names)


class MultiPoly:
    """Sparse polynomial: map from exponent vector to nonzero CRational."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: Mapping[Exponents, CRational]):
        clean: Dict[Exponents, CRational] = {}
        n = len(ctx)
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not match context {ctx}")
            c = CRational.coerce(c)
            if c:
                clean[exps] = c
        object.__setattr__(self, "ctx", tuple(ctx))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ctx: Context) -> "MultiPoly":
        return MultiPoly(ctx, {})

    @staticmethod
    def const(ctx: Context, c) -> "MultiPoly":
        return MultiPoly(ctx, {(0,) * len(ctx): CRational.coerce(c)})

    @staticmethod
    def one(ctx: Context) -> "MultiPoly":
        return MultiPoly.const(ctx, 1)

    @staticmethod
    def var(ctx: Context, name: str) -> "MultiPoly":
        try:
            i = ctx.index(name)
        except ValueError:
            raise ContextError(f"variable {name!r} not in context {ctx}") from None
        e = [0] * len(ctx)
        e[i] = 1
        return MultiPoly(ctx, {tuple(e): CR_ONE})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> CRational:
        if self.is_zero():
            return CR_ZERO
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def _check(self, other: "MultiPoly"):
        if self.ctx != other.ctx:
            raise ContextError(f"context mismatch: {self.ctx} vs {other.ctx}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, CR_ZERO) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        terms: Dict[Exponents, CRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, CR_ZERO) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return MultiPoly(self.ctx, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = CRational.coerce(c)
        return MultiPoly(self.ctx, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def _coerce(self, x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.const(self.ctx, x)

    # -- calculus ------------------------------------------------------------

    def derivative(self, name: str) -> "MultiPoly":
        """Termwise formal partial derivative with respect to ``name``."""
        try:
            i = self.ctx.index(name)
        except ValueError:
            raise ContextError(f"unknown variable {name!r} in context {self.ctx}") from None
        terms: Dict[Exponents, CRational] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            terms[tuple(d)] = c * e[i]
        return MultiPoly(self.ctx, terms)

    # -- substitution / evaluation -------------------------------------------

    def substitute(self, values: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for every variable.

        All values must share one target context; variables absent from
        ``values`` must exist in the target context and map to themselves.
        """
        if values:
            target = next(iter(values.values())).ctx
        else:
            target = self.ctx
        cache: Dict[str, MultiPoly] = {}
        for name in self.ctx:
            if name in values:
                v = values[name]
                if v.ctx != target:
                    raise ContextError("substitution values live in different contexts")
                cache[name] = v
            else:
                cache[name] = MultiPoly.var(target, name)
        out = MultiPoly.zero(target)
        for e, c in self.terms.items():
            term = MultiPoly.const(target, c)
            for name, k in zip(self.ctx, e):
                if k:
                    term = term * cache[name] ** k
            out = out + term
        return out

    def evaluate(self, point: Mapping[str, complex]) -> complex:
        out = 0j
        for e, c in self.terms.items():
            v = c.to_complex()
            for name, k in zip(self.ctx, e):
                if k:
                    v *= point[name] ** k
            out += v
        return out

    # -- division ------------------------------------------------------------

    def leading(self) -> Tuple[Exponents, CRational]:
        """Leading term under lexicographic order on exponent vectors."""
        e = max(self.terms)
        return e, self.terms[e]

    def try_div(self, d: "MultiPoly"):
        """Exact division ``self / d``: the quotient, or None if it fails.

        Single-divisor reduction under lex order; returns a quotient q with
        q*d == self exactly, or None as soon as a leading term does not divide.
        """
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q_terms: Dict[Exponents, CRational] = {}
        r = self
        de, dc = d.leading()
        while not r.is_zero():
            re_, rc = r.leading()
            diff = tuple(a - b for a, b in zip(re_, de))
            if any(k < 0 for k in diff):
                return None
            coeff = rc / dc
            q_terms[diff] = q_terms.get(diff, CR_ZERO) + coeff
            r = r - MultiPoly(self.ctx, {diff: coeff}) * d
        return MultiPoly(self.ctx, q_terms)

    def monomial_gcd(self, other: "MultiPoly") -> Exponents:
        """Componentwise min exponent over all terms of both polynomials."""
        exps = list(self.terms) + list(other.terms)
        return tuple(min(e[i] for e in exps) for i in range(len(self.ctx)))

    def shift_down(self, mono: Exponents) -> "MultiPoly":
        return MultiPoly(
            self.ctx,
            {tuple(a - b for a, b in zip(e, mono)): c for e, c in self.terms.items()},
        )

    # -- comparison / display --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __str__(self) -> str:
        """Canonical text: monomials sorted descending in lex order."""
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (f"{n}^{k}" if k > 1 else n)
                for n, k in zip(self.ctx, e)
                if k
            )
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono and cs not in ("1",) else (mono or cs))
            if cs == "1" and not mono:
                parts[-1] = "1"
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"
