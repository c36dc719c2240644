"""Finite-support Laurent objects in the loop parameter.

Coefficients may be rational functions, matrices, or anything supporting
ring arithmetic; a ZetaLaurent splits uniquely into strictly negative,
degree-zero, and strictly positive parts.
"""

from __future__ import annotations

from typing import Dict, Mapping


class ZetaLaurent:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean: Dict[int, object] = {}
        for k, v in (coeffs or {}).items():
            if _nonzero(v):
                clean[int(k)] = v
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ZetaLaurent is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        return self.coeffs.get(k)

    def __add__(self, other: "ZetaLaurent") -> "ZetaLaurent":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return ZetaLaurent(out)

    def __neg__(self) -> "ZetaLaurent":
        return ZetaLaurent({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "ZetaLaurent") -> "ZetaLaurent":
        return self + (-other)

    def __mul__(self, other: "ZetaLaurent") -> "ZetaLaurent":
        out: Dict[int, object] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                p = v1 * v2
                out[k] = out[k] + p if k in out else p
        return ZetaLaurent(out)

    def split(self):
        """(negative part, zero coefficient, positive part)."""
        neg = ZetaLaurent({k: v for k, v in self.coeffs.items() if k < 0})
        pos = ZetaLaurent({k: v for k, v in self.coeffs.items() if k > 0})
        return neg, self.coeffs.get(0), pos

    def __eq__(self, other):
        if not isinstance(other, ZetaLaurent):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        for k in keys:
            a, b = self.coeffs.get(k), other.coeffs.get(k)
            if a is None:
                a, b = b, a
            if b is None:
                if _nonzero(a):
                    return False
            elif a != b:
                return False
        return True

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join(
            f"({self.coeffs[k]})*zeta^{k}" for k in sorted(self.coeffs)
        )

    __repr__ = __str__


def _nonzero(v) -> bool:
    probe = getattr(v, "is_zero", None)
    if probe is not None:
        return not probe()
    return bool(v)
