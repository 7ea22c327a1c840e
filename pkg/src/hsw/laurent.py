"""Exact Laurent polynomials in one variable over the integers.

The single variable is called ``v`` throughout; the q-analogue module reuses
the same type with the dictionary q = v^(-2) handled by :func:`laurent_substitute`.
Values are immutable and kept in canonical form (no zero coefficients), so
equality of values is equality of the underlying sparse maps.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

IntLike = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Sparse Laurent polynomial with arbitrary-precision integer coefficients.

    >>> f = LaurentPoly({1: 1, -1: 1})
    >>> print(f * f)
    v^-2 + 2 + v^2
    >>> print(f - f)
    0
    >>> (f * f).bar() == f * f
    True
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        c: dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, a in items:
                e, a = int(e), int(a)
                s = c.get(e, 0) + a
                if s:
                    c[e] = s
                elif e in c:
                    del c[e]
        self._c = c
        self._hash: int | None = None

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def const(a: int) -> "LaurentPoly":
        return LaurentPoly({0: a}) if a else ZERO

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coeff})

    @staticmethod
    def coerce(x: IntLike) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection ------------------------------------------------------------

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def items(self) -> list[tuple[int, int]]:
        """Sorted (exponent, coefficient) pairs, lowest exponent first."""
        return sorted(self._c.items())

    def support(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no support")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no support")
        return max(self._c)

    def at_one(self) -> int:
        """Evaluate at v = 1 (sum of coefficients)."""
        return sum(self._c.values())

    def is_symmetric(self) -> bool:
        """True iff invariant under the bar involution v -> v^(-1)."""
        return all(self._c.get(-e, 0) == a for e, a in self._c.items())

    def in_v_inverse(self) -> bool:
        """True iff all exponents are strictly negative (element of v^-1 Z[v^-1])."""
        return all(e < 0 for e in self._c)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self._c.values())

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: IntLike) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        if not self._c:
            return other
        if not other._c:
            return self
        c = dict(self._c)
        for e, a in other._c.items():
            b = c.get(e, 0) + a
            if b:
                c[e] = b
            else:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -a for e, a in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other: IntLike) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: IntLike) -> "LaurentPoly":
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other: IntLike) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for e1, a1 in a.items():
            for e2, a2 in b.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for LaurentPoly values")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- involutions and substitutions ------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^(-1) (exponent negation)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: a for e, a in self._c.items()}
        out._hash = None
        return out

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Substitute v -> v^k for a nonzero integer k."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k * e: a for e, a in self._c.items()}
        out._hash = None
        return out

    def sym_complete(self) -> "LaurentPoly":
        """The unique bar-invariant g with f - g supported in negative exponents.

        Concretely g = f_0 + sum_{i>0} f_i (v^i + v^-i).

        >>> print(LaurentPoly({0: 1, -2: 1}).sym_complete())
        1
        >>> print(LaurentPoly({3: 1}).sym_complete())
        v^-3 + v^3
        """
        c: dict[int, int] = {}
        for e, a in self._c.items():
            if e == 0:
                c[0] = c.get(0, 0) + a
            elif e > 0:
                c[e] = c.get(e, 0) + a
                c[-e] = c.get(-e, 0) + a
        return LaurentPoly({e: a for e, a in c.items() if a})

    # -- comparison and hashing --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    # -- rendering -----------------------------------------------------------------

    def fmt(self, symbol: str = "v") -> str:
        """Canonical text form, lowest exponent first: ``v^-2 + 2 + v^2``."""
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, a in self.items():
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                var = symbol if e == 1 else f"{symbol}^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if a > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.fmt()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    def to_json(self) -> dict[str, int]:
        """Exponent -> coefficient map with keys ordered lowest exponent first."""
        return {str(e): a for e, a in self.items()}


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})
V_INV = LaurentPoly({-1: 1})


def v_power(k: int) -> LaurentPoly:
    return LaurentPoly({k: 1})


# Operation-style aliases matching the public contract.

def laurent_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def laurent_bar(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def laurent_sym_complete(f: LaurentPoly) -> LaurentPoly:
    return f.sym_complete()


def laurent_substitute(f: LaurentPoly, k: int) -> LaurentPoly:
    return f.substitute_power(k)
