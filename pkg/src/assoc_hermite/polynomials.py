"""Exact sparse arithmetic for polynomials in the variables x and c.

A polynomial is a map from exponent pairs (x degree, c degree) to rational
coefficients.  Zero coefficients are never stored, so the term map is a
canonical form: two polynomials are equal exactly when their maps coincide.
All coefficients are fractions.Fraction values, which keeps every identity
in this package exact; nothing here ever rounds.

Instances are immutable by convention.  Every operation returns a fresh
polynomial and never mutates its operands.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping, Union

Scalar = Union[int, Fraction]
Key = tuple[int, int]


class Poly:
    """Sparse bivariate polynomial in x and c over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, Scalar] | None = None):
        clean: dict[Key, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                xd, cd = key
                if xd < 0 or cd < 0:
                    raise ValueError(f"negative exponent in term {key!r}")
                q = Fraction(coeff)
                if q:
                    clean[(int(xd), int(cd))] = q
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # ----- constructors -----

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def x(cls, power: int = 1) -> "Poly":
        return cls({(power, 0): 1})

    @classmethod
    def c(cls, power: int = 1) -> "Poly":
        return cls({(0, power): 1})

    @classmethod
    def monomial(cls, xd: int, cd: int, coeff: Scalar = 1) -> "Poly":
        return cls({(xd, cd): Fraction(coeff)})

    # ----- ring operations -----

    @staticmethod
    def _coerce(value) -> "Poly | None":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.constant(value)
        return None

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Key, Fraction] = {}
        for (xa, ca), qa in self.terms.items():
            for (xb, cb), qb in other.terms.items():
                key = (xa + xb, ca + cb)
                total = out.get(key, 0) + qa * qb
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ----- queries -----

    def is_zero(self) -> bool:
        return not self.terms

    def x_degree(self) -> int:
        """Largest x exponent, or -1 for the zero polynomial."""
        return max((xd for xd, _ in self.terms), default=-1)

    def c_degree(self) -> int:
        """Largest c exponent, or -1 for the zero polynomial."""
        return max((cd for _, cd in self.terms), default=-1)

    def coefficient(self, xd: int, cd: int) -> Fraction:
        return self.terms.get((xd, cd), Fraction(0))

    def coeff_of_x_power(self, xd: int) -> "Poly":
        """The polynomial in c multiplying x**xd."""
        return Poly({(0, cd): q for (xa, cd), q in self.terms.items() if xa == xd})

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        """Terms sorted by (x degree, c degree) descending; the canonical order."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    # ----- transforms -----

    def evaluate(self, x_value: Scalar = 0, c_value: Scalar = 0) -> Fraction:
        xv = Fraction(x_value)
        cv = Fraction(c_value)
        total = Fraction(0)
        for (xd, cd), q in self.terms.items():
            total += q * xv**xd * cv**cd
        return total

    def shift_c(self) -> "Poly":
        """Substitute c -> c + 1, re-expanding each power binomially."""
        out: dict[Key, Fraction] = {}
        for (xd, cd), q in self.terms.items():
            for j in range(cd + 1):
                key = (xd, j)
                total = out.get(key, 0) + q * comb(cd, j)
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return Poly(out)

    # ----- encoding -----

    def to_json_obj(self) -> list[dict]:
        """Canonical JSON form: term records sorted by (xd, cd) descending."""
        return [
            {"xd": xd, "cd": cd, "num": str(q.numerator), "den": str(q.denominator)}
            for (xd, cd), q in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> "Poly":
        terms: dict[Key, Fraction] = {}
        for record in obj:
            key = (int(record["xd"]), int(record["cd"]))
            if key in terms:
                raise ValueError(f"duplicate term {key!r}")
            terms[key] = Fraction(int(record["num"]), int(record["den"]))
        return cls(terms)

    def __repr__(self) -> str:
        return f"Poly({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xd, cd), q in self.sorted_terms():
            mono = "".join(
                (f"{name}^{e}" if e > 1 else name) if e else ""
                for name, e in (("x", xd), ("c", cd))
            )
            if not mono:
                body = str(q)
            elif q == 1:
                body = mono
            elif q == -1:
                body = "-" + mono
            elif q.denominator == 1:
                body = f"{q}{mono}"
            else:
                body = f"({q}){mono}"
            parts.append(body)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


X = Poly.x()
C = Poly.c()


def rising_factorial(base: Poly | Scalar, k: int) -> Poly:
    """The product base (base+1) ... (base+k-1); equals 1 when k = 0."""
    if k < 0:
        raise ValueError("rising factorial needs k >= 0")
    base = base if isinstance(base, Poly) else Poly.constant(base)
    result = Poly.one()
    for i in range(k):
        result = result * (base + i)
    return result


def binomial_poly(top: Poly | Scalar, k: int) -> Poly:
    """Binomial coefficient with polynomial top: top (top-1) ... (top-k+1) / k!."""
    if k < 0:
        raise ValueError("binomial needs k >= 0")
    top = top if isinstance(top, Poly) else Poly.constant(top)
    result = Poly.one()
    for i in range(k):
        result = result * (top - i)
    return result * Fraction(1, factorial(k))


def rising_factorial_value(base: Scalar, k: int) -> Fraction:
    """Rising factorial of a plain rational value."""
    if k < 0:
        raise ValueError("rising factorial needs k >= 0")
    base = Fraction(base)
    total = Fraction(1)
    for i in range(k):
        total *= base + i
    return total
