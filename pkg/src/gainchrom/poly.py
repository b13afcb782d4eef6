"""Exact sparse polynomials in the two variables q and z.

A polynomial is a mapping from exponent pairs (dq, dz) to nonzero integer
coefficients.  Coefficients are plain Python ints, so every operation is
exact at any size; the zero polynomial is the empty mapping.

Polynomials that are univariate in q (every term has dz == 0) appear all
over the counting code; ``Poly1`` is an alias documenting that convention.
Rendering uses graded-lex term order (total degree, then q-degree, both
descending), e.g. ``q^2 - 3*q + 2*z``, and ``parse_poly`` reads that format
back losslessly.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

Monomial = tuple[int, int]


class Poly2:
    """Immutable bivariate polynomial in (q, z) over the integers."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] | None = None,
    ):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc: dict[Monomial, int] = {}
        for (dq, dz), coeff in items:
            if dq < 0 or dz < 0:
                raise ValueError(f"negative exponent in monomial ({dq}, {dz})")
            c = acc.get((dq, dz), 0) + coeff
            if c:
                acc[(dq, dz)] = c
            else:
                acc.pop((dq, dz), None)
        self._terms = acc

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    @classmethod
    def const(cls, c: int) -> "Poly2":
        return cls({(0, 0): c})

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in graded-lex order (total degree, then q-degree, descending)."""
        return sorted(
            self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]), reverse=True
        )

    def coefficient(self, dq: int, dz: int = 0) -> int:
        return self._terms.get((dq, dz), 0)

    def degree_q(self) -> int:
        """Largest q-exponent, or -1 for the zero polynomial."""
        return max((dq for dq, _ in self._terms), default=-1)

    def is_univariate_q(self) -> bool:
        return all(dz == 0 for _, dz in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "Poly2":
        return Poly2({m: -c for m, c in self._terms.items()})

    @staticmethod
    def _coerce(value: "Poly2 | int") -> "Poly2":
        return Poly2.const(value) if isinstance(value, int) else value

    def __add__(self, other: "Poly2 | int") -> "Poly2":
        other = self._coerce(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        out = Poly2()
        out._terms = acc
        return out

    __radd__ = __add__

    def __sub__(self, other: "Poly2 | int") -> "Poly2":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Poly2 | int") -> "Poly2":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "Poly2 | int") -> "Poly2":
        other = self._coerce(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for (aq, az), ac in self._terms.items():
            for (bq, bz), bc in other._terms.items():
                m = (aq + bq, az + bz)
                s = acc.get(m, 0) + ac * bc
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        out = Poly2()
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly2":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly2.const(1)
        for _ in range(exponent):
            out = out * self
        return out

    def evaluate(self, q: int, z: int = 0) -> int:
        """Exact integer value at the point (q, z)."""
        return sum(c * q**dq * z**dz for (dq, dz), c in self._terms.items())

    def substitute_q(self, replacement: "Poly2") -> "Poly2":
        """Replace q by an arbitrary polynomial; requires deg_z == 0 throughout.

        Expanded exactly via Horner's rule.
        """
        if not self.is_univariate_q():
            raise ValueError("substitution requires a polynomial univariate in q")
        coeffs = {dq: c for (dq, _), c in self._terms.items()}
        out = Poly2.zero()
        for k in range(self.degree_q(), -1, -1):
            out = out * replacement + Poly2.const(coeffs.get(k, 0))
        return out

    def substitute_z(self, value: int) -> "Poly2":
        """Partially evaluate at z = value, leaving a polynomial in q alone."""
        acc: dict[Monomial, int] = {}
        for (dq, dz), c in self._terms.items():
            s = acc.get((dq, 0), 0) + c * value**dz
            if s:
                acc[(dq, 0)] = s
            else:
                acc.pop((dq, 0), None)
        out = Poly2()
        out._terms = acc
        return out

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly2({format_poly(self)!r})"


# Univariate-in-q polynomials are ordinary Poly2 values with dz == 0 everywhere.
Poly1 = Poly2

Q = Poly2({(1, 0): 1})
Z = Poly2({(0, 1): 1})
ONE = Poly2.const(1)


def falling_factorial(m: int) -> Poly1:
    """(q)_m = q(q-1)...(q-m+1); the empty product 1 for m = 0."""
    if m < 0:
        raise ValueError("falling factorial needs m >= 0")
    out = ONE
    for i in range(m):
        out = out * (Q - i)
    return out


def format_poly(p: Poly2) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for (dq, dz), c in p.items():
        factors: list[str] = []
        if dq:
            factors.append("q" if dq == 1 else f"q^{dq}")
        if dz:
            factors.append("z" if dz == 1 else f"z^{dz}")
        if not factors or abs(c) != 1:
            factors.insert(0, str(abs(c)))
        body = "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_FACTOR_RE = re.compile(r"([qz])(?:\^(\d+))?\Z")


def parse_poly(text: str) -> Poly2:
    """Parse the output of format_poly (and obvious variants) back to a Poly2."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Poly2.zero()
    tokens = re.findall(r"[+-]?[^+-]+", s)
    if "".join(tokens) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    acc: dict[Monomial, int] = {}
    for token in tokens:
        sign = -1 if token.startswith("-") else 1
        body = token.lstrip("+-")
        if not body:
            raise ValueError(f"cannot parse term {token!r}")
        coeff, dq, dz = 1, 0, 0
        for part in body.split("*"):
            if part.isdigit():
                coeff *= int(part)
                continue
            m = _FACTOR_RE.match(part)
            if m is None:
                raise ValueError(f"cannot parse factor {part!r} in {text!r}")
            e = int(m.group(2) or 1)
            if m.group(1) == "q":
                dq += e
            else:
                dz += e
        acc[(dq, dz)] = acc.get((dq, dz), 0) + sign * coeff
    return Poly2(acc)


def poly_to_term_list(p: Poly2) -> list[dict[str, int]]:
    """JSON-friendly term list in canonical order."""
    return [{"dq": dq, "dz": dz, "c": c} for (dq, dz), c in p.items()]


def poly_from_term_list(terms: Iterable[Mapping[str, int]]) -> Poly2:
    return Poly2({(int(t["dq"]), int(t["dz"])): int(t["c"]) for t in terms})
