"""Exact univariate polynomials over the rationals, built from their roots.

Everything verdict-relevant in this package runs on Fraction arithmetic;
no float ever appears here.  Expansion from roots clears denominators
first and convolves over the integers, which is much faster than
accumulating Fraction products coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import InvalidRootSet, LeadingMinus, ZeroCoefficient
from .patterns import MINUS, PLUS, ModuliOrder, SignPattern

Rational = Union[int, Fraction]


@dataclass(frozen=True, repr=False)
class ExactPoly:
    """Dense rational polynomial; coeffs[k] multiplies x^k, leading nonzero."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPoly(tuple(out))

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = _fmt_coeff(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{_fmt_coeff(mag)}{power}"
            parts.append(sign + body)
        if not parts:
            return "0"
        return parts[0].lstrip("+") + "".join(parts[1:])

    def __repr__(self) -> str:
        return f"ExactPoly({str(self)!r})"


def _fmt_coeff(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else f"({q})"


@dataclass(frozen=True, repr=False)
class RootSet:
    """Nonzero rational roots with pairwise distinct absolute values.

    The distinct-moduli requirement is what makes an order of moduli well
    defined; operations that only need the product of linear factors (see
    poly_from_roots) do not require it.
    """

    roots: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        roots = tuple(Fraction(r) for r in self.roots)
        object.__setattr__(self, "roots", roots)
        if any(r == 0 for r in roots):
            raise InvalidRootSet("zero is not an admissible root")
        moduli = sorted(abs(r) for r in roots)
        for a, b in zip(moduli, moduli[1:]):
            if a == b:
                raise InvalidRootSet(f"two roots share the modulus {a}")

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.roots)

    def sorted_by_modulus(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.roots, key=abs))

    def __str__(self) -> str:
        return "{" + ", ".join(str(r) for r in self.roots) + "}"

    def __repr__(self) -> str:
        return f"RootSet({str(self)})"


def poly_from_roots(roots: Union[RootSet, Iterable[Rational]]) -> ExactPoly:
    """Monic exact expansion of prod (x - r); the empty product is 1.

    Accepts arbitrary rational roots.  Genericity (no zero root, no tied
    moduli) belongs to RootSet and is deliberately not re-checked here, so
    degenerate products such as (x^2 - 1) * (x + 5) stay expressible.
    """
    rs = roots.roots if isinstance(roots, RootSet) else tuple(Fraction(r) for r in roots)
    # prod (x - p/q) == prod (q x - p) / prod q: integer convolution, one division
    coeffs = [1]
    denom = 1
    for r in rs:
        p, q = r.numerator, r.denominator
        denom *= q
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += q * c
            nxt[j] -= p * c
        coeffs = nxt
    return ExactPoly(tuple(Fraction(c, denom) for c in coeffs))


def pattern_of_poly(poly: ExactPoly) -> SignPattern:
    """Coefficient signs from x^d down to x^0.

    Requires a positive leading coefficient.  Raises ZeroCoefficient for
    non-generic polynomials: a vanishing coefficient has no sign, so such
    polynomials carry no pattern at all.
    """
    if poly.coeffs[-1] < 0:
        raise LeadingMinus("normalize to a positive leading coefficient first")
    signs = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if c == 0:
            raise ZeroCoefficient(k)
        signs.append(PLUS if c > 0 else MINUS)
    return SignPattern(tuple(signs))


def moduli_order_of_roots(roots: Union[RootSet, Iterable[Rational]]) -> ModuliOrder:
    """Letters N/P of the roots sorted by increasing modulus."""
    rs = roots if isinstance(roots, RootSet) else RootSet(tuple(roots))
    letters = tuple("P" if r > 0 else "N" for r in rs.sorted_by_modulus())
    return ModuliOrder(letters)
