"""Shared helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

from signorder import ExactPoly, FREE, MINUS, PLUS, SignPattern, symbolic_lift


def build_u_vector(source: SignPattern, resolution: SignPattern) -> tuple[Fraction, ...]:
    """Coefficients (1, u_1, ..., u_(d-2)) whose lift realizes `resolution`.

    The difference slots compare u_k with u_(k-2), so the even and odd
    indices form two independent chains.  Walking each chain, a free slot
    with target sign t and shared sign s is forced by |u_k| = 2|u_(k-2)|
    when t == s and |u_(k-2)|/2 otherwise; determined slots reuse the
    previous magnitude.
    """
    amb = symbolic_lift(source)
    signs = source.signs
    n = len(signs)
    mags = [Fraction(1)] * n  # |u_k|; u_0 = 1 and u_1 = 1 anchor the chains
    for k in range(2, n):
        if amb.entries[k] == FREE:
            target, shared = resolution[k], signs[k]
            mags[k] = mags[k - 2] * 2 if target == shared else mags[k - 2] / 2
        else:
            mags[k] = mags[k - 2]
    return tuple(m if s == PLUS else -m for m, s in zip(mags, signs))


def poly_from_u(u: tuple[Fraction, ...]) -> ExactPoly:
    """Monic polynomial with coefficient u_k at x^(len(u)-1-k)."""
    return ExactPoly(tuple(reversed(u)))
