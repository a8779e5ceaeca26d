"""Realizing sign patterns by explicit rational root sets.

Two construction routes:

realize_canonical spreads the moduli geometrically (ratio^1 ... ratio^d,
signs straight from the canonical order) and doubles the ratio until the
exact expansion reproduces the pattern.  With well-spread moduli every
elementary symmetric function is dominated by its single largest product,
so the very first ratio normally succeeds.

witness_search hunts for root sets realizing a *prescribed* order, which
for non-canonical orders typically needs near-tied moduli.  The sign
pattern of a root set is invariant under scaling all roots by a positive
factor, so candidates are drawn as modulus chains pinned at m_1 = 1 with
random rational gap factors m_(k+1)/m_k drawn from three bands (near 1,
moderate, wide); four deterministic geometric grids go first.  A
vectorized float pass discards candidate rows whose coefficient signs
mismatch the target by far more than the accumulated rounding error;
every verdict, and in particular every returned witness, is decided in
exact arithmetic.  Floats never decide a sign.

All searches are deterministic functions of (pattern, order, budget,
seed), and all functions here are pure, so callers may fan independent
searches out across threads or processes if they wish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import DegreeZero, IncompatibleCounts, RatioCapExceeded, ZeroCoefficient
from .patterns import MINUS, PLUS, ModuliOrder, SignPattern, canonical_order, sign_counts
from .polynomials import Rational, RootSet, pattern_of_poly, poly_from_roots

GRID_RATIOS = (Fraction(3, 2), Fraction(2), Fraction(4), Fraction(10))
RATIO_CAP = 1 << 20

_BATCH = 4096
# gap factor bands as (denominator, numerator excess range): a gap is
# (den + k)/den with 1 <= k <= span, giving (1, 1.06], (1, 2.0625], (1, 10]
_GAP_BANDS = ((1000, 60), (16, 17), (2, 18))
# float coefficients closer to zero than this fraction of their magnitude
# bound are treated as undecided and passed on to the exact check
_SLACK = 1e-9
_PERTURB = Fraction(10008, 10007)


@dataclass(frozen=True)
class WitnessRequest:
    """A (pattern, order) target plus search budget and RNG seed."""

    pattern: SignPattern
    order: ModuliOrder
    budget: int = 100_000
    seed: int = 42

    def __post_init__(self) -> None:
        changes, preservations = sign_counts(self.pattern)
        positives = sum(1 for ch in self.order.letters if ch == "P")
        negatives = len(self.order.letters) - positives
        if (changes, preservations) != (positives, negatives):
            raise IncompatibleCounts(
                f"pattern {self.pattern} has {changes} changes and "
                f"{preservations} preservations; order {self.order} wants "
                f"{positives} positive and {negatives} negative roots"
            )
        if self.budget <= 0:
            raise ValueError("budget must be positive")


@dataclass(frozen=True)
class SearchReport:
    """Everything realizable_orders learned about one pattern."""

    pattern: SignPattern
    canonical_order: ModuliOrder
    orders_found: dict[ModuliOrder, RootSet]
    samples_used: int

    def to_json_dict(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "canonical_order": str(self.canonical_order),
            "orders": [
                {"order": str(order), "witness": [str(r) for r in witness.roots]}
                for order, witness in sorted(
                    self.orders_found.items(), key=lambda kv: str(kv[0])
                )
            ],
            "samples_used": self.samples_used,
        }


def realize_canonical(pattern: SignPattern, ratio: Rational = Fraction(4)) -> RootSet:
    """Roots of moduli ratio^1 ... ratio^d signed by the canonical order.

    The ratio doubles until the exact expansion reproduces the pattern;
    RatioCapExceeded signals that it grew past 2^20 without a match, which
    no pattern is expected to trigger.
    """
    r = Fraction(ratio)
    if r <= 1:
        raise ValueError("ratio must exceed 1")
    if pattern.degree == 0:
        return RootSet(())
    order = canonical_order(pattern)
    while r <= RATIO_CAP:
        roots = tuple(
            r**k if letter == "P" else -(r**k)
            for k, letter in enumerate(order.letters, start=1)
        )
        try:
            if pattern_of_poly(poly_from_roots(roots)) == pattern:
                return RootSet(roots)
        except ZeroCoefficient:
            pass
        r *= 2
    raise RatioCapExceeded(f"no match for {pattern} below ratio {RATIO_CAP}")


def enumerate_orders(changes: int, preservations: int) -> list[ModuliOrder]:
    """All orders with the given counts, lexicographic with N before P."""
    d = changes + preservations
    out = []
    for negatives in combinations(range(d), preservations):
        letters = ["P"] * d
        for i in negatives:
            letters[i] = "N"
        out.append(ModuliOrder(tuple(letters)))
    return out


def witness_search(request: WitnessRequest) -> Optional[RootSet]:
    """First root set found realizing (pattern, order), None if the budget
    runs out.

    Deterministic in (pattern, order, budget, seed).  A returned witness
    is always verified exactly; None only means no witness surfaced within
    the budget, not that none exists.
    """
    found, _ = _search(request)
    return found


def realizable_orders(
    pattern: SignPattern, budget: int = 100_000, seed: int = 42
) -> SearchReport:
    """Try every order compatible with the pattern's sign counts.

    The canonical order is realized constructively; each other order gets
    a witness_search with the full budget.  Orders not found may still be
    realizable at a larger budget: absence is evidence, not proof.
    """
    if pattern.degree == 0:
        raise DegreeZero("a degree-0 pattern has no roots to order")
    changes, preservations = sign_counts(pattern)
    canon = canonical_order(pattern)
    found: dict[ModuliOrder, RootSet] = {}
    samples = 0
    for order in enumerate_orders(changes, preservations):
        if order == canon:
            found[order] = realize_canonical(pattern)
            continue
        witness, used = _search(WitnessRequest(pattern, order, budget, seed))
        samples += used
        if witness is not None:
            found[order] = witness
    return SearchReport(
        pattern=pattern, canonical_order=canon, orders_found=found, samples_used=samples
    )


# ---- search internals -----------------------------------------------------


def _request_rng(request: WitnessRequest) -> np.random.Generator:
    # seed material from explicit integers only, so results are stable
    # across processes and interpreter versions
    pattern_key = 1
    for s in request.pattern.signs:
        pattern_key = (pattern_key << 1) | (s == MINUS)
    order_key = 1
    for ch in request.order.letters:
        order_key = (order_key << 1) | (ch == "P")
    entropy = [request.seed & ((1 << 64) - 1), pattern_key, order_key]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def _draw_gap_ints(
    rng: np.random.Generator, rows: int, gaps: int
) -> tuple[np.ndarray, np.ndarray]:
    """Integer numerators/denominators of gap factors, each strictly > 1."""
    band = rng.integers(0, len(_GAP_BANDS), size=(rows, gaps))
    u = rng.random((rows, gaps))
    nums = np.empty((rows, gaps), dtype=np.int64)
    dens = np.empty((rows, gaps), dtype=np.int64)
    for b, (den, span) in enumerate(_GAP_BANDS):
        mask = band == b
        dens[mask] = den
        nums[mask] = den + 1 + (u[mask] * span).astype(np.int64)
    return nums, dens


def _expand_batch(roots: np.ndarray) -> np.ndarray:
    """Row-wise monic float expansion; column j holds the x^j coefficient."""
    rows, d = roots.shape
    coeffs = np.zeros((rows, d + 1))
    coeffs[:, 0] = 1.0
    for k in range(d):
        prev = coeffs[:, : k + 1].copy()
        coeffs[:, 1 : k + 2] = prev
        coeffs[:, 0] = 0.0
        coeffs[:, : k + 1] -= roots[:, k : k + 1] * prev
    return coeffs


def _exact_roots(
    nums_row: np.ndarray, dens_row: np.ndarray, order: ModuliOrder
) -> tuple[Fraction, ...]:
    moduli = [Fraction(1)]
    for p, q in zip(nums_row.tolist(), dens_row.tolist()):
        moduli.append(moduli[-1] * Fraction(p, q))
    return tuple(
        m if ch == "P" else -m for m, ch in zip(moduli, order.letters)
    )


def _verify(
    roots: tuple[Fraction, ...], pattern: SignPattern, perturb: bool = False
) -> Optional[tuple[Fraction, ...]]:
    """Exact check; on a vanishing coefficient optionally nudge the largest
    modulus (which cannot disturb the ordering) and retry once."""
    try:
        if pattern_of_poly(poly_from_roots(roots)) == pattern:
            return roots
        return None
    except ZeroCoefficient:
        if not perturb:
            return None
        bumped = roots[:-1] + (roots[-1] * _PERTURB,)
        try:
            if pattern_of_poly(poly_from_roots(bumped)) == pattern:
                return bumped
        except ZeroCoefficient:
            pass
        return None


def _search(request: WitnessRequest) -> tuple[Optional[RootSet], int]:
    pattern, order, budget = request.pattern, request.order, request.budget
    d = len(order.letters)
    if d == 0:
        return RootSet(()), 0
    if d == 1:
        # scale invariance leaves a single candidate
        root = Fraction(1) if order.letters[0] == "P" else Fraction(-1)
        hit = _verify((root,), pattern)
        return (RootSet(hit), 1) if hit else (None, 1)

    used = 0
    for ratio in GRID_RATIOS:
        if used >= budget:
            return None, used
        used += 1
        roots = tuple(
            ratio**k if letter == "P" else -(ratio**k)
            for k, letter in enumerate(order.letters, start=1)
        )
        hit = _verify(roots, pattern)
        if hit is not None:
            return RootSet(hit), used

    rng = _request_rng(request)
    sign_vec = np.array([1.0 if ch == "P" else -1.0 for ch in order.letters])
    # target[j] is the required sign of the x^j coefficient
    target = np.array(
        [1 if s == PLUS else -1 for s in reversed(pattern.signs)], dtype=np.int64
    )
    while used < budget:
        batch = min(_BATCH, budget - used)
        nums, dens = _draw_gap_ints(rng, batch, d - 1)
        gap_f = nums / dens
        moduli_f = np.cumprod(
            np.concatenate([np.ones((batch, 1)), gap_f], axis=1), axis=1
        )
        coeffs = _expand_batch(moduli_f * sign_vec)
        bound = _expand_batch(-moduli_f)  # all coefficients of prod (x + m_k)
        undecided = np.abs(coeffs) <= _SLACK * bound
        wrong = (np.sign(coeffs) != target) & ~undecided
        for i in np.flatnonzero(~wrong.any(axis=1)):
            roots = _exact_roots(nums[i], dens[i], order)
            hit = _verify(roots, pattern, perturb=True)
            if hit is not None:
                return RootSet(hit), used + int(i) + 1
        used += batch
    return None, used
