"""Exhaustive pattern censuses and desk-scale verification drivers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

import numpy as np

from .errors import DegreeTooLarge
from .patterns import (
    MINUS,
    PLUS,
    ModuliOrder,
    SignPattern,
    canonical_order,
    is_canonical,
    sign_counts,
)
from .polynomials import RootSet
from .realize import WitnessRequest, enumerate_orders, realizable_orders, witness_search

DEFAULT_CENSUS_CEILING = 24

# four-sign windows packed little-endian, one bit per sign, minus = 1
_WINDOW_BITS = {"A": 0b1100, "B": 0b0011, "C": 0b0110, "D": 0b1001}


@dataclass(frozen=True)
class CensusRow:
    """Counts over all 2^d leading-'+' patterns of one degree.

    window_counts tallies windows, not patterns: a single pattern may
    contribute several windows of several kinds.
    """

    degree: int
    total: int
    canonical: int
    noncanonical: int
    window_counts: dict[str, int]


def census(d: int, ceiling: int = DEFAULT_CENSUS_CEILING) -> CensusRow:
    """Classify every leading-'+' pattern of degree d.

    Patterns are packed into integers (bit i set = minus at index i) and
    all 2^d of them are scanned window position by window position with
    vectorized compares; this is the same window test is_canonical makes,
    just run over the whole degree at once.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > ceiling:
        raise DegreeTooLarge(f"exhaustive census is capped at degree {ceiling}")
    total = 1 << d
    packed = np.arange(total, dtype=np.uint32) << 1  # bit 0 is the leading '+'
    blocked = np.zeros(total, dtype=bool)
    window_counts = {kind: 0 for kind in "ABCD"}
    for start in range(max(d - 2, 0)):
        window = (packed >> np.uint32(start)) & np.uint32(0b1111)
        for kind, bits in _WINDOW_BITS.items():
            hit = window == bits
            window_counts[kind] += int(np.count_nonzero(hit))
            blocked |= hit
    noncanonical = int(np.count_nonzero(blocked))
    return CensusRow(d, total, total - noncanonical, noncanonical, window_counts)


def all_patterns(d: int) -> Iterator[SignPattern]:
    """Every leading-'+' pattern of degree d, '+' before '-'."""
    for tail in product((PLUS, MINUS), repeat=d):
        yield SignPattern((PLUS,) + tail)


@dataclass(frozen=True)
class PatternVerdict:
    """Outcome of the desk check for a single pattern."""

    pattern: SignPattern
    canonical: bool
    ok: bool
    witness_order: Optional[ModuliOrder]
    witness: Optional[RootSet]
    stray_orders: tuple[ModuliOrder, ...]


def verify_theorem_small(
    d: int, budget: int = 100_000, seed: int = 42
) -> list[PatternVerdict]:
    """Check the canonicity classification on all 2^d patterns of one degree.

    A canonical pattern passes when the full sampling budget turns up no
    order besides its canonical one; a non-canonical pattern passes when
    some other order produces an explicit, exactly verified witness root
    set.  PatternVerdict.ok records the outcome per pattern; stray_orders
    lists any orders that should not have been realizable.
    """
    if not 2 <= d <= 6:
        raise ValueError("the desk check covers degrees 2 through 6")
    verdicts = []
    for pattern in all_patterns(d):
        canon = canonical_order(pattern)
        if is_canonical(pattern):
            report = realizable_orders(pattern, budget=budget, seed=seed)
            stray = tuple(o for o in report.orders_found if o != canon)
            verdicts.append(
                PatternVerdict(pattern, True, not stray, None, None, stray)
            )
        else:
            witness_order = witness = None
            changes, preservations = sign_counts(pattern)
            for order in enumerate_orders(changes, preservations):
                if order == canon:
                    continue
                found = witness_search(WitnessRequest(pattern, order, budget, seed))
                if found is not None:
                    witness_order, witness = order, found
                    break
            verdicts.append(
                PatternVerdict(
                    pattern, False, witness is not None, witness_order, witness, ()
                )
            )
    return verdicts


def plus_block_family(d: int) -> Iterator[SignPattern]:
    """Degree-d patterns made of '+' runs of length >= 3 separated by
    single '-' signs, with or without one trailing '-'."""
    n = d + 1
    for trailing in (False, True):
        extra = 1 if trailing else 0
        blocks = 1
        while 3 * blocks + (blocks - 1) + extra <= n:
            for runs in _compositions(n - (blocks - 1) - extra, blocks):
                signs: list[int] = []
                for j, run in enumerate(runs):
                    if j:
                        signs.append(MINUS)
                    signs.extend([PLUS] * run)
                if trailing:
                    signs.append(MINUS)
                yield SignPattern(tuple(signs))
            blocks += 1


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # ordered compositions of total into `parts` parts, each >= 3
    if parts == 1:
        if total >= 3:
            yield (total,)
        return
    for first in range(3, total - 3 * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def canonical_family_check(d: int) -> bool:
    """True iff every pattern in the degree-d plus-block family is canonical.

    The family grows with the degree while rigid patterns stay four per
    degree, so this doubles as a cheap lower-bound check on the census.
    """
    if d < 3:
        raise ValueError("the family needs degree d >= 3")
    patterns = list(plus_block_family(d))
    return bool(patterns) and all(is_canonical(p) for p in patterns)
