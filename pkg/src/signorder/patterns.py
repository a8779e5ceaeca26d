"""Sign patterns and orders of root moduli.

A *sign pattern* records the coefficient signs of a real degree-d
polynomial with all coefficients nonzero, listed from x^d down to the
constant term and normalized so the leading sign is '+'.  An *order of
moduli* is a word over {N, P} giving, from the smallest root modulus to
the largest, whether that root is negative (N) or positive (P).

For monic polynomials with d real roots, none zero and no two of equal
absolute value, the two notions are linked: the number of sign changes
equals the number of positive roots and the number of sign preservations
equals the number of negative roots, so a pattern and an order are
compatible only when those counts agree.

This module is pure combinatorics on the two alphabets; polynomial
arithmetic lives elsewhere.  All values are immutable, all functions
pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DegreeZero, EmptyInput, IllegalCharacter, LeadingMinus

PLUS = 1
MINUS = -1

_SIGN_OF_CHAR = {"+": PLUS, "-": MINUS}


@dataclass(frozen=True, repr=False)
class SignPattern:
    """Coefficient signs from x^d down to x^0; index 0 is the leading sign."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", tuple(self.signs))
        if not self.signs:
            raise EmptyInput("a sign pattern needs at least one sign")
        for s in self.signs:
            if s not in (PLUS, MINUS):
                raise IllegalCharacter(f"signs are +1 or -1, got {s!r}")
        if self.signs[0] != PLUS:
            raise LeadingMinus("patterns are normalized to a '+' leading sign")

    @property
    def degree(self) -> int:
        return len(self.signs) - 1

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    def __getitem__(self, index):
        return self.signs[index]

    def __str__(self) -> str:
        return "".join("+" if s == PLUS else "-" for s in self.signs)

    def __repr__(self) -> str:
        return f"SignPattern({str(self)!r})"


@dataclass(frozen=True, repr=False)
class ModuliOrder:
    """Root signs listed from the smallest modulus to the largest."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        for ch in self.letters:
            if ch not in ("N", "P"):
                raise IllegalCharacter(f"order letters are 'N' or 'P', got {ch!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __str__(self) -> str:
        return "<".join(self.letters)

    def __repr__(self) -> str:
        return f"ModuliOrder({str(self)!r})"


class ConfigHit(NamedTuple):
    """One matched four-sign window; position is 1-based from the left."""

    position: int
    kind: str

    def __str__(self) -> str:
        return f"{self.kind}@{self.position}"


# ---- the four blocked windows -------------------------------------------
#
# A pattern containing any of these in four consecutive positions admits
# more than one order of moduli; a pattern containing none forces exactly
# its canonical order.

WINDOW_A = (PLUS, PLUS, MINUS, MINUS)
WINDOW_B = (MINUS, MINUS, PLUS, PLUS)
WINDOW_C = (PLUS, MINUS, MINUS, PLUS)
WINDOW_D = (MINUS, PLUS, PLUS, MINUS)

_WINDOW_KIND = {WINDOW_A: "A", WINDOW_B: "B", WINDOW_C: "C", WINDOW_D: "D"}


def parse_pattern(text: str) -> SignPattern:
    """Parse '++--' or '+,+,-,-'; commas, spaces and parentheses are noise."""
    cleaned = text.strip()
    for noise in "(), \t":
        cleaned = cleaned.replace(noise, "")
    cleaned = cleaned.replace("−", "-")  # unicode minus pasted from text
    if not cleaned:
        raise EmptyInput("empty sign pattern")
    signs = []
    for ch in cleaned:
        if ch not in _SIGN_OF_CHAR:
            raise IllegalCharacter(f"unexpected character {ch!r} in pattern")
        signs.append(_SIGN_OF_CHAR[ch])
    return SignPattern(tuple(signs))


def parse_order(text: str) -> ModuliOrder:
    """Parse 'N<P<N' or 'NPN'; '<', commas and spaces are noise."""
    cleaned = text.strip()
    for noise in "<, \t":
        cleaned = cleaned.replace(noise, "")
    if not cleaned:
        raise EmptyInput("empty order of moduli")
    return ModuliOrder(tuple(cleaned))


def sign_counts(pattern: SignPattern) -> tuple[int, int]:
    """(changes, preservations) over the d adjacent coefficient pairs.

    These equal the positive and negative root counts of any polynomial
    realizing the pattern with real roots of distinct nonzero moduli.
    """
    signs = pattern.signs
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return changes, pattern.degree - changes


def canonical_order(pattern: SignPattern) -> ModuliOrder:
    """The order of moduli forced when the root moduli are widely spread.

    Read the pattern right to left: the k-th letter compares the
    coefficients of x^k and x^(k-1).  Opposite signs put the k-th smallest
    modulus on a positive root (P), identical signs on a negative one (N).
    Every pattern is realizable with this order (see realize_canonical);
    canonical patterns are realizable with no other.
    """
    if pattern.degree == 0:
        raise DegreeZero("a degree-0 pattern has no roots to order")
    signs = pattern.signs
    d = pattern.degree
    letters = tuple(
        "P" if signs[d - k] != signs[d - k + 1] else "N" for k in range(1, d + 1)
    )
    return ModuliOrder(letters)


def negate_variable(pattern: SignPattern) -> SignPattern:
    """Sign pattern of Q(-x), renormalized to a '+' leading sign.

    Swaps positive with negative roots, so it exchanges changes with
    preservations and maps each window A <-> B and C <-> D in place.
    """
    d = pattern.degree
    flipped = [s if (d - i) % 2 == 0 else -s for i, s in enumerate(pattern.signs)]
    if flipped[0] == MINUS:
        flipped = [-s for s in flipped]
    return SignPattern(tuple(flipped))


def find_configurations(pattern: SignPattern) -> list[ConfigHit]:
    """All windows equal to A, B, C or D, in increasing position.

    A = (+,+,-,-)   B = (-,-,+,+)   C = (+,-,-,+)   D = (-,+,+,-)
    """
    signs = pattern.signs
    hits = []
    for m in range(len(signs) - 3):
        kind = _WINDOW_KIND.get(signs[m : m + 4])
        if kind is not None:
            hits.append(ConfigHit(m + 1, kind))
    return hits


def is_canonical(pattern: SignPattern) -> bool:
    """True iff no window matches; degree 0 and 1 patterns are canonical."""
    return not find_configurations(pattern)


def isolated_features(pattern: SignPattern) -> tuple[list[int], list[int]]:
    """Positions of isolated sign changes and isolated sign preservations.

    Label each adjacent pair 'c' (change) or 'p' (preservation), left to
    right; the label at 1-based position k is isolated when 2 <= k <= d-1
    and both neighbors carry the opposite label.  Boundary labels are
    never isolated, lacking a neighbor on one side.

    An isolated change is the same thing as a window A or B starting one
    position to its left, and an isolated preservation a window C or D,
    so (is_canonical, no isolated features) is a two-route check.
    """
    signs = pattern.signs
    labels = ["c" if a != b else "p" for a, b in zip(signs, signs[1:])]
    changes: list[int] = []
    preservations: list[int] = []
    for k in range(1, len(labels) - 1):
        triple = (labels[k - 1], labels[k], labels[k + 1])
        if triple == ("p", "c", "p"):
            changes.append(k + 1)
        elif triple == ("c", "p", "c"):
            preservations.append(k + 1)
    return changes, preservations


def classify_rigid(order: ModuliOrder) -> SignPattern | None:
    """The unique pattern realizing the order, if there is exactly one.

    Exactly four orders of each length d >= 2 are rigid: the two constant
    words (all roots on one side of zero) and the two strictly alternating
    ones.  For those the answer is the pattern whose canonical order is
    the given word, rebuilt by replaying the letters downward from the
    leading coefficient (letter k ties the signs of x^k and x^(k-1), so
    the walk runs over the letters in reverse).  Returns None for every
    other order.
    """
    letters = order.letters
    if not letters:
        raise EmptyInput("empty order of moduli")
    constant = all(ch == letters[0] for ch in letters)
    alternating = all(a != b for a, b in zip(letters, letters[1:]))
    if not constant and not alternating:
        return None
    signs = [PLUS]
    for ch in reversed(letters):
        signs.append(signs[-1] if ch == "N" else -signs[-1])
    return SignPattern(tuple(signs))
