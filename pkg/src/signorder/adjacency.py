"""Signs of (x^2 - 1) * W*: which patterns can the degree-two lift produce?

For monic W* = x^(d-2) + u_1 x^(d-3) + ... + u_(d-2) with u_1 > 0, the
product W = (x^2 - 1) W* has coefficients

    1,  u_1,  u_2 - 1,  u_3 - u_1,  ...,  u_k - u_(k-2),  ...,
    -u_(d-3),  -u_(d-2)          (with u_0 = 1 throughout).

The sign of the difference u_k - u_(k-2) follows from the signs of W*
alone exactly when sgn u_k != sgn u_(k-2); when the two agree the slot is
genuinely free, decided by magnitudes.  symbolic_lift records that state
of knowledge, expand_S lists every resolution of the free slots, and
filter_T keeps the resolutions whose sign-change count grew by exactly
one; those are the candidates consistent with the lift's root count,
since the factor x^2 - 1 adds one root on each side of zero.

verify_proposition exhausts all sources degree by degree and reports the
blocked windows found in every tightened resolution; an empty hit list
anywhere is a counterexample.  The free slots sit on two independent
difference chains (even and odd k), so any combination of resolved signs
is attainable by an actual coefficient vector; tests exercise that
constructively.

The tightening claim, that every tightened resolution contains a blocked
window, holds for 3 <= d <= 7 and fails from d = 8 on.  The minimal
counterexample is unique: source (+,+,+,+,-,+,-) with the window-free
resolution (+,+,-,+,-,-,-,-,+), realized by the coefficient vector
u = (1, 1/2, 2, -1, 1, -2), whose cofactor has only two real roots.
Extensive sampling finds no window-free lift of any real-rooted
cofactor, and that restricted case is the only one the canonicity
theorem consumes, so the classification itself is not in doubt; the
general-coefficient claim, however, is refuted, and this verifier
reports that honestly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import BadNormalization
from .patterns import (
    MINUS,
    PLUS,
    ConfigHit,
    SignPattern,
    find_configurations,
    sign_counts,
)
from .polynomials import ExactPoly

FREE = 0  # a slot whose sign the source does not determine

_ENTRY_CHAR = {PLUS: "+", MINUS: "-", FREE: "?"}
_CHAR_ENTRY = {"+": PLUS, "-": MINUS, "?": FREE, "±": FREE}


@dataclass(frozen=True, repr=False)
class AmbiguousPattern:
    """A sign pattern with free slots: entries over {+1, -1, 0 = free}."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 4:
            raise ValueError("lifted patterns have at least four entries")
        for e in self.entries:
            if e not in (PLUS, MINUS, FREE):
                raise ValueError(f"entries are +1, -1 or 0, got {e!r}")
        if self.entries[0] != PLUS or self.entries[1] != PLUS:
            raise ValueError("lifted patterns start (+, +)")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return "".join(_ENTRY_CHAR[e] for e in self.entries)

    def __repr__(self) -> str:
        return f"AmbiguousPattern({str(self)!r})"


def parse_ambiguous(text: str) -> AmbiguousPattern:
    """Parse '++?--' ('?' or the two-sign symbol for a free slot)."""
    cleaned = text.strip()
    for noise in "(), \t":
        cleaned = cleaned.replace(noise, "")
    return AmbiguousPattern(tuple(_CHAR_ENTRY[ch] for ch in cleaned))


@dataclass(frozen=True)
class STReport:
    """One source pattern's lift: all resolutions, the tightened subset,
    and the blocked windows found in each tightened member."""

    source: SignPattern
    S: frozenset[SignPattern]
    T: frozenset[SignPattern]
    verdicts: dict[SignPattern, tuple[ConfigHit, ...]]

    @property
    def holds(self) -> bool:
        return all(self.verdicts[p] for p in self.T)

    def to_json_dict(self) -> dict:
        return {
            "source": str(self.source),
            "S": sorted(str(p) for p in self.S),
            "T": sorted(str(p) for p in self.T),
            "verdicts": {
                str(p): [{"position": h.position, "kind": h.kind} for h in hits]
                for p, hits in sorted(self.verdicts.items(), key=lambda kv: str(kv[0]))
            },
        }


def lift_poly(wstar: ExactPoly) -> ExactPoly:
    """Exact product (x^2 - 1) * wstar; wstar must be monic."""
    if wstar.coeffs[-1] != 1:
        raise ValueError("lift source polynomial must be monic")
    return ExactPoly((Fraction(-1), Fraction(0), Fraction(1))) * wstar


def symbolic_lift(source: SignPattern) -> AmbiguousPattern:
    """Signs of (x^2 - 1) * W* that follow from the signs of W* alone.

    source lists the signs of 1, u_1, ..., u_(d-2) and must begin (+, +).
    The result has the source's length plus two: two fixed leading signs,
    one difference slot per source entry from u_2 on, and the negated last
    two source signs.
    """
    signs = source.signs
    if len(signs) < 2 or signs[1] != PLUS:
        raise BadNormalization(
            "lift sources begin (+, +): monic with positive subleading coefficient"
        )
    entries = [PLUS, PLUS]
    for k in range(2, len(signs)):
        entries.append(signs[k] if signs[k] != signs[k - 2] else FREE)
    entries.append(-signs[-2])
    entries.append(-signs[-1])
    return AmbiguousPattern(tuple(entries))


def expand_S(ambiguous: AmbiguousPattern) -> set[SignPattern]:
    """Every resolution of the free slots: 2^(number of slots) patterns."""
    free = [i for i, e in enumerate(ambiguous.entries) if e == FREE]
    base = list(ambiguous.entries)
    out = set()
    for choice in product((PLUS, MINUS), repeat=len(free)):
        for i, s in zip(free, choice):
            base[i] = s
        out.add(SignPattern(tuple(base)))
    return out


def filter_T(resolutions: set[SignPattern], source: SignPattern) -> set[SignPattern]:
    """Resolutions whose sign-change count exceeds the source's by one."""
    want = sign_counts(source)[0] + 1
    return {p for p in resolutions if sign_counts(p)[0] == want}


def lift_sources(d: int) -> Iterator[SignPattern]:
    """All 2^(d-3) normalized sources of length d-1, '+' before '-'."""
    for tail in product((PLUS, MINUS), repeat=d - 3):
        yield SignPattern((PLUS, PLUS) + tail)


def verify_proposition(d: int) -> list[STReport]:
    """Exhaust every lift source for degree d and collect the evidence.

    Each report pairs the tightened resolutions with the blocked windows
    they contain; report.holds is False exactly on a counterexample.
    Reports come back in source enumeration order.

    Every report holds for d <= 7.  From d = 8 on some do not (one source
    at d = 8, growing with the degree); each counterexample is genuine
    and is backed by an explicit coefficient vector, see the module
    docstring and the tests.
    """
    if d < 3:
        raise ValueError("the lift needs degree d >= 3")
    reports = []
    for source in lift_sources(d):
        ambiguous = symbolic_lift(source)
        resolutions = expand_S(ambiguous)
        tightened = filter_T(resolutions, source)
        verdicts = {
            p: tuple(find_configurations(p)) for p in sorted(tightened, key=str)
        }
        reports.append(
            STReport(source, frozenset(resolutions), frozenset(tightened), verdicts)
        )
    return reports
