"""Chain-semantics oracle for the way-below tables.

``x`` is way-below ``y`` when every ascending chain whose supremum
dominates ``y`` eventually dominates ``x``.  Chains are exactly the
representable ones: a finite prefix plus one of the three tail rules, so
the oracle quantifies over every tail rule and every grid target at or
above ``y``.  A prefix can only add domination chances, so refutation
searches use empty prefixes.

The closed-form tables of every catalog instance are required to agree
with this oracle on full enumeration grids; the test suite and the
``verify-paper`` driver both run the comparison.
"""

from __future__ import annotations

from .chains import ApproachCap, ApproachNumeric, Chain, Stationary
from .core import SampleSpec, Semigroup
from .elements import Element


def refuting_chain(S: Semigroup, x: Element, y: Element, targets) -> Chain | None:
    """A chain with supremum above y and no entry dominating x, if one exists."""
    for e in targets:
        if not S.leq(y, e):
            continue
        for tail in (Stationary(e), ApproachNumeric(e), ApproachCap(e)):
            if not S.tail_dominates(tail, x):
                return Chain((), tail)
    return None


def way_below_by_chains(S: Semigroup, x: Element, y: Element, targets) -> bool:
    return refuting_chain(S, x, y, targets) is None


def oracle_targets(S: Semigroup, sample: SampleSpec, extra=()) -> list[Element]:
    """Grid targets extended by their infinity-scaled copies and extras."""
    targets = list(S.enumerate_elements(sample))
    for x in list(targets) + list(extra):
        ix = S.times_infinity(x)
        if ix not in targets:
            targets.append(ix)
    for x in extra:
        if x not in targets:
            targets.append(x)
    return targets


def way_below_table_agrees(S: Semigroup, sample: SampleSpec):
    """Compare the closed-form table with the chain semantics on the grid.

    Returns (ok, mismatches) where each mismatch is (x, y, table_verdict).
    """
    grid = S.enumerate_elements(sample)
    mismatches = []
    for y in grid:
        targets = oracle_targets(S, sample, extra=(y,))
        for x in grid:
            table = S.way_below(x, y)
            chains = way_below_by_chains(S, x, y, targets)
            if table != chains:
                mismatches.append((x, y, table))
    return (not mismatches, mismatches)
