"""Checkers for the order-algebraic regularity properties.

Each property is a universally quantified statement with existential inner
searches.  Universal variables range over the enumeration grid when the
tuple count fits ``max_tuples`` and over a seeded uniform sample otherwise
(the report says which); existential witnesses are always searched over
the full grid.  A "fail" verdict therefore always carries a re-checkable
counterexample, while a "pass" on a sampled universe is evidence rather
than proof.

Property identifiers: o5, o5-full, o6, o7, wc, sep, lss, lss-eq, div2,
unperf, near-unperf, almost-unperf, inf-sl, soft-cancel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import SampleSpec, Semigroup
from .elements import Element
from .errors import CapabilityMissing, GridTooLarge, UnknownProperty
from .soft import is_strongly_soft

PROPERTY_IDS = (
    "o5",
    "o5-full",
    "o6",
    "o7",
    "wc",
    "sep",
    "lss",
    "lss-eq",
    "div2",
    "unperf",
    "near-unperf",
    "almost-unperf",
    "inf-sl",
    "soft-cancel",
)

IMPLICATION_IDS = ("wc-sep-lss", "au-o5-lss", "trichotomy-on-soft")

#: bound on the multipliers used for the perforation properties
PERFORATION_CAP = 4


@dataclass
class Report:
    prop: str
    verdict: str  # "pass" | "fail" | "inconclusive"
    counterexample: tuple[Element, ...] | None
    searched: int
    sample: SampleSpec
    mode: str  # "full" | "sampled"
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


class Universe:
    """Grid universe of one instance with cached order data."""

    def __init__(self, S: Semigroup, sample: SampleSpec):
        self.S = S
        self.sample = sample
        self.elements = S.enumerate_elements(sample)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self._soft = None
        self._inf_scaled = None
        self._wb_below = {}
        self._wb_below_set = {}
        self._witness_pool = None

    @property
    def soft_elements(self):
        if self._soft is None:
            self._soft = [x for x in self.elements if is_strongly_soft(self.S, x)]
        return self._soft

    def times_infinity(self, x):
        if self._inf_scaled is None:
            self._inf_scaled = {}
        out = self._inf_scaled.get(x)
        if out is None:
            out = self.S.times_infinity(x)
            self._inf_scaled[x] = out
        return out

    @property
    def idempotents(self):
        return [x for x in self.elements if self.S.add(x, x) == x]

    def wb_below(self, x):
        out = self._wb_below.get(x)
        if out is None:
            out = [e for e in self.elements if self.S.way_below(e, x)]
            self._wb_below[x] = out
        return out

    def wb_below_set(self, x):
        out = self._wb_below_set.get(x)
        if out is None:
            out = frozenset(self.wb_below(x))
            self._wb_below_set[x] = out
        return out

    @property
    def witness_pool(self):
        """Denominator-refined grid for existential witnesses whose conditions
        involve strict way-below chains; a superset of the grid, so it can
        only turn spurious fails into passes."""
        if self._witness_pool is None:
            refined = SampleSpec(
                value_cap=self.sample.value_cap,
                denominator_cap=min(self.sample.denominator_cap * 4, 64),
                max_tuples=self.sample.max_tuples,
                seed=self.sample.seed,
            )
            try:
                self._witness_pool = self.S.enumerate_elements(refined)
            except GridTooLarge:
                self._witness_pool = self.elements
        return self._witness_pool

    def minimal_upper_bounds(self, x, y):
        S = self.S
        ups = [w for w in self.elements if S.leq(x, w) and S.leq(y, w)]
        return [w for w in ups if not any(u != w and S.leq(u, w) for u in ups)]


_UNIVERSES: dict = {}


def universe(S: Semigroup, sample: SampleSpec) -> Universe:
    key = (S.signature, sample.value_cap, sample.denominator_cap)
    u = _UNIVERSES.get(key)
    if u is None:
        u = Universe(S, sample)
        _UNIVERSES[key] = u
    return u


def _tuple_stream(lists, sample: SampleSpec):
    """Deterministic tuple source: full product or a seeded sample.

    Returns (iterator, total, mode).
    """
    total = 1
    for lst in lists:
        total *= len(lst)

    if total <= sample.max_tuples:

        def full():
            def rec(i, acc):
                if i == len(lists):
                    yield tuple(acc)
                    return
                for item in lists[i]:
                    acc.append(item)
                    yield from rec(i + 1, acc)
                    acc.pop()

            yield from rec(0, [])

        return full(), total, "full"

    rng = random.Random(sample.seed)

    def sampled():
        for _ in range(sample.max_tuples):
            yield tuple(rng.choice(lst) for lst in lists)

    return sampled(), sample.max_tuples, "sampled"


# ---------------------------------------------------------------------------
# pointwise property bodies: holds(S, U, *tuple) -> bool


def _holds_o5(S, U, xp, x, yp, y, z):
    if not (S.way_below(xp, x) and S.way_below(yp, y) and S.leq(S.add(x, y), z)):
        return True
    for c in U.elements:
        if S.way_below(yp, c) and S.leq(S.add(xp, c), z) and S.leq(z, S.add(x, c)):
            return True
    return False


def _holds_o5_full(S, U, xp, x, yp, y, zp, z):
    if not (S.way_below(xp, x) and S.way_below(yp, y)):
        return True
    s = S.add(x, y)
    if not (S.way_below(s, zp) and S.way_below(zp, z)):
        return True
    # the witnesses c' << c sit strictly between grid values, so they are
    # searched over the denominator-refined pool
    pool = U.witness_pool
    good_c = [c for c in pool if S.way_below(S.add(xp, c), z)]
    for cp in pool:
        if not (S.way_below(zp, S.add(x, cp)) and S.way_below(yp, cp)):
            continue
        for c in good_c:
            if S.way_below(cp, c):
                return True
    return False


def _holds_o6(S, U, xp, x, y, z):
    if not (S.way_below(xp, x) and S.way_below(x, S.add(y, z))):
        return True
    if S.capabilities.has_infima:
        # v = x^y and w = x^z dominate every admissible witness pair
        return S.leq(xp, S.add(S.infimum(x, y), S.infimum(x, z)))
    vs = [v for v in U.elements if S.leq(v, x) and S.leq(v, y)]
    ws = [w for w in U.elements if S.leq(w, x) and S.leq(w, z)]
    for v in reversed(vs):
        for w in reversed(ws):
            if S.leq(xp, S.add(v, w)):
                return True
    return False


def _holds_o7(S, U, xp, x, yp, y, w):
    if not (S.way_below(xp, x) and S.leq(x, w) and S.way_below(yp, y) and S.leq(y, w)):
        return True
    s = S.add(x, y)
    for z in U.elements:
        if S.way_below(xp, z) and S.way_below(yp, z) and S.leq(z, w) and S.leq(z, s):
            return True
    return False


def _holds_wc(S, U, x, y, z):
    if not S.way_below(S.add(x, z), S.add(y, z)):
        return True
    return S.way_below(x, y)


def _holds_sep(S, U, x, y, t):
    if not (
        S.way_below(S.add(x, t), S.add(y, t))
        and S.way_below(t, U.times_infinity(x))
        and S.way_below(t, U.times_infinity(y))
    ):
        return True
    return S.way_below(x, y)


_holds_lss = _holds_sep  # the soft restriction happens in the variable ranges


def _holds_lss_eq(S, U, x, y, tp, t):
    if not (
        S.leq(S.add(x, t), S.add(y, tp))
        and S.way_below(tp, t)
        and S.way_below(tp, U.times_infinity(y))
        and S.way_below(tp, U.times_infinity(x))
    ):
        return True
    return S.leq(x, y)


def _holds_soft_cancel(S, U, x, t, y, tp):
    if not (
        S.leq(S.add(x, t), S.add(y, tp))
        and S.way_below(tp, t)
        and S.way_below(tp, U.times_infinity(y))
    ):
        return True
    return S.leq(x, y)


def _holds_div2(S, U, xp, x):
    if not S.way_below(xp, x):
        return True
    for y in U.elements:
        if S.leq(S.scale(2, y), x) and S.leq(xp, U.times_infinity(y)):
            return True
    return False


def _holds_unperf(S, U, x, y, n):
    if not S.leq(S.scale(n, x), S.scale(n, y)):
        return True
    return S.leq(x, y)


def _holds_near_unperf(S, U, x, y):
    # premise: the tail of the multiplier window stays ordered
    if not all(S.leq(S.scale(n, x), S.scale(n, y)) for n in (PERFORATION_CAP - 1, PERFORATION_CAP)):
        return True
    return S.leq(x, y)


def _holds_almost_unperf(S, U, x, y, n):
    if not S.leq(S.scale(n + 1, x), S.scale(n, y)):
        return True
    return S.leq(x, y)


def _holds_inf_sl(S, U, x, y, z):
    lhs = S.infimum(S.add(x, z), S.add(y, z))
    rhs = S.add(S.infimum(x, y), z)
    return lhs == rhs


_MULTIPLIERS = list(range(1, PERFORATION_CAP + 1))


# ---------------------------------------------------------------------------
# restructured exhaustive evaluators
#
# The five-variable axioms have tuple spaces far beyond max_tuples already on
# 30-element grids, but they factor: hoisting the existential search out of
# the two inner universal loops decides the full product exactly at roughly
# cubic cost.  These paths report mode "full" because every tuple of the
# product is decided.


def _o5_exhaustive(S, U: Universe) -> Report:
    searched = 0
    elements = U.elements
    for x in elements:
        below_x = U.wb_below(x)
        for z in elements:
            pairs_yy = [
                (y, yp)
                for y in elements
                if S.leq(S.add(x, y), z)
                for yp in U.wb_below(y)
            ]
            if not pairs_yy:
                continue
            for xp in below_x:
                dominated = set()
                for c in elements:
                    if S.leq(z, S.add(x, c)) and S.leq(S.add(xp, c), z):
                        dominated |= U.wb_below_set(c)
                for y, yp in pairs_yy:
                    searched += 1
                    if yp not in dominated:
                        return Report("o5", "fail", (xp, x, yp, y, z), searched, U.sample, "full",
                                      note="restructured exhaustive")
    return Report("o5", "pass", None, searched, U.sample, "full", note="restructured exhaustive")


def _o6_exhaustive(S, U: Universe) -> Report:
    searched = 0
    elements = U.elements
    has_inf = S.capabilities.has_infima
    for y in elements:
        for z in elements:
            yz = S.add(y, z)
            for x in elements:
                if not S.way_below(x, yz):
                    continue
                if has_inf:
                    sums = [S.add(S.infimum(x, y), S.infimum(x, z))]
                else:
                    vs = [v for v in elements if S.leq(v, x) and S.leq(v, y)]
                    ws = [w for w in elements if S.leq(w, x) and S.leq(w, z)]
                    sums = {S.add(v, w) for v in _maximal(S, vs) for w in _maximal(S, ws)}
                for xp in U.wb_below(x):
                    searched += 1
                    if not any(S.leq(xp, s) for s in sums):
                        return Report("o6", "fail", (xp, x, y, z), searched, U.sample, "full",
                                      note="restructured exhaustive")
    return Report("o6", "pass", None, searched, U.sample, "full", note="restructured exhaustive")


def _o7_exhaustive(S, U: Universe) -> Report:
    # z <= w relaxes as w grows, so only minimal upper bounds w of {x, y}
    # need checking; a pass there extends to every larger w.
    searched = 0
    elements = U.elements
    for x in elements:
        pairs_x = U.wb_below(x)
        for y in elements:
            pairs_y = U.wb_below(y)
            s = S.add(x, y)
            for w in U.minimal_upper_bounds(x, y):
                zs = [z for z in elements if S.leq(z, w) and S.leq(z, s)]
                for xp in pairs_x:
                    zs_x = [z for z in zs if S.way_below(xp, z)]
                    union = set()
                    for z in zs_x:
                        union |= U.wb_below_set(z)
                    for yp in pairs_y:
                        searched += 1
                        if yp not in union:
                            return Report("o7", "fail", (xp, x, yp, y, w), searched, U.sample, "full",
                                          note="restructured exhaustive; minimal upper bounds")
    return Report("o7", "pass", None, searched, U.sample, "full", note="restructured exhaustive; minimal upper bounds")


def _maximal(S, items):
    out = []
    for a in items:
        if not any(b != a and S.leq(a, b) for b in items):
            out.append(a)
    return out


_EXHAUSTIVE_PATHS = {"o5": _o5_exhaustive, "o6": _o6_exhaustive, "o7": _o7_exhaustive}

#: largest grid for which the restructured paths stay affordable
_EXHAUSTIVE_LIMIT = 80


def _property_table(U: Universe):
    """property id -> (ranges, holds) with soft-typed ranges already filtered."""
    e = U.elements
    soft = U.soft_elements
    return {
        "o5": ((e, e, e, e, e), _holds_o5),
        "o5-full": ((e, e, e, e, e, e), _holds_o5_full),
        "o6": ((e, e, e, e), _holds_o6),
        "o7": ((e, e, e, e, e), _holds_o7),
        "wc": ((e, e, e), _holds_wc),
        "sep": ((e, e, e), _holds_sep),
        "lss": ((soft, e, e), _holds_lss),
        "lss-eq": ((soft, e, e, e), _holds_lss_eq),
        "div2": ((e, e), _holds_div2),
        "unperf": ((soft, soft, _MULTIPLIERS), _holds_unperf),
        "near-unperf": ((soft, soft), _holds_near_unperf),
        "almost-unperf": ((soft, soft, _MULTIPLIERS), _holds_almost_unperf),
        "almost-unperf-all": ((e, e, _MULTIPLIERS), _holds_almost_unperf),
        "inf-sl": ((e, e, e), _holds_inf_sl),
        "soft-cancel": ((soft, soft, e, e), _holds_soft_cancel),
    }


def check_property(S: Semigroup, prop: str, sample: SampleSpec) -> Report:
    """Evaluate one property on the grid; see the module docstring."""
    if prop not in PROPERTY_IDS:
        raise UnknownProperty(f"unknown property {prop!r}")
    U = universe(S, sample)
    table = _property_table(U)
    if prop in ("inf-sl",) and not S.capabilities.has_infima:
        raise CapabilityMissing(f"{S.signature} does not support infima")
    ranges, holds = table[prop]
    total = 1
    for lst in ranges:
        total *= len(lst)
    if prop in _EXHAUSTIVE_PATHS and total > sample.max_tuples and len(U.elements) <= _EXHAUSTIVE_LIMIT:
        return _EXHAUSTIVE_PATHS[prop](S, U)
    stream, total, mode = _tuple_stream(ranges, sample)
    searched = 0
    for tup in stream:
        searched += 1
        if not holds(S, U, *tup):
            return Report(prop, "fail", tup, searched, sample, mode)
    return Report(prop, "pass", None, searched, sample, mode)


def replay(S: Semigroup, prop: str, counterexample, sample: SampleSpec) -> bool:
    """Re-evaluate the property body on a recorded counterexample."""
    U = universe(S, sample)
    table = _property_table(U)
    if prop not in table:
        raise UnknownProperty(f"unknown property {prop!r}")
    _, holds = table[prop]
    return holds(S, U, *counterexample)


def check_implication(S: Semigroup, which: str, sample: SampleSpec) -> Report:
    """Premise/conclusion audits between property checks on the same grid."""
    if which == "wc-sep-lss":
        chain = ["wc", "sep", "lss"]
        reports = [check_property(S, p, sample) for p in chain]
        for earlier, later in zip(reports, reports[1:]):
            if earlier.passed and not later.passed:
                return Report(
                    which,
                    "fail",
                    later.counterexample,
                    sum(r.searched for r in reports),
                    sample,
                    later.mode,
                    note=f"{earlier.prop} holds but {later.prop} fails",
                )
        return Report(
            which,
            "pass",
            None,
            sum(r.searched for r in reports),
            sample,
            reports[0].mode,
            note="; ".join(f"{r.prop}:{r.verdict}" for r in reports),
        )
    if which == "au-o5-lss":
        au = _check_internal(S, "almost-unperf-all", sample)
        o5 = check_property(S, "o5", sample)
        lss = check_property(S, "lss", sample)
        searched = au.searched + o5.searched + lss.searched
        if au.passed and o5.passed and not lss.passed:
            return Report(which, "fail", lss.counterexample, searched, sample, lss.mode,
                          note="almost unperforated and o5 hold but lss fails")
        return Report(which, "pass", None, searched, sample, lss.mode,
                      note=f"almost-unperf:{au.verdict}; o5:{o5.verdict}; lss:{lss.verdict}")
    if which == "trichotomy-on-soft":
        reports = [check_property(S, p, sample) for p in ("unperf", "near-unperf", "almost-unperf")]
        verdicts = {r.verdict for r in reports}
        searched = sum(r.searched for r in reports)
        if verdicts != {"pass"} and verdicts != {"fail"}:
            bad = next(r for r in reports if r.verdict == "fail")
            return Report(which, "fail", bad.counterexample, searched, sample, bad.mode,
                          note="the three perforation notions disagree on the soft part")
        return Report(which, "pass", None, searched, sample, reports[0].mode,
                      note="; ".join(f"{r.prop}:{r.verdict}" for r in reports))
    raise UnknownProperty(f"unknown implication {which!r}")


def _check_internal(S, prop, sample) -> Report:
    U = universe(S, sample)
    ranges, holds = _property_table(U)[prop]
    stream, total, mode = _tuple_stream(ranges, sample)
    searched = 0
    for tup in stream:
        searched += 1
        if not holds(S, U, *tup):
            return Report(prop, "fail", tup, searched, sample, mode)
    return Report(prop, "pass", None, searched, sample, mode)


def search_inf_idempotent(S: Semigroup, sample: SampleSpec) -> Report:
    """Search for x <= y+z, x <= y+w, w idempotent, without x <= y + (z^w)."""
    if not S.capabilities.has_infima:
        raise CapabilityMissing(f"{S.signature} does not support infima")
    U = universe(S, sample)
    idem = U.idempotents
    stream, total, mode = _tuple_stream((U.elements, U.elements, U.elements, idem), sample)
    searched = 0
    for x, y, z, w in stream:
        searched += 1
        if S.leq(x, S.add(y, z)) and S.leq(x, S.add(y, w)):
            if not S.leq(x, S.add(y, S.infimum(z, w))):
                return Report("inf-idempotent", "fail", (x, y, z, w), searched, sample, mode)
    return Report("inf-idempotent", "pass", None, searched, sample, mode)
