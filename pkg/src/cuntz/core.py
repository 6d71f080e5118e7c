"""Instance-agnostic interface of a Cu-semigroup and its derived operations.

A :class:`Semigroup` bundles the decision procedures of one concrete
instance: the partial order, addition, the way-below relation, canonical
approximating chains, suprema of ascending chains, multiplication by
infinity, and (where supported) binary infima.  All values are immutable
and all operations are pure, so concurrent evaluation needs no
coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import ApproachCap, ApproachNumeric, Chain, Stationary, Tail, tail_target
from .elements import Element, same_instance
from .errors import CapabilityMissing, GridTooLarge, InvalidChain, MixedInstance
from .values import INF, ExtVal, ext

#: hard bound on enumeration sizes
GRID_BOUND = 10**6


@dataclass(frozen=True)
class Capabilities:
    """Claimed structural properties of an instance.

    These are claims used as preconditions; each one is checkable against
    the same handle by the regularity samplers.
    """

    divisible2w: bool = False
    weakly_cancellative: bool = False
    inf_semilattice: bool = False
    has_infima: bool = False
    all_soft: bool = False


@dataclass(frozen=True)
class SampleSpec:
    """Enumeration caps plus the seed used when sampling kicks in."""

    value_cap: int = 4
    denominator_cap: int = 4
    max_tuples: int = 200_000
    seed: int = 0

    def __post_init__(self):
        if self.value_cap < 1 or self.denominator_cap < 1 or self.max_tuples < 1:
            raise ValueError("sample caps must be positive")

    def key(self):
        return (self.value_cap, self.denominator_cap)


def rational_grid(cap: int, denom: int) -> list[ExtVal]:
    """All rationals p/q in [0, cap] with q <= denom, ascending, then inf."""
    values = set()
    for q in range(1, denom + 1):
        for p in range(0, cap * q + 1):
            values.add(Fraction(p, q))
    out = [ExtVal(v) for v in sorted(values)]
    out.append(INF)
    return out


def integer_grid(cap: int) -> list[ExtVal]:
    out = [ExtVal(n) for n in range(cap + 1)]
    out.append(INF)
    return out


def _ceil(frac: Fraction) -> int:
    return -((-frac.numerator) // frac.denominator)


class Semigroup:
    """Base class of all instance handles."""

    kind: str = ""
    capabilities: Capabilities = Capabilities()

    # -- identity ---------------------------------------------------------

    @property
    def signature(self) -> str:
        return self.kind

    @property
    def element_signature(self) -> str:
        """Tag carried by elements; sub-semigroups share their ambient tag."""
        return self.signature

    def __repr__(self):
        return f"<{self.signature}>"

    def el(self, payload) -> Element:
        return Element(self.element_signature, payload)

    def check(self, x: Element) -> Element:
        if x.kind != self.element_signature:
            raise MixedInstance(f"element of {x.kind} used in {self.signature}")
        if not self.contains(x):
            raise MixedInstance(f"invalid payload {x.payload!r} for {self.signature}")
        return x

    def check_tag(self, x: Element) -> Element:
        if x.kind != self.element_signature:
            raise MixedInstance(f"element of {x.kind} used in {self.signature}")
        return x

    def check_pair(self, x: Element, y: Element):
        # tag check only: payload validity is a constructor invariant and
        # re-validating it inside every order operation would dominate grid scans
        if x.kind != y.kind:
            same_instance(x, y)
        if x.kind != self.element_signature:
            raise MixedInstance(f"element of {x.kind} used in {self.signature}")

    # -- instance-specific tables (implemented by subclasses) --------------

    def contains(self, x: Element) -> bool:
        raise NotImplementedError

    def zero(self) -> Element:
        raise NotImplementedError

    def leq(self, x: Element, y: Element) -> bool:
        raise NotImplementedError

    def add(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def way_below(self, x: Element, y: Element) -> bool:
        raise NotImplementedError

    def scale(self, n: int, x: Element) -> Element:
        raise NotImplementedError

    def times_infinity(self, x: Element) -> Element:
        raise NotImplementedError

    def enumerate_elements(self, sample: SampleSpec) -> list[Element]:
        raise NotImplementedError

    def finite_values(self, x: Element) -> list[Fraction]:
        """All finite coordinate values of the payload."""
        raise NotImplementedError

    def infimum(self, x: Element, y: Element) -> Element:
        raise CapabilityMissing(f"{self.signature} does not support infima")

    # -- derived operations -------------------------------------------------

    def lt(self, x: Element, y: Element) -> bool:
        return x != y and self.leq(x, y)

    def is_compact(self, x: Element) -> bool:
        return self.way_below(x, x)

    def add_all(self, elements) -> Element:
        out = self.zero()
        for e in elements:
            out = self.add(out, e)
        return out

    # -- chain realization ---------------------------------------------------

    def approach_value(self, v: ExtVal, k: int) -> ExtVal:
        """Numeric-tail coordinate rule on a rational-valued coordinate."""
        if v.is_inf:
            return ExtVal(k)
        return v.minus_clamped(Fraction(1, k)).min(ExtVal(k))

    def cap_value(self, v: ExtVal, k: int) -> ExtVal:
        return v.min(ExtVal(k))

    def tail_entry(self, tail: Tail, k: int) -> Element:
        if isinstance(tail, Stationary):
            return tail.element
        rule = "approach" if isinstance(tail, ApproachNumeric) else "cap"
        return self.el(self._map_payload(tail.target.payload, rule, k))

    def _map_payload(self, payload, rule: str, k: int):
        raise NotImplementedError

    def _noncompact_tail(self, x: Element) -> Tail:
        return ApproachNumeric(x)

    def basis_chain(self, x: Element) -> Chain:
        """A canonical way-below-increasing chain with supremum x."""
        self.check(x)
        if self.is_compact(x):
            return Chain((x,), Stationary(x))
        return Chain((), self._noncompact_tail(x))

    def chain_entry(self, chain: Chain, i: int) -> Element:
        if i < len(chain.prefix):
            return chain.prefix[i]
        return self.tail_entry(chain.tail, i - len(chain.prefix) + 1)

    def validate_chain(self, chain: Chain) -> None:
        sup = tail_target(chain.tail)
        self.check(sup)
        for a, b in zip(chain.prefix, chain.prefix[1:]):
            if a == b or not self.way_below(a, b):
                raise InvalidChain(f"prefix not strictly way-below-increasing at {a!r}")
        for a in chain.prefix:
            if not self.leq(a, sup):
                raise InvalidChain(f"tail target {sup!r} lies below prefix entry {a!r}")

    def sup_chain(self, chain: Chain) -> Element:
        self.validate_chain(chain)
        return chain.sup_element

    def tail_dominates(self, tail: Tail, x: Element) -> bool:
        """Whether some tail entry dominates x.  Exact via a threshold index.

        Entries increase with k and every coordinate rule settles past a
        computable threshold, so a single comparison at a large-enough k
        decides the existential.
        """
        if isinstance(tail, Stationary):
            return self.leq(x, tail.element)
        k = self._domination_index(tail_target(tail), x)
        return self.leq(x, self.tail_entry(tail, k))

    def _domination_index(self, target: Element, x: Element) -> int:
        k = 2
        tvals = self.finite_values(target)
        xvals = self.finite_values(x)
        for f in tvals + xvals:
            if f > 0:
                k = max(k, _ceil(f) + 1)
        for vt in tvals:
            for vx in xvals:
                if vt > vx:
                    k = max(k, _ceil(Fraction(1) / (vt - vx)) + 1)
        return k

    def mul_inf_grid(self, elements) -> list[Element]:
        """The infinity-scaled copies of the given elements, deduplicated."""
        seen = []
        for x in elements:
            ix = self.times_infinity(x)
            if ix not in seen:
                seen.append(ix)
        return seen

    # -- enumeration helpers --------------------------------------------------

    def _guard_count(self, count: int):
        if count > GRID_BOUND:
            raise GridTooLarge(f"{count} elements exceed the bound {GRID_BOUND}")


def sort_elements(elements) -> list[Element]:
    return sorted(elements, key=lambda e: e.sort_key())
