"""The catalog of concrete Cu-semigroups with closed-form decision tables.

Every instance decides order, addition, way-below, infima and chain
realization in closed form; the way-below tables are cross-validated against
the chain semantics by the oracle module and the test suite.

Instances:

* ``ext-nat``   -- the extended naturals N-bar = {0, 1, 2, ..., inf};
* ``ext-q``     -- the extended nonnegative rationals [0, inf];
* ``two-point`` -- {0, inf};
* ``jiang-su``  -- Z = N ⊔ (0, inf], compact naturals plus soft values;
* ``lsc-nat`` / ``lsc-q`` -- monotone maps from a finite poset into the
  extended naturals / rationals (lower semicontinuous functions on the
  Alexandrov space of the poset);
* ``sum``       -- componentwise direct sums;
* ``fixed``     -- the submonoid fixed by a finite group action.
"""

from __future__ import annotations

from .chains import ApproachCap, Chain, Stationary
from .core import Capabilities, SampleSpec, Semigroup, integer_grid, rational_grid, sort_elements
from .elements import Element, ZVal
from .errors import CapabilityMissing, SpecError, ValidationError
from .posets import GroupAction, Poset
from .values import INF, ZERO, ExtVal, ext


# ---------------------------------------------------------------------------
# numeric instances


class _NumericSg(Semigroup):
    """Shared behaviour of the instances whose payload is one ExtVal."""

    def contains(self, x: Element) -> bool:
        return isinstance(x.payload, ExtVal) and self._valid_value(x.payload)

    def _valid_value(self, v: ExtVal) -> bool:
        return True

    def zero(self) -> Element:
        return self.el(ZERO)

    def leq(self, x, y) -> bool:
        self.check_pair(x, y)
        return x.payload <= y.payload

    def add(self, x, y) -> Element:
        self.check_pair(x, y)
        return self.el(x.payload + y.payload)

    def scale(self, n, x) -> Element:
        self.check_tag(x)
        if n == 0:
            return self.zero()
        return self.el(x.payload * n)

    def times_infinity(self, x) -> Element:
        self.check_tag(x)
        return self.zero() if x.payload.is_zero else self.el(INF)

    def infimum(self, x, y) -> Element:
        self.check_pair(x, y)
        return self.el(x.payload.min(y.payload))

    def finite_values(self, x):
        return [x.payload.frac] if x.payload.is_finite else []


class ExtNatSg(_NumericSg):
    """The extended naturals; way-below is "finite and below"."""

    kind = "ext-nat"
    capabilities = Capabilities(
        divisible2w=False,
        weakly_cancellative=True,
        inf_semilattice=True,
        has_infima=True,
        all_soft=False,
    )

    def _valid_value(self, v):
        return v.is_inf or v.is_integer

    def way_below(self, x, y) -> bool:
        self.check_pair(x, y)
        return x.payload.is_finite and x.payload <= y.payload

    def _map_payload(self, payload, rule, k):
        if payload.is_inf:
            return ExtVal(k)
        return payload if rule == "approach" else payload.min(ExtVal(k))

    def _noncompact_tail(self, x):
        return ApproachCap(x)

    def basis_chain(self, x):
        self.check(x)
        if x.payload.is_finite:
            n = int(x.payload.frac)
            return Chain(tuple(self.el(ExtVal(i)) for i in range(n + 1)), Stationary(x))
        return Chain((), ApproachCap(x))

    def enumerate_elements(self, sample: SampleSpec):
        return [self.el(v) for v in integer_grid(sample.value_cap)]


class ExtQSg(_NumericSg):
    """The extended nonnegative rationals; way-below is "zero or strictly below"."""

    kind = "ext-q"
    capabilities = Capabilities(
        divisible2w=True,
        weakly_cancellative=True,
        inf_semilattice=True,
        has_infima=True,
        all_soft=True,
    )

    def way_below(self, x, y) -> bool:
        self.check_pair(x, y)
        if x.payload.is_zero:
            return True
        return x.payload.is_finite and x.payload < y.payload

    def _map_payload(self, payload, rule, k):
        if rule == "approach":
            return self.approach_value(payload, k)
        return self.cap_value(payload, k)

    def enumerate_elements(self, sample: SampleSpec):
        return [self.el(v) for v in rational_grid(sample.value_cap, sample.denominator_cap)]


class TwoPointSg(_NumericSg):
    """{0, inf}: both elements are compact; way-below equals the order."""

    kind = "two-point"
    capabilities = Capabilities(
        divisible2w=True,
        weakly_cancellative=False,
        inf_semilattice=True,
        has_infima=True,
        all_soft=True,
    )

    def _valid_value(self, v):
        return v.is_zero or v.is_inf

    def way_below(self, x, y) -> bool:
        self.check_pair(x, y)
        return x.payload <= y.payload

    def _map_payload(self, payload, rule, k):
        # every increasing sequence in {0, inf} is eventually constant
        return payload

    def enumerate_elements(self, sample: SampleSpec):
        return [self.zero(), self.el(INF)]


# ---------------------------------------------------------------------------
# the Jiang-Su semigroup Z = N ⊔ (0, inf]


class JiangSuSg(Semigroup):
    """Z: compact naturals plus a soft copy of (0, inf].

    Order: compacts and softs compare numerically among themselves;
    ``Soft p <= Compact n`` iff p <= n, and ``Compact n <= Soft q`` iff
    n < q.  Addition absorbs any nonzero soft term into a soft sum.
    Way-below: compacts are way-below whatever dominates them; a soft
    element needs a finite value and strict inequality against soft.
    """

    kind = "jiang-su"
    capabilities = Capabilities(
        divisible2w=True,
        weakly_cancellative=True,
        inf_semilattice=True,
        has_infima=True,
        all_soft=False,
    )

    def compact(self, n) -> Element:
        return self.el(ZVal(False, ext(n)))

    def soft(self, q) -> Element:
        return self.el(ZVal(True, ext(q)))

    def contains(self, x: Element) -> bool:
        return isinstance(x.payload, ZVal)

    def zero(self) -> Element:
        return self.compact(0)

    def leq(self, x, y) -> bool:
        self.check_pair(x, y)
        a, b = x.payload, y.payload
        if a.soft == b.soft:
            return a.value <= b.value
        if a.soft:  # soft <= compact iff value <= value
            return a.value <= b.value
        # compact <= soft iff strictly below
        return a.value < b.value

    def add(self, x, y) -> Element:
        self.check_pair(x, y)
        a, b = x.payload, y.payload
        total = a.value + b.value
        if not a.soft and not b.soft:
            return self.compact(total)
        if total.is_zero:
            return self.zero()
        return self.soft(total)

    def way_below(self, x, y) -> bool:
        self.check_pair(x, y)
        a, b = x.payload, y.payload
        if not a.soft:
            return self.leq(x, y)
        if a.value.is_inf:
            return False
        if b.soft:
            return a.value < b.value
        return a.value <= b.value

    def scale(self, n, x) -> Element:
        self.check_tag(x)
        if n == 0 or x.payload.value.is_zero:
            return self.zero()
        v = x.payload.value * n
        return self.soft(v) if x.payload.soft else self.compact(v)

    def times_infinity(self, x) -> Element:
        self.check_tag(x)
        if x.payload.value.is_zero:
            return self.zero()
        return self.soft(INF)

    def infimum(self, x, y) -> Element:
        self.check_pair(x, y)
        a, b = x.payload, y.payload
        if a.soft == b.soft:
            return self.el(ZVal(a.soft, a.value.min(b.value)))
        soft, comp = (a, b) if a.soft else (b, a)
        if soft.value <= comp.value:
            return self.el(soft)
        return self.el(comp)

    def finite_values(self, x):
        return [x.payload.value.frac] if x.payload.value.is_finite else []

    def _map_payload(self, payload: ZVal, rule, k):
        if not payload.soft:
            # compact coordinates are way-below themselves; cap still applies
            if rule == "cap":
                return ZVal(False, payload.value.min(ExtVal(k)))
            return payload
        v = self.approach_value(payload.value, k) if rule == "approach" else self.cap_value(payload.value, k)
        if v.is_zero:
            return ZVal(False, ZERO)
        return ZVal(True, v)

    def enumerate_elements(self, sample: SampleSpec):
        out = [self.compact(n) for n in range(sample.value_cap + 1)]
        for v in rational_grid(sample.value_cap, sample.denominator_cap):
            if not v.is_zero:
                out.append(self.soft(v))
        return sort_elements(out)


# ---------------------------------------------------------------------------
# Lsc instances over a finite poset


class LscSg(Semigroup):
    """Monotone maps from a finite poset into the extended naturals or rationals."""

    def __init__(self, poset: Poset, rational: bool):
        self.poset = poset
        self.rational = rational
        self.kind = "lsc-q" if rational else "lsc-nat"
        divisible = rational
        self.capabilities = Capabilities(
            divisible2w=divisible,
            weakly_cancellative=True,
            inf_semilattice=True,
            has_infima=True,
            all_soft=rational,
        )

    @property
    def signature(self) -> str:
        return f"{self.kind}({self.poset.signature()})"

    def make(self, values: dict) -> Element:
        """Build from an atom -> value mapping; every atom must be assigned."""
        missing = [a for a in self.poset.atoms if a not in values]
        if missing:
            raise ValidationError(f"missing atoms {missing} in {values}")
        payload = tuple(ext(values[a]) for a in self.poset.atoms)
        x = self.el(payload)
        if not self.contains(x):
            raise ValidationError(f"{values} is not monotone on {self.poset.signature()}")
        return x

    def chi(self, atoms, value=INF) -> Element:
        """value * indicator of the up-closure of the given atoms."""
        bits = set()
        for a in atoms:
            i = self.poset.index(a)
            bits.update(j for j in range(len(self.poset)) if self.poset.leq[i][j])
        return self.el(tuple(ext(value) if i in bits else ZERO for i in range(len(self.poset))))

    def contains(self, x: Element) -> bool:
        p = x.payload
        if not isinstance(p, tuple) or len(p) != len(self.poset):
            return False
        if not all(isinstance(v, ExtVal) for v in p):
            return False
        if not self.rational and not all(v.is_inf or v.is_integer for v in p):
            return False
        return self.poset.is_monotone(p)

    def zero(self) -> Element:
        return self.el((ZERO,) * len(self.poset))

    def leq(self, x, y) -> bool:
        self.check_pair(x, y)
        return all(a <= b for a, b in zip(x.payload, y.payload))

    def add(self, x, y) -> Element:
        self.check_pair(x, y)
        return self.el(tuple(a + b for a, b in zip(x.payload, y.payload)))

    def way_below(self, x, y) -> bool:
        self.check_pair(x, y)
        if self.rational:
            return all(a.is_zero or (a.is_finite and a < b) for a, b in zip(x.payload, y.payload))
        return all(a.is_finite and a <= b for a, b in zip(x.payload, y.payload))

    def scale(self, n, x) -> Element:
        self.check_tag(x)
        if n == 0:
            return self.zero()
        return self.el(tuple(v * n for v in x.payload))

    def times_infinity(self, x) -> Element:
        self.check_tag(x)
        return self.el(tuple(ZERO if v.is_zero else INF for v in x.payload))

    def infimum(self, x, y) -> Element:
        self.check_pair(x, y)
        return self.el(tuple(a.min(b) for a, b in zip(x.payload, y.payload)))

    def finite_values(self, x):
        return [v.frac for v in x.payload if v.is_finite]

    def _map_payload(self, payload, rule, k):
        if self.rational:
            fn = self.approach_value if rule == "approach" else self.cap_value
            return tuple(fn(v, k) for v in payload)
        if rule == "cap":
            return tuple(self.cap_value(v, k) for v in payload)
        return tuple(v if v.is_finite else ExtVal(k) for v in payload)

    def _noncompact_tail(self, x):
        return super()._noncompact_tail(x) if self.rational else ApproachCap(x)

    def enumerate_elements(self, sample: SampleSpec):
        grid = (
            rational_grid(sample.value_cap, sample.denominator_cap)
            if self.rational
            else integer_grid(sample.value_cap)
        )
        count_bound = len(grid) ** len(self.poset)
        self._guard_count(count_bound)
        maps = self.poset.monotone_maps(grid)
        return sort_elements(self.el(m) for m in maps)

    def permute(self, x: Element, perm) -> Element:
        """Push the payload along an atom permutation: new[perm[i]] = old[i]."""
        self.check_tag(x)
        out = [ZERO] * len(self.poset)
        for i, v in enumerate(x.payload):
            out[perm[i]] = v
        return self.el(tuple(out))

    def inf_chi_support(self, x: Element):
        """The up-set U with x = inf*chi_U, or None if x is not of that shape."""
        self.check(x)
        if all(v.is_zero or v.is_inf for v in x.payload):
            return tuple(v.is_inf for v in x.payload)
        return None


# ---------------------------------------------------------------------------
# direct sums


class SumSg(Semigroup):
    """Componentwise direct sum of two instances."""

    def __init__(self, first: Semigroup, second: Semigroup):
        self.components = (first, second)
        self.kind = "sum"
        caps = [c.capabilities for c in self.components]
        self.capabilities = Capabilities(
            divisible2w=all(c.divisible2w for c in caps),
            weakly_cancellative=all(c.weakly_cancellative for c in caps),
            inf_semilattice=all(c.inf_semilattice for c in caps),
            has_infima=all(c.has_infima for c in caps),
            all_soft=all(c.all_soft for c in caps),
        )

    @property
    def signature(self) -> str:
        return f"sum({self.components[0].signature},{self.components[1].signature})"

    @property
    def element_signature(self) -> str:
        return f"sum({self.components[0].element_signature},{self.components[1].element_signature})"

    def pair(self, x: Element, y: Element) -> Element:
        return self.el((self.components[0].check(x), self.components[1].check(y)))

    def contains(self, x: Element) -> bool:
        p = x.payload
        if not isinstance(p, tuple) or len(p) != 2:
            return False
        for comp, e in zip(self.components, p):
            if not isinstance(e, Element) or e.kind != comp.element_signature or not comp.contains(e):
                return False
        return True

    def zero(self) -> Element:
        return self.el(tuple(c.zero() for c in self.components))

    def _zip(self, op, x, y):
        self.check_pair(x, y)
        return self.el(tuple(op(c, a, b) for c, a, b in zip(self.components, x.payload, y.payload)))

    def leq(self, x, y) -> bool:
        self.check_pair(x, y)
        return all(c.leq(a, b) for c, a, b in zip(self.components, x.payload, y.payload))

    def way_below(self, x, y) -> bool:
        self.check_pair(x, y)
        return all(c.way_below(a, b) for c, a, b in zip(self.components, x.payload, y.payload))

    def add(self, x, y) -> Element:
        return self._zip(lambda c, a, b: c.add(a, b), x, y)

    def infimum(self, x, y) -> Element:
        if not self.capabilities.has_infima:
            return super().infimum(x, y)
        return self._zip(lambda c, a, b: c.infimum(a, b), x, y)

    def scale(self, n, x) -> Element:
        self.check_tag(x)
        return self.el(tuple(c.scale(n, a) for c, a in zip(self.components, x.payload)))

    def times_infinity(self, x) -> Element:
        self.check_tag(x)
        return self.el(tuple(c.times_infinity(a) for c, a in zip(self.components, x.payload)))

    def finite_values(self, x):
        out = []
        for c, a in zip(self.components, x.payload):
            out.extend(c.finite_values(a))
        return out

    def _map_payload(self, payload, rule, k):
        return tuple(
            Element(e.kind, c._map_payload(e.payload, rule, k))
            for c, e in zip(self.components, payload)
        )

    def enumerate_elements(self, sample: SampleSpec):
        firsts = self.components[0].enumerate_elements(sample)
        seconds = self.components[1].enumerate_elements(sample)
        self._guard_count(len(firsts) * len(seconds))
        return sort_elements(self.el((a, b)) for a in firsts for b in seconds)

    def permute(self, x: Element, perm) -> Element:
        self.check_tag(x)
        out = [None] * len(x.payload)
        for i, e in enumerate(x.payload):
            out[perm[i]] = e
        return self.el(tuple(out))


# ---------------------------------------------------------------------------
# sub-semigroups: common machinery, fixed points


class SubSemigroup(Semigroup):
    """A submonoid of an ambient instance, closed under sums and chain suprema.

    Elements keep the ambient tag; membership is the extra `contains`
    condition.  All decision tables are inherited, which is sound because
    the carrier is closed under the ambient chain suprema.
    """

    def __init__(self, ambient: Semigroup):
        self.ambient = ambient
        self.capabilities = ambient.capabilities

    @property
    def element_signature(self) -> str:
        return self.ambient.element_signature

    def member(self, x: Element) -> bool:
        raise NotImplementedError

    def contains(self, x: Element) -> bool:
        return self.ambient.contains(x) and self.member(x)

    def zero(self) -> Element:
        return self.ambient.zero()

    def leq(self, x, y):
        self.check_pair(x, y)
        return self.ambient.leq(x, y)

    def way_below(self, x, y):
        self.check_pair(x, y)
        return self.ambient.way_below(x, y)

    def add(self, x, y):
        self.check_pair(x, y)
        return self.ambient.add(x, y)

    def infimum(self, x, y):
        self.check_pair(x, y)
        return self.ambient.infimum(x, y)

    def scale(self, n, x):
        self.check_tag(x)
        return self.ambient.scale(n, x)

    def times_infinity(self, x):
        self.check_tag(x)
        return self.ambient.times_infinity(x)

    def finite_values(self, x):
        return self.ambient.finite_values(x)

    def _map_payload(self, payload, rule, k):
        return self.ambient._map_payload(payload, rule, k)

    def basis_chain(self, x):
        self.check(x)
        chain = self.ambient.basis_chain(x)
        # the canonical transforms keep the carrier; verify the prefix
        for e in chain.prefix:
            if not self.member(e):
                raise CapabilityMissing(f"basis chain of {x!r} leaves the carrier at {e!r}")
        return chain

    def enumerate_elements(self, sample: SampleSpec):
        return [x for x in self.ambient.enumerate_elements(sample) if self.member(x)]


class FixedSg(SubSemigroup):
    """Fixed points of a finite group action by order-automorphisms."""

    def __init__(self, ambient: Semigroup, action: GroupAction):
        if not isinstance(ambient, (LscSg, SumSg)):
            raise SpecError(f"actions are supported on lsc and sum instances, not {ambient.kind}")
        if action.base == "atoms" and not isinstance(ambient, LscSg):
            raise SpecError("atom permutations act on lsc instances only")
        if action.base == "components" and not isinstance(ambient, SumSg):
            raise SpecError("component permutations act on sums only")
        if isinstance(ambient, LscSg):
            for g in action.generators:
                if not ambient.poset.is_automorphism(g):
                    raise ValidationError(f"permutation {g} is not an order-automorphism")
        else:
            c0, c1 = ambient.components
            for g in action.generators:
                if list(g) != sorted(g):  # nontrivial permutation
                    if c0.signature != c1.signature:
                        raise ValidationError("component permutation needs isomorphic summands")
        super().__init__(ambient)
        self.action = action
        self.kind = "fixed"
        if not ambient.capabilities.has_infima:
            raise CapabilityMissing("fixed-point instances need ambient infima for the orbit projection")

    @property
    def signature(self) -> str:
        gens = ";".join(",".join(map(str, g)) for g in self.action.generators)
        return f"fixed({self.ambient.signature};{gens})"

    def apply(self, g, x: Element) -> Element:
        return self.ambient.permute(x, g)

    def member(self, x: Element) -> bool:
        return all(self.apply(g, x) == x for g in self.action.generators)

    def phi(self, x: Element) -> Element:
        """Orbit infimum: the largest fixed point below x."""
        self.ambient.check(x)
        out = x
        for g in self.action.closure:
            out = self.ambient.infimum(out, self.apply(g, x))
        return out


def phi(handle: FixedSg, x: Element) -> Element:
    if not isinstance(handle, FixedSg):
        raise CapabilityMissing("the orbit projection needs a fixed-point instance")
    return handle.phi(x)


# ---------------------------------------------------------------------------
# construction


def build_instance(kind: str, *, poset=None, components=None, ambient=None, action=None) -> Semigroup:
    """Construct a handle; raises SpecError for malformed combinations."""
    if kind == "ext-nat":
        return ExtNatSg()
    if kind == "ext-q":
        return ExtQSg()
    if kind == "two-point":
        return TwoPointSg()
    if kind == "jiang-su":
        return JiangSuSg()
    if kind in ("lsc-nat", "lsc-q"):
        if poset is None:
            raise SpecError(f"{kind} needs a poset")
        return LscSg(poset, rational=(kind == "lsc-q"))
    if kind == "sum":
        if not components or len(components) != 2:
            raise SpecError("sum needs exactly two components")
        return SumSg(components[0], components[1])
    if kind == "fixed":
        if ambient is None or action is None:
            raise SpecError("fixed needs an ambient instance and an action")
        return FixedSg(ambient, action)
    raise SpecError(f"unknown instance kind {kind!r}")
