"""Tagged semigroup elements.

An ``Element`` pairs the signature of the instance it belongs to with an
immutable payload.  Payload shapes by instance kind:

* ``ext-nat``, ``ext-q``, ``two-point`` -- a single :class:`ExtVal`;
* ``jiang-su`` -- a :class:`ZVal` (compact natural or soft positive value);
* ``lsc-nat``, ``lsc-q`` -- a tuple of :class:`ExtVal`, one per poset atom,
  order-preserving with respect to the poset;
* ``sum`` -- a pair of component Elements.

Equality is structural; instances are chosen so that structural equality
coincides with semigroup equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import MixedInstance
from .values import ExtVal


@dataclass(frozen=True)
class ZVal:
    """Payload of the Jiang-Su semigroup Z = N ⊔ (0, inf].

    ``soft=False`` carries a finite natural (the compact part); ``soft=True``
    carries a strictly positive rational or infinity.
    """

    soft: bool
    value: ExtVal

    def __post_init__(self):
        if self.soft:
            if self.value.is_zero:
                raise ValueError("soft payloads are strictly positive")
        else:
            if not self.value.is_integer:
                raise ValueError(f"compact payloads are naturals, got {self.value}")

    def sort_key(self):
        return (*self.value.sort_key(), self.soft)


@dataclass(frozen=True)
class Element:
    kind: str
    payload: Any

    def sort_key(self):
        return payload_sort_key(self.payload)

    def __repr__(self):
        return f"Element({self.kind!r}, {self.payload!r})"


def payload_sort_key(payload):
    if isinstance(payload, ExtVal):
        return payload.sort_key()
    if isinstance(payload, ZVal):
        return payload.sort_key()
    if isinstance(payload, Element):
        return payload.sort_key()
    if isinstance(payload, tuple):
        return tuple(payload_sort_key(p) for p in payload)
    raise TypeError(f"unsupported payload {payload!r}")


def same_instance(x: Element, y: Element) -> None:
    if x.kind != y.kind:
        raise MixedInstance(f"elements of {x.kind} and {y.kind} cannot be mixed")
