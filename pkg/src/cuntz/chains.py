"""Ascending chains: the only representation of increasing sequences.

A chain is a finite way-below-increasing prefix plus a tail rule, which
makes every supremum computable in constant time:

* ``Stationary(e)`` -- the tail repeats ``e``; supremum ``e``.
* ``ApproachNumeric(target)`` -- the k-th tail entry replaces every finite
  coordinate value v by max(v - 1/k, 0) capped at k, and every infinite
  coordinate by k.  (The cap keeps entries finite-valued, which is what
  makes the tail way-below-increasing on instances with a strict way-below
  relation.)  On integer-valued coordinates the entry keeps finite values
  unchanged, since those are way-below themselves.  Supremum: the target.
* ``ApproachCap(target)`` -- the k-th tail entry replaces every coordinate
  value v by min(v, k).  Supremum: the target.

The realization of a tail rule on a concrete payload belongs to the
instance; see ``Semigroup.tail_entry``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import Element


@dataclass(frozen=True)
class Stationary:
    element: Element


@dataclass(frozen=True)
class ApproachNumeric:
    target: Element


@dataclass(frozen=True)
class ApproachCap:
    target: Element


Tail = Stationary | ApproachNumeric | ApproachCap

TAIL_KINDS = (Stationary, ApproachNumeric, ApproachCap)


def tail_target(tail: Tail) -> Element:
    return tail.element if isinstance(tail, Stationary) else tail.target


@dataclass(frozen=True)
class Chain:
    prefix: tuple[Element, ...]
    tail: Tail

    @property
    def sup_element(self) -> Element:
        return tail_target(self.tail)
