"""Finite posets (Alexandrov spaces) and finite group actions on them.

An Lsc instance is built from a poset with at most 16 atoms; its elements
are the order-preserving maps from the poset into a value lattice (opens of
the Alexandrov topology are up-sets, so order-preserving = lower
semicontinuous).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import GridTooLarge, ValidationError

MAX_ATOMS = 16


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset: named atoms plus the closed relation matrix."""

    atoms: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]  # leq[i][j] iff atom i <= atom j

    @classmethod
    def from_relations(cls, atoms, relations=()) -> "Poset":
        """Build from atom names and a list of (below, above) name pairs.

        The relation is closed reflexively and transitively; antisymmetry
        violations (cycles) are rejected.
        """
        atoms = tuple(atoms)
        if len(set(atoms)) != len(atoms):
            raise ValidationError(f"duplicate atoms in {atoms}")
        if len(atoms) > MAX_ATOMS:
            raise ValidationError(f"poset has {len(atoms)} atoms, limit is {MAX_ATOMS}")
        index = {a: i for i, a in enumerate(atoms)}
        n = len(atoms)
        mat = [[i == j for j in range(n)] for i in range(n)]
        for lo, hi in relations:
            if lo not in index or hi not in index:
                missing = lo if lo not in index else hi
                raise ValidationError(f"unknown atom {missing!r} in relation {lo}<{hi}")
            mat[index[lo]][index[hi]] = True
        # transitive closure
        for k in range(n):
            for i in range(n):
                if mat[i][k]:
                    row_k = mat[k]
                    row_i = mat[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(n):
                if i != j and mat[i][j] and mat[j][i]:
                    raise ValidationError(f"atoms {atoms[i]!r} and {atoms[j]!r} form a cycle")
        return cls(atoms, tuple(tuple(row) for row in mat))

    @classmethod
    def antichain(cls, atoms) -> "Poset":
        return cls.from_relations(atoms)

    @classmethod
    def chain(cls, atoms) -> "Poset":
        atoms = list(atoms)
        return cls.from_relations(atoms, [(atoms[i], atoms[i + 1]) for i in range(len(atoms) - 1)])

    def __len__(self):
        return len(self.atoms)

    def index(self, atom: str) -> int:
        try:
            return self.atoms.index(atom)
        except ValueError:
            raise ValidationError(f"unknown atom {atom!r}") from None

    def is_monotone(self, values) -> bool:
        """values[i] must be comparable payloads; checks order preservation."""
        n = len(self.atoms)
        for i in range(n):
            for j in range(n):
                if self.leq[i][j] and not values[i] <= values[j]:
                    return False
        return True

    def monotone_maps(self, value_grid, bound=None):
        """All order-preserving assignments of grid values to atoms.

        ``value_grid`` must be sorted ascending.  Deterministic order; raises
        GridTooLarge when the count would exceed ``bound``.
        """
        n = len(self.atoms)
        values = list(value_grid)
        preds = [[j for j in range(n) if j != i and self.leq[j][i]] for i in range(n)]
        out = []
        assignment = [0] * n  # indices into values

        def assign(i):
            if i == n:
                out.append(tuple(values[assignment[k]] for k in range(n)))
                if bound is not None and len(out) > bound:
                    raise GridTooLarge(f"more than {bound} monotone maps")
                return
            lo = max((assignment[j] for j in preds[i] if j < i), default=0)
            for vi in range(lo, len(values)):
                # predecessors assigned later are handled by the final filter
                assignment[i] = vi
                assign(i + 1)

        assign(0)
        # atoms are assigned in listing order, which need not be a linear
        # extension; filter the few non-monotone leftovers
        return [vals for vals in out if self.is_monotone(vals)]

    def up_sets(self):
        """All up-closed subsets, as boolean tuples in atom order."""
        n = len(self.atoms)
        result = []
        for bits in product((False, True), repeat=n):
            ok = True
            for i in range(n):
                if not bits[i]:
                    continue
                for j in range(n):
                    if self.leq[i][j] and not bits[j]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                result.append(bits)
        return result

    def signature(self) -> str:
        pairs = ",".join(
            f"{self.atoms[i]}<{self.atoms[j]}"
            for i in range(len(self.atoms))
            for j in range(len(self.atoms))
            if i != j and self.leq[i][j]
        )
        return f"{','.join(self.atoms)};{pairs}"

    def is_automorphism(self, perm) -> bool:
        """perm maps atom index -> atom index; checks order preservation both ways."""
        n = len(self.atoms)
        if sorted(perm) != list(range(n)):
            return False
        return all(self.leq[i][j] == self.leq[perm[i]][perm[j]] for i in range(n) for j in range(n))


def perm_from_cycles(names, cycles) -> tuple[int, ...]:
    """Build an index permutation of ``names`` from cycle notation.

    ``cycles`` is a list of lists of names, e.g. [["a","b"],["c"]].
    Names absent from every cycle are fixed.
    """
    index = {a: i for i, a in enumerate(names)}
    perm = list(range(len(names)))
    seen = set()
    for cycle in cycles:
        for name in cycle:
            if name not in index:
                raise ValidationError(f"unknown name {name!r} in permutation")
            if name in seen:
                raise ValidationError(f"name {name!r} appears twice in permutation")
            seen.add(name)
        for pos, name in enumerate(cycle):
            target = cycle[(pos + 1) % len(cycle)]
            perm[index[name]] = index[target]
    return tuple(perm)


@dataclass(frozen=True)
class GroupAction:
    """A finite group acting by automorphisms, given by one generator per entry.

    ``base`` is "atoms" (permutations of poset atoms, for Lsc instances) or
    "components" (permutations of direct-sum components).  ``closure`` holds
    every group element as an index map.
    """

    base: str
    generators: tuple[tuple[int, ...], ...]
    closure: tuple[tuple[int, ...], ...] = field(default=())

    @classmethod
    def generated(cls, base, generators) -> "GroupAction":
        gens = tuple(tuple(g) for g in generators)
        n = len(gens[0])
        identity = tuple(range(n))
        group = {identity}
        frontier = [identity]
        while frontier:
            g = frontier.pop()
            for h in gens:
                composed = tuple(h[g[i]] for i in range(n))
                if composed not in group:
                    group.add(composed)
                    frontier.append(composed)
            if len(group) > 4096:
                raise ValidationError("generated group is too large")
        return cls(base, gens, tuple(sorted(group)))
