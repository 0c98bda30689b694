"""Permutations in one-line notation and finite permutation groups.

Groups are materialized eagerly or on demand by closing generators under
composition (desk scale: every group here fits comfortably in memory).
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

from .errors import InputError, OracleBoundError


class Permutation:
    """Bijection of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("map", "_hash")

    def __init__(self, mapping: Sequence[int]):
        m = tuple(mapping)
        if sorted(m) != list(range(len(m))):
            raise InputError(f"not a permutation of 0..{len(m) - 1}: {m}")
        self.map = m
        self._hash = hash(m)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.map)

    def __call__(self, v: int) -> int:
        return self.map[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition acting left: (p * q)(x) = p(q(x))."""
        if self.degree != other.degree:
            raise InputError("degree mismatch in composition")
        return Permutation(tuple(self.map[x] for x in other.map))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.map)
        for i, x in enumerate(self.map):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.map))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.degree
        out = []
        for s in range(self.degree):
            if seen[s]:
                continue
            cyc = [s]
            seen[s] = True
            v = self.map[s]
            while v != s:
                cyc.append(v)
                seen[v] = True
                v = self.map[v]
            out.append(tuple(cyc))
        return tuple(out)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.map == other.map

    def __lt__(self, other: "Permutation") -> bool:
        return self.map < other.map

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.map})"


def mulclose(generators: Iterable[Permutation], max_size: int | None = None
             ) -> frozenset[Permutation]:
    """Close a generator set under composition (iterative frontier sweep)."""
    gens = list(generators)
    if not gens:
        raise InputError("mulclose needs at least one generator")
    n = gens[0].degree
    els = {Permutation.identity(n)}
    frontier = list(els)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = g * a
                if b not in els:
                    els.add(b)
                    new.append(b)
                    if max_size is not None and len(els) > max_size:
                        raise OracleBoundError(
                            f"group closure exceeded bound {max_size}")
        frontier = new
    return frozenset(els)


class PermutationGroup:
    """Permutation group of a fixed degree, held as generators plus an
    optional cached element set."""

    __slots__ = ("degree", "generators", "_elements")

    def __init__(self, degree: int, generators: Sequence[Permutation] = (),
                 elements: Iterable[Permutation] | None = None):
        self.degree = degree
        for p in generators:
            if p.degree != degree:
                raise InputError("generator degree mismatch")
        self.generators = tuple(generators)
        self._elements = frozenset(elements) if elements is not None else None
        if self._elements is not None and not self.generators:
            self.generators = tuple(sorted(self._elements))

    @classmethod
    def trivial(cls, n: int) -> "PermutationGroup":
        return cls(n, (), [Permutation.identity(n)])

    @classmethod
    def symmetric(cls, n: int) -> "PermutationGroup":
        if n <= 1:
            return cls.trivial(max(n, 0))
        gens = [Permutation((1, 0) + tuple(range(2, n))),
                Permutation(tuple(range(1, n)) + (0,))]
        return cls(n, gens)

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]
                      ) -> "PermutationGroup":
        els = frozenset(elements)
        return cls(degree, reduce_generators(degree, els), els)

    def elements(self) -> tuple[Permutation, ...]:
        """All elements, sorted by one-line notation."""
        if self._elements is None:
            self._elements = mulclose(self.generators or
                                      [Permutation.identity(self.degree)])
        return tuple(sorted(self._elements))

    def element_maps(self) -> frozenset[tuple[int, ...]]:
        return frozenset(p.map for p in self.elements())

    def order(self) -> int:
        return len(self.elements())

    def __contains__(self, p: Permutation) -> bool:
        if self._elements is None:
            self.elements()
        return p in self._elements  # type: ignore[operator]

    def is_trivial(self) -> bool:
        return self.order() == 1

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of the natural action on 0..degree-1, sorted by minimum."""
        gens = self.generators or [Permutation.identity(self.degree)]
        seen = [False] * self.degree
        out = []
        for s in range(self.degree):
            if seen[s]:
                continue
            orb = {s}
            stack = [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                for g in gens:
                    u = g(v)
                    if not seen[u]:
                        seen[u] = True
                        orb.add(u)
                        stack.append(u)
            out.append(tuple(sorted(orb)))
        return tuple(out)

    def exponent_divides_two(self) -> bool:
        return all(p.order() <= 2 for p in self.elements())

    def __repr__(self) -> str:
        size = "?" if self._elements is None else len(self._elements)
        return f"PermutationGroup(degree={self.degree}, order={size})"


def reduce_generators(degree: int, elements: Iterable[Permutation]
                      ) -> tuple[Permutation, ...]:
    """Greedy small generating set for a materialized element set."""
    els = sorted(elements)
    gens: list[Permutation] = []
    closed = {Permutation.identity(degree)}
    for p in els:
        if p not in closed:
            gens.append(p)
            closed = set(mulclose(gens))
    return tuple(gens)
