"""Permutations on {0,...,N-1} and small finitely generated permutation groups."""

from __future__ import annotations

from typing import Iterable, Iterator

ELEMENT_CAP = 200_000


class ElementCapExceeded(Exception):
    """Signal that a group enumeration grew past the element cap.

    Carries the partial element count reached; catching it is the normal way
    to degrade to a capped verdict, it does not indicate a bug.
    """

    def __init__(self, cap: int, partial_count: int):
        super().__init__(
            f"group enumeration exceeded cap {cap} (reached {partial_count} elements)"
        )
        self.cap = cap
        self.partial_count = partial_count


class Perm(tuple):
    """A bijection on {0,...,N-1} stored as its tuple of images.

    Composition uses the right-action convention: (p * q)(x) = q(p(x)),
    i.e. p is applied first.  This matches composing maps x -> x*g of a
    group acting on itself on the right.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> "Perm":
        t = tuple(images)
        n = len(t)
        if n == 0:
            raise ValueError("permutation degree must be at least 1")
        seen = [False] * n
        for v in t:
            if not isinstance(v, int) or v < 0 or v >= n or seen[v]:
                raise ValueError(f"images {t!r} are not a bijection on 0..{n - 1}")
            seen[v] = True
        return tuple.__new__(cls, t)

    @classmethod
    def _trusted(cls, images: tuple) -> "Perm":
        # internal fast path: caller guarantees images is a valid bijection tuple
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._trusted(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Perm") -> "Perm":  # type: ignore[override]
        if len(self) != len(other):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return Perm._trusted(tuple(other[v] for v in self))

    def __call__(self, point: int) -> int:
        return self[point]

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, v in enumerate(self):
            inv[v] = i
        return Perm._trusted(tuple(inv))

    def conjugate_by(self, g: "Perm") -> "Perm":
        """Return g^-1 * self * g."""
        if len(self) != len(g):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(g)}")
        out = [0] * len(self)
        for i, v in enumerate(self):
            out[g[i]] = g[v]
        return Perm._trusted(tuple(out))

    def __pow__(self, k: int) -> "Perm":  # type: ignore[override]
        n = len(self)
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self))

    def cycle_lengths(self) -> list[int]:
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self[x]
                length += 1
            out.append(length)
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*self.cycle_lengths())

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data: list[int]) -> "Perm":
        return cls(data)


def orbit(gens: Iterable[Perm], point: int) -> set[int]:
    """Smallest set containing point and closed under all generators."""
    gens = list(gens)
    for g in gens:
        if point >= len(g):
            raise ValueError(f"point {point} out of range for degree {len(g)}")
    seen = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def closure(gens: Iterable[Perm], cap: int = ELEMENT_CAP) -> list[Perm]:
    """Full element list of <gens> via breadth-first product closure.

    Output is deterministic (sorted by image arrays).  Raises
    ElementCapExceeded once more than cap elements have been generated.
    """
    gens = [tuple(g) for g in gens]
    if gens:
        degs = {len(g) for g in gens}
        if len(degs) != 1:
            raise ValueError(f"generators have mixed degrees {sorted(degs)}")
        n = degs.pop()
    else:
        raise ValueError("closure needs at least one generator to fix the degree")
    ident = tuple(range(n))
    elements = {ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in gens:
                y = tuple(g[v] for v in x)
                if y not in elements:
                    elements.add(y)
                    if len(elements) > cap:
                        raise ElementCapExceeded(cap, len(elements))
                    new_frontier.append(y)
        frontier = new_frontier
    return [Perm._trusted(t) for t in sorted(elements)]


class PermGroup:
    """A finite permutation group given by generators.

    The exhaustive element list is populated lazily and only when the group
    order stays at or below the element cap; enumeration past the cap raises
    ElementCapExceeded.  Instances are immutable values after construction
    (the lazy element list is compute-then-publish, so sharing is safe).
    """

    def __init__(self, degree: int, generators: Iterable[Perm], _elements=None):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = tuple(g if isinstance(g, Perm) else Perm(g) for g in generators)
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator degree {len(g)} != group degree {degree}")
        self.degree = degree
        self.generators = gens
        self._elements: tuple[Perm, ...] | None = (
            tuple(_elements) if _elements is not None else None
        )
        self._element_set: frozenset | None = None

    def elements(self, cap: int = ELEMENT_CAP) -> tuple[Perm, ...]:
        if self._elements is None:
            if self.generators:
                elems = tuple(closure(self.generators, cap))
            else:
                elems = (Perm.identity(self.degree),)
            self._elements = elems
        return self._elements

    def element_set(self, cap: int = ELEMENT_CAP) -> frozenset:
        if self._element_set is None:
            self._element_set = frozenset(self.elements(cap))
        return self._element_set

    def order(self, cap: int = ELEMENT_CAP) -> int:
        return len(self.elements(cap))

    def contains(self, p: Perm, cap: int = ELEMENT_CAP) -> bool:
        if len(p) != self.degree:
            raise ValueError(f"degree mismatch: {len(p)} vs {self.degree}")
        return tuple(p) in self.element_set(cap)

    def orbit(self, point: int) -> set[int]:
        if point >= self.degree:
            raise ValueError(f"point {point} out of range")
        return orbit(self.generators, point)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_regular(self, cap: int = ELEMENT_CAP) -> bool:
        """Transitive with order equal to the degree (trivial point stabilizers)."""
        return self.is_transitive() and self.order(cap) == self.degree

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements())

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [list(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PermGroup":
        return cls(data["degree"], [Perm(g) for g in data["generators"]])


def is_member(group: PermGroup, p: Perm, cap: int = ELEMENT_CAP) -> bool:
    return group.contains(p, cap)


def is_normal_subgroup(ambient: PermGroup, sub: PermGroup, cap: int = ELEMENT_CAP) -> bool:
    """True iff every ambient generator conjugates sub into itself.

    Conjugating each generator of sub by each generator of ambient into sub
    suffices: conjugation maps the finite group sub injectively into itself,
    hence onto itself, and products/inverses of normalizing elements
    normalize.  Caller guarantees sub <= ambient.
    """
    if ambient.degree != sub.degree:
        raise ValueError("degree mismatch between ambient group and subgroup")
    sub_set = sub.element_set(cap)
    for a in ambient.generators:
        for s in sub.generators:
            if tuple(s.conjugate_by(a)) not in sub_set:
                return False
    return True


def is_regular(group: PermGroup, cap: int = ELEMENT_CAP) -> bool:
    return group.is_regular(cap)
