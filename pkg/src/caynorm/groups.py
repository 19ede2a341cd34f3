"""Cyclic and dihedral groups with integer element codes, their automorphisms and holomorphs.

Element coding: the cyclic group of order n stores a^i as code i.  The
dihedral group of order 2n stores a^i as code i and a^i*b as code n+i,
where a^n = b^2 = 1 and b^-1 a b = a^-1.  This coding is the canonical
on-disk and in-memory order, so every derived permutation is reproducible
bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import gcd

from .perm import Perm, PermGroup

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"


@dataclass(frozen=True)
class GroupSpec:
    """An abstract cyclic group C_n or dihedral group D_{2n}."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in (CYCLIC, DIHEDRAL):
            raise ValueError(f"unknown group family {self.family!r}")
        if self.family == CYCLIC and self.n < 1:
            raise ValueError("cyclic group needs n >= 1")
        if self.family == DIHEDRAL and self.n < 2:
            raise ValueError("dihedral group needs n >= 2")

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls(CYCLIC, n)

    @classmethod
    def dihedral(cls, n: int) -> "GroupSpec":
        return cls(DIHEDRAL, n)

    @property
    def order(self) -> int:
        return self.n if self.family == CYCLIC else 2 * self.n

    @property
    def name(self) -> str:
        return f"C{self.n}" if self.family == CYCLIC else f"D{2 * self.n}"

    def elements(self) -> range:
        return range(self.order)

    def check_code(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise ValueError(f"element code {x} out of range for {self.name}")

    def mul(self, x: int, y: int) -> int:
        self.check_code(x)
        self.check_code(y)
        n = self.n
        if self.family == CYCLIC:
            return (x + y) % n
        xr, xflip = x % n, x >= n
        yr, yflip = y % n, y >= n
        # b a^j = a^-j b, so a rotation to the right of a flip acts inverted
        r = (xr - yr) % n if xflip else (xr + yr) % n
        return r + n if xflip != yflip else r

    def inv(self, x: int) -> int:
        self.check_code(x)
        n = self.n
        if self.family == CYCLIC:
            return (-x) % n
        if x < n:
            return (-x) % n
        return x  # reflections are involutions

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def elem_order(self, x: int) -> int:
        self.check_code(x)
        n = self.n
        if self.family == CYCLIC or x < n:
            return n // gcd(n, x % n)
        return 2

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "GroupSpec":
        return cls(data["family"], data["n"])


@dataclass(frozen=True)
class GroupAut:
    """A group automorphism realized as a permutation of element codes.

    For cyclic groups the map is a -> a^r with gcd(r, n) = 1; for dihedral
    groups with n >= 3 it is a -> a^r, b -> a^s b.  The Klein group D_4 has
    four extra automorphisms outside this parametrization; those carry
    r = s = None and only the images table.
    """

    images: tuple[int, ...]
    r: int | None = None
    s: int | None = None

    def __call__(self, code: int) -> int:
        return self.images[code]

    def apply_set(self, codes) -> frozenset:
        return frozenset(self.images[c] for c in codes)

    def perm(self) -> Perm:
        return Perm._trusted(self.images)

    def compose(self, other: "GroupAut") -> "GroupAut":
        """Apply self first, then other."""
        return GroupAut(tuple(other.images[c] for c in self.images))

    def order(self) -> int:
        return self.perm().order()

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def to_json(self) -> dict:
        if self.r is not None and self.s is not None:
            return {"r": self.r, "s": self.s}
        if self.r is not None:
            return {"r": self.r}
        return {"images": list(self.images)}


def cyclic_aut(n: int, r: int) -> GroupAut:
    r %= max(n, 1)
    if gcd(r, n) != 1:
        raise ValueError(f"r={r} is not a unit mod {n}")
    return GroupAut(tuple((r * i) % n for i in range(n)), r=r)


def dihedral_aut(n: int, r: int, s: int) -> GroupAut:
    r %= n
    s %= n
    if gcd(r, n) != 1:
        raise ValueError(f"r={r} is not a unit mod {n}")
    rot = [(r * i) % n for i in range(n)]
    ref = [n + (r * i + s) % n for i in range(n)]
    return GroupAut(tuple(rot + ref), r=r, s=s)


def is_automorphism(G: GroupSpec, images: tuple[int, ...]) -> bool:
    """Exhaustive homomorphism-and-bijection check on element codes."""
    if sorted(images) != list(G.elements()):
        return False
    return all(
        images[G.mul(x, y)] == G.mul(images[x], images[y])
        for x in G.elements()
        for y in G.elements()
    )


@lru_cache(maxsize=None)
def _aut_group_cached(family: str, n: int) -> tuple[GroupAut, ...]:
    G = GroupSpec(family, n)
    if family == CYCLIC:
        return tuple(cyclic_aut(n, r) for r in range(n) if gcd(r, n) == 1)
    if n == 2:
        # Klein group: every permutation of the three involutions works,
        # only two of the six fit the (r, s) parametrization
        param = {dihedral_aut(2, 1, s).images: s for s in range(2)}
        auts = []
        for p in permutations((1, 2, 3)):
            images = (0,) + p
            if not is_automorphism(G, images):
                continue
            s = param.get(images)
            auts.append(GroupAut(images, r=1, s=s) if s is not None else GroupAut(images))
        return tuple(auts)
    return tuple(dihedral_aut(n, r, s) for r in range(n) if gcd(r, n) == 1 for s in range(n))


def aut_group(G: GroupSpec) -> list[GroupAut]:
    """The full automorphism group: phi(n) maps for C_n, n*phi(n) for D_{2n} (n >= 3)."""
    return list(_aut_group_cached(G.family, G.n))


def aut_stabilizer(G: GroupSpec, S) -> list[GroupAut]:
    """The automorphisms of G fixing the connection set S setwise."""
    codes = frozenset(S)
    if 0 in codes:
        raise ValueError("connection sets must not contain the identity")
    for c in codes:
        G.check_code(c)
    return [a for a in _aut_group_cached(G.family, G.n) if a.apply_set(codes) == codes]


def translation(G: GroupSpec, g: int) -> Perm:
    """The right translation x -> x*g as a permutation of element codes."""
    G.check_code(g)
    return Perm._trusted(tuple(G.mul(x, g) for x in G.elements()))


def right_regular(G: GroupSpec) -> PermGroup:
    """The right regular representation acting on element codes."""
    if G.family == CYCLIC:
        gens = [translation(G, 1 % G.n)]
    else:
        gens = [translation(G, 1), translation(G, G.n)]
    return PermGroup(G.order, gens)


def holomorph(G: GroupSpec) -> PermGroup:
    """The group generated by all right translations and all automorphisms.

    Acting on element codes this is the normalizer of the right regular
    representation in the full symmetric group, of order |G| * |Aut(G)|.
    """
    gens = list(right_regular(G).generators)
    gens.extend(a.perm() for a in _aut_group_cached(G.family, G.n) if not a.is_identity())
    return PermGroup(G.order, gens)


@dataclass(frozen=True)
class CyclicFactorization:
    """Prime factorization of n with odd primes descending and 2 last.

    component_generators[i] is the element code of a^(n / p_i^k_i), a
    generator of the p_i-component of C_n.
    """

    n: int
    factors: tuple[tuple[int, int], ...]
    component_generators: tuple[int, ...]


def cyclic_factorization(n: int) -> CyclicFactorization:
    if n < 1:
        raise ValueError("n must be positive")
    odd = []
    two = None
    m = n
    k2 = 0
    while m % 2 == 0:
        m //= 2
        k2 += 1
    if k2:
        two = (2, k2)
    p = 3
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            odd.append((p, k))
        p += 2
    if m > 1:
        odd.append((m, 1))
    odd.sort(reverse=True)
    factors = tuple(odd + ([two] if two else []))
    gens = tuple(n // (p**k) for p, k in factors)
    return CyclicFactorization(n, factors, gens)


def _crt_unit(residue: int, modulus: int, n: int) -> int:
    """The unit r mod n with r = residue mod modulus and r = 1 mod n/modulus."""
    other = n // modulus
    if other == 1:
        return residue % n
    t = ((1 - residue) * pow(modulus, -1, other)) % other
    return (residue + modulus * t) % n


def prime_order_aut(n: int, p: int) -> GroupAut:
    """The canonical automorphism of C_n of order p (p prime, p^2 | n).

    It raises the p-component generator to the power p^(k-1) + 1 and fixes
    every other component; as a unit mod n this is recovered by the Chinese
    remainder theorem.
    """
    fac = cyclic_factorization(n)
    match = [(q, k) for q, k in fac.factors if q == p]
    if not match:
        raise ValueError(f"prime {p} does not divide {n}")
    q, k = match[0]
    if k < 2:
        raise ValueError(f"prime {p} has multiplicity {k} < 2 in {n}")
    modulus = q**k
    r = _crt_unit(q ** (k - 1) + 1, modulus, n)
    return cyclic_aut(n, r)


def order_four_aut(n: int) -> GroupAut:
    """The canonical automorphism of C_n of order 4 on the 2-component.

    Requires 2-adic valuation at least 4; raises the 2-component generator
    to the power 2^(k-2) + 1.  Its square is prime_order_aut(n, 2).
    """
    k = 0
    m = n
    while m % 2 == 0:
        m //= 2
        k += 1
    if k < 4:
        raise ValueError(f"2-adic valuation of {n} is {k} < 4")
    modulus = 2**k
    r = _crt_unit(2 ** (k - 2) + 1, modulus, n)
    return cyclic_aut(n, r)


def fixed_points(G: GroupSpec, auts) -> set[int]:
    """The subgroup of element codes fixed by every automorphism in the list."""
    auts = list(auts)
    return {c for c in G.elements() if all(a.images[c] == c for a in auts)}
