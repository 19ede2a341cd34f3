"""Normality, regular-subgroup census, NNN and CI verdicts for Cayley digraphs.

A Cayley digraph is normal when the right regular representation is a
normal subgroup of the full automorphism group; it is NNN when it is
normal and the automorphism group also contains a non-normal regular
subgroup isomorphic to the base group; it is CI exactly when all regular
subgroups isomorphic to the base group are conjugate.  This module also
carries the sufficient-condition certifier for non-normality, the
canonical NNN constructions on dihedral groups, and exhaustive sweeps
over connection sets.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool

from .autsearch import JSON_INT_LIMIT, AutResult, automorphism_group
from .cayley import build, is_connected, is_graph
from .groups import (
    CYCLIC,
    GroupAut,
    GroupSpec,
    aut_group,
    aut_stabilizer,
    cyclic_factorization,
    dihedral_aut,
    fixed_points,
    translation,
)
from .perm import ELEMENT_CAP, ElementCapExceeded, Perm, PermGroup, closure

CI_SKIPPED = "skipped"


class EngineInconsistency(RuntimeError):
    """Two independent normality criteria disagreed; signals an engine bug."""


@dataclass(frozen=True)
class Classification:
    """The full verdict record for one (group, connection set) pair.

    ci is True/False, or "skipped" when the digraph is non-normal and its
    automorphism group exceeds the element cap; in the skipped case the two
    subgroup counts cover only the right regular representation itself.
    """

    group: GroupSpec
    connection: tuple[int, ...]
    connected: bool
    graph: bool
    aut_order: int
    normal: bool
    regular_subgroups: int
    nonnormal_regular: int
    nnn: bool
    ci: bool | str

    def to_record(self) -> dict:
        order = self.aut_order if self.aut_order < JSON_INT_LIMIT else str(self.aut_order)
        return {
            "group": self.group.family,
            "n": self.group.n,
            "set": list(self.connection),
            "connected": self.connected,
            "graph": self.graph,
            "aut_order": order,
            "normal": self.normal,
            "regular_subgroups": self.regular_subgroups,
            "nonnormal_regular": self.nonnormal_regular,
            "nnn": self.nnn,
            "ci": self.ci,
        }


@lru_cache(maxsize=64)
def _group_data(family: str, n: int):
    """Per-group tables shared across a sweep: translations and R(G)."""
    G = GroupSpec(family, n)
    translations = tuple(translation(G, g) for g in G.elements())
    if family == CYCLIC:
        gens = (translations[1 % n],)
    else:
        gens = (translations[1], translations[n])
    rgroup = PermGroup(G.order, gens, _elements=sorted(translations))
    return translations, rgroup


def right_regular_group(G: GroupSpec) -> PermGroup:
    return _group_data(G.family, G.n)[1]


def _conj(h: tuple, g: tuple) -> tuple:
    """g^-1 * h * g on raw image tuples."""
    out = [0] * len(h)
    for i, v in enumerate(h):
        out[g[i]] = g[v]
    return tuple(out)


def _normality_verdict(G: GroupSpec, aut: AutResult, stab_count: int) -> bool:
    rgroup = right_regular_group(G)
    rset = rgroup.element_set()
    by_conjugation = all(
        _conj(tuple(s), tuple(a)) in rset for a in aut.generators for s in rgroup.generators
    )
    by_order = aut.order == G.order * stab_count
    if by_conjugation != by_order:
        raise EngineInconsistency(
            f"normality criteria disagree on {G.name}: conjugation says "
            f"{by_conjugation}, |Aut|={aut.order} vs |G|*|Aut(G,S)|={G.order * stab_count}"
        )
    return by_conjugation


def is_normal_cayley(G: GroupSpec, S, aut: AutResult) -> bool:
    """True iff R(G) is normal in the given automorphism group of Cay(G, S).

    Checked by conjugating the R(G) generators with every automorphism
    generator, and cross-checked against the order identity
    |Aut| = |G| * |Aut(G, S)|; disagreement raises EngineInconsistency.
    """
    return _normality_verdict(G, aut, len(aut_stabilizer(G, S)))


def _cycle_through(p: tuple, start: int) -> list[int]:
    cyc = [start]
    v = p[start]
    while v != start:
        cyc.append(v)
        v = p[v]
    return cyc


def _regular_subgroups_from_elements(elements, G: GroupSpec) -> list[PermGroup]:
    """All regular subgroups isomorphic to G inside the given element list.

    In a regular group every element is semiregular with cycle length equal
    to its order, so a regular copy of C_m is generated by a single m-cycle,
    and a regular copy of D_{2n} is generated by an order-n element with two
    length-n cycles together with an involution swapping those two cycles.
    Deduplication is by element-set fingerprint.
    """
    degree = G.order
    element_set = {tuple(p) for p in elements}
    found: dict[frozenset, PermGroup] = {}
    if G.family == CYCLIC:
        m = degree
        for p in elements:
            t = tuple(p)
            if len(_cycle_through(t, 0)) != m:
                continue
            powers = [tuple(range(m))]
            cur = t
            for _ in range(m - 1):
                powers.append(cur)
                cur = tuple(t[v] for v in cur)
            fp = frozenset(powers)
            if fp not in found:
                found[fp] = PermGroup(
                    m, [Perm._trusted(t)], _elements=sorted(Perm._trusted(q) for q in fp)
                )
    else:
        n = G.n
        for p in elements:
            x = tuple(p)
            first = _cycle_through(x, 0)
            if len(first) != n:
                continue
            in_first = set(first)
            w0 = min(v for v in range(degree) if v not in in_first)
            second = _cycle_through(x, w0)
            if len(second) != n:
                continue
            powers = [tuple(range(degree))]
            cur = x
            for _ in range(n - 1):
                powers.append(cur)
                cur = tuple(x[v] for v in cur)
            for t in range(n):
                y = [0] * degree
                for k in range(n):
                    y[first[k]] = second[(t - k) % n]
                    y[second[(t + k) % n]] = first[-k % n]
                y = tuple(y)
                if y not in element_set:
                    continue
                members = powers + [tuple(y[v] for v in q) for q in powers]
                fp = frozenset(members)
                if fp not in found:
                    found[fp] = PermGroup(
                        degree,
                        [Perm._trusted(x), Perm._trusted(y)],
                        _elements=sorted(Perm._trusted(q) for q in fp),
                    )
    groups = sorted(found.items(), key=lambda kv: sorted(kv[0]))
    return [g for _, g in groups]


def enumerate_regular_subgroups(
    aut: AutResult, G: GroupSpec, cap: int = ELEMENT_CAP
) -> list[PermGroup]:
    """All regular subgroups of the automorphism group isomorphic to G."""
    if aut.generators:
        elements = closure(aut.generators, cap)
    else:
        elements = [Perm.identity(G.order)]
    return _regular_subgroups_from_elements(elements, G)


def _subgroup_is_normal_in(ambient_gens, sub: PermGroup) -> bool:
    sub_set = sub.element_set()
    return all(
        _conj(tuple(s), tuple(a)) in sub_set for a in ambient_gens for s in sub.generators
    )


def _conjugacy_orbit(fingerprint: frozenset, gens) -> set[frozenset]:
    """Orbit of a subgroup's element-set fingerprint under conjugation."""
    seen = {fingerprint}
    frontier = [fingerprint]
    while frontier:
        fp = frontier.pop()
        for g in gens:
            image = frozenset(_conj(h, tuple(g)) for h in fp)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return seen


def _semidirect_elements(G: GroupSpec, stab: list[GroupAut]) -> list[tuple]:
    """Element tuples of R(G) extended by the set-stabilizing automorphisms."""
    translations, _ = _group_data(G.family, G.n)
    out = []
    for t in translations:
        tt = tuple(t)
        for a in stab:
            images = a.images
            out.append(tuple(images[v] for v in tt))
    return out


def classify(G: GroupSpec, S, cap: int = ELEMENT_CAP) -> Classification:
    """Full classification of Cay(G, S): connectivity, normality, NNN, CI.

    The regular-subgroup census runs on the exhaustive element list of the
    automorphism group; for normal digraphs that list is the semidirect
    product of R(G) with the set stabilizer, so it always fits the cap.
    Non-normal digraphs whose automorphism group exceeds the cap degrade to
    ci="skipped".
    """
    codes = tuple(sorted({int(c) for c in S}))
    dg = build(G, codes)
    connected = is_connected(dg)
    graph_flag = is_graph(G, codes)
    aut = automorphism_group(dg)
    stab = aut_stabilizer(G, codes)
    normal = _normality_verdict(G, aut, len(stab))

    _, rgroup = _group_data(G.family, G.n)
    r_fingerprint = frozenset(tuple(p) for p in rgroup.elements())

    elements = None
    if normal:
        elements = _semidirect_elements(G, stab)
        if len(set(elements)) != aut.order:
            raise EngineInconsistency(
                f"semidirect element count != |Aut| on {G.name}, set {codes}"
            )
    else:
        try:
            elements = [tuple(p) for p in closure(aut.generators, cap)]
        except ElementCapExceeded:
            elements = None

    if elements is None:
        # census unavailable: only R(G) itself is known, and it is non-normal here
        return Classification(
            G, codes, connected, graph_flag, aut.order, normal, 1, 1, False, CI_SKIPPED
        )

    regs = _regular_subgroups_from_elements(elements, G)
    fingerprints = [frozenset(tuple(p) for p in H.elements()) for H in regs]
    if r_fingerprint not in fingerprints:
        raise EngineInconsistency(f"census missed R(G) on {G.name}, set {codes}")
    nonnormal = sum(
        1 for H in regs if not _subgroup_is_normal_in(aut.generators, H)
    )
    nnn = normal and nonnormal >= 1
    if len(regs) == 1:
        ci = True
    else:
        orbit = _conjugacy_orbit(r_fingerprint, aut.generators)
        ci = all(fp in orbit for fp in fingerprints)
    return Classification(
        G, codes, connected, graph_flag, aut.order, normal, len(regs), nonnormal, nnn, ci
    )


# ---------------------------------------------------------------------------
# sufficient-condition certifier for non-normality


class CertificateHypothesisError(ValueError):
    """The certifier's hypotheses fail; distinct from an inconclusive outcome."""


@dataclass(frozen=True)
class NonNormalityCertificate:
    """A re-checkable witness that Cay(G, S) is non-normal.

    condition 1: the fixed-point subgroup of <L> has index > 2 in G.
    condition 2: index exactly 2, with a pair (g, k), g outside the fixed
    subgroup and k in K, whose conjugate k^g differs from k^-1.
    condition 3: index exactly 2, with a non-identity set-stabilizing
    automorphism whose fixed subgroup differs from that of <L> and which
    fixes every coset of K setwise.
    """

    condition: int
    fixed_index: int
    k_subgroup: tuple[int, ...]
    l_auts: tuple[GroupAut, ...]
    witness_pair: tuple[int, int] | None = None
    witness_aut: GroupAut | None = None

    def verify(self, G: GroupSpec, S) -> bool:
        """Re-check every hypothesis and condition clause from the stored witnesses."""
        try:
            fixed, cosets = _certifier_hypothesis(G, S, list(self.l_auts), self.k_subgroup)
        except CertificateHypothesisError:
            return False
        index = G.order // len(fixed)
        if index != self.fixed_index:
            return False
        if self.condition == 1:
            return index > 2
        if index != 2:
            return False
        if self.condition == 2:
            if self.witness_pair is None:
                return False
            g, k = self.witness_pair
            return g not in fixed and k in self.k_subgroup and G.conj(k, g) != G.inv(k)
        if self.condition == 3:
            gamma = self.witness_aut
            if gamma is None or gamma.is_identity():
                return False
            if gamma.apply_set(S) != frozenset(S):
                return False
            if fixed_points(G, [gamma]) == fixed:
                return False
            return all(gamma.apply_set(c) == c for c in cosets)
        return False


def _certifier_hypothesis(G: GroupSpec, S, L: list[GroupAut], K):
    """Validate the certifier's hypotheses; return (fixed subgroup, cosets)."""
    s_codes = frozenset(S)
    if not L or all(a.is_identity() for a in L):
        raise CertificateHypothesisError("L must be a nontrivial set of automorphisms")
    for a in L:
        if a.apply_set(s_codes) != s_codes:
            raise CertificateHypothesisError("L must fix the connection set setwise")
    k_codes = frozenset(K)
    if 0 not in k_codes:
        raise CertificateHypothesisError("K must contain the identity")
    for x in k_codes:
        if G.inv(x) not in k_codes:
            raise CertificateHypothesisError("K is not closed under inversion")
        for y in k_codes:
            if G.mul(x, y) not in k_codes:
                raise CertificateHypothesisError("K is not closed under multiplication")
    gens = [1 % G.order] if G.family == CYCLIC else [1, G.n]
    for g in gens:
        if {G.conj(k, g) for k in k_codes} != k_codes:
            raise CertificateHypothesisError("K is not normal in G")

    cosets = []
    seen = set()
    for g in G.elements():
        if g in seen:
            continue
        coset = frozenset(G.mul(k, g) for k in k_codes)
        seen |= coset
        cosets.append(coset)
    tables = [a.images for a in L]
    for coset in cosets:
        if all(t[c] == c for t in tables for c in coset):
            continue
        rep = min(coset)
        reach = {rep}
        frontier = [rep]
        while frontier:
            x = frontier.pop()
            for t in tables:
                y = t[x]
                if y not in reach:
                    reach.add(y)
                    frontier.append(y)
        if reach != coset:
            raise CertificateHypothesisError(
                "some coset of K is neither fixed pointwise nor a single orbit of <L>"
            )
    fixed = fixed_points(G, L)
    return fixed, cosets


def certify_nonnormal(G: GroupSpec, S, L, K) -> NonNormalityCertificate | None:
    """Certify Cay(G, S) non-normal from set-stabilizing automorphisms L and K normal in G.

    Hypothesis: every right coset of K is either fixed pointwise by L or is
    one orbit of <L>.  Conditions are tried in the order 1, 2, 3 and the
    first certificate found is returned; None means inconclusive.  Broken
    hypotheses raise CertificateHypothesisError instead.
    """
    l_auts = list(L)
    k_codes = tuple(sorted(set(K)))
    fixed, cosets = _certifier_hypothesis(G, S, l_auts, k_codes)
    index = G.order // len(fixed)
    base = dict(
        fixed_index=index, k_subgroup=k_codes, l_auts=tuple(l_auts)
    )
    if index > 2:
        return NonNormalityCertificate(condition=1, **base)
    if index == 2:
        # condition 2 is part of the general criterion; on cyclic and
        # dihedral groups the index-2 hypothesis forces |K| <= 2 with K
        # made of involutions, so this loop cannot yield a witness there
        for g in sorted(set(G.elements()) - fixed):
            for k in k_codes:
                if G.conj(k, g) != G.inv(k):
                    return NonNormalityCertificate(condition=2, witness_pair=(g, k), **base)
        s_codes = frozenset(S)
        for gamma in aut_stabilizer(G, s_codes):
            if gamma.is_identity():
                continue
            if fixed_points(G, [gamma]) == fixed:
                continue
            if all(gamma.apply_set(c) == c for c in cosets):
                return NonNormalityCertificate(condition=3, witness_aut=gamma, **base)
    return None


# ---------------------------------------------------------------------------
# canonical NNN construction on dihedral groups


def _check_nnn_parameter(n: int) -> None:
    if n % 2 != 0 or n < 6 or n == 8:
        raise ValueError(
            f"the NNN construction needs an even n >= 6 with n != 8, got {n}"
        )


def nnn_connection_set(n: int) -> tuple[int, ...]:
    """The canonical NNN connection set for the dihedral group of order 2n.

    For n/2 odd: {a, a^-1, b, a^(n/2) b}; for n/2 even the four reflections
    b, a^(n/4) b, a^(n/2) b, a^(3n/4) b join the inverse pair.  Valid for
    even n >= 6 except n = 8, where no NNN digraph exists.
    """
    _check_nnn_parameter(n)
    half = n // 2
    if half % 2 == 1:
        return tuple(sorted((1, n - 1, n, n + half)))
    quarter = n // 4
    return tuple(sorted((1, n - 1, n, n + quarter, n + half, n + 3 * quarter)))


def nnn_witness_subgroup(n: int) -> PermGroup:
    """The non-normal regular dihedral subgroup witnessing the NNN property.

    Generated by R(ab) composed with the inversion automorphism (order n)
    together with R(b); a regular subgroup of the automorphism group of the
    canonical NNN graph, isomorphic to D_{2n} and not normal there.
    """
    _check_nnn_parameter(n)
    G = GroupSpec.dihedral(n)
    inversion = dihedral_aut(n, n - 1, 0)
    x = translation(G, G.mul(1, n)) * inversion.perm()
    y = translation(G, n)
    return PermGroup(G.order, [x, y])


# ---------------------------------------------------------------------------
# structural invariant for regular cyclic subgroups of normal cyclic digraphs


def cyclic_regular_subgroup_invariant(
    G: GroupSpec, S, H: PermGroup, cap: int = ELEMENT_CAP
) -> bool:
    """Check the structural constraint on a regular cyclic subgroup H.

    For Cay(C_n, S) normal and H a regular subgroup of its automorphism
    group isomorphic to C_n: the Sylow subgroup of H at every odd prime must
    equal the corresponding block of right translations, and H must lie in
    the extension of the translations by the 2-part set-stabilizing
    automorphisms.  Digraph normality is the caller's responsibility.
    """
    if G.family != CYCLIC:
        raise ValueError("invariant applies to cyclic groups only")
    n = G.n
    if H.degree != n or not H.is_regular(cap):
        raise ValueError("H must be a regular group on the group's element codes")
    h_elements = [tuple(p) for p in H.elements(cap)]
    if not any(len(_cycle_through(p, 0)) == n for p in h_elements):
        raise ValueError("H is not cyclic of order n")
    dg = build(G, S)
    rows_out = dg.rows_out
    for p in h_elements:
        image_rows = [0] * n
        for u in range(n):
            m = rows_out[u]
            acc = 0
            while m:
                low = m & -m
                acc |= 1 << p[low.bit_length() - 1]
                m ^= low
            image_rows[p[u]] = acc
        if image_rows != rows_out:
            raise ValueError("H is not a subgroup of the digraph's automorphism group")

    translations, _ = _group_data(CYCLIC, n)
    fac = cyclic_factorization(n)
    two_adic = 0
    for p, k in fac.factors:
        if p == 2:
            two_adic = k
            continue
        m = p**k
        # H is cyclic regular, so an element's order is its cycle length
        h_sylow = frozenset(q for q in h_elements if m % len(_cycle_through(q, 0)) == 0)
        r_sylow = frozenset(tuple(translations[c]) for c in range(0, n, n // m))
        if h_sylow != r_sylow:
            return False
    odd_part = n >> two_adic if two_adic else n
    two_part_stab = [
        a for a in aut_stabilizer(G, S) if a.r is not None and a.r % odd_part == 1 % odd_part
    ]
    allowed = set()
    for t in translations:
        tt = tuple(t)
        for a in two_part_stab:
            images = a.images
            allowed.add(tuple(images[v] for v in tt))
    return all(p in allowed for p in h_elements)


# ---------------------------------------------------------------------------
# exhaustive sweeps over connection sets


def _mask_to_codes(mask: int) -> tuple[int, ...]:
    codes = []
    while mask:
        low = mask & -mask
        codes.append(low.bit_length())
        mask ^= low
    return tuple(codes)


def _graph_masks_filter(G: GroupSpec):
    """Bitmask of the inverse code for each nonidentity code, for graph-mode filtering."""
    return [G.inv(c) - 1 for c in range(1, G.order)]


def connection_masks(G: GroupSpec, mode: str = "digraph") -> list[int]:
    """All connection-set bitmasks in canonical ascending order.

    Bit c-1 represents element code c.  In graph mode only inverse-closed
    sets are kept.
    """
    total = 1 << (G.order - 1)
    if mode == "digraph":
        return list(range(total))
    if mode != "graph":
        raise ValueError(f"unknown sweep mode {mode!r}")
    inv_bit = _graph_masks_filter(G)
    out = []
    for mask in range(total):
        m = mask
        ok = True
        while m:
            low = m & -m
            if not mask >> inv_bit[low.bit_length() - 1] & 1:
                ok = False
                break
            m ^= low
        if ok:
            out.append(mask)
    return out


def connection_orbit_reps(G: GroupSpec, mode: str = "digraph") -> list[int]:
    """One representative mask per orbit of Aut(G) on connection sets.

    Since relabeling by a group automorphism is a digraph isomorphism, every
    classification verdict is constant on these orbits; the representative
    is the minimal mask of its orbit.
    """
    tables = [[a.images[c] - 1 for c in range(1, G.order)] for a in aut_group(G)]
    masks = connection_masks(G, mode)
    seen = bytearray(1 << (G.order - 1))
    reps = []
    for mask in masks:
        if seen[mask]:
            continue
        reps.append(mask)
        for table in tables:
            m = mask
            image = 0
            while m:
                low = m & -m
                image |= 1 << table[low.bit_length() - 1]
                m ^= low
            seen[image] = 1
    return reps


_SWEEP_STATE: tuple[GroupSpec, int] | None = None


def _sweep_init(family: str, n: int, cap: int) -> None:
    global _SWEEP_STATE
    _SWEEP_STATE = (GroupSpec(family, n), cap)


def _sweep_task(mask: int) -> Classification:
    G, cap = _SWEEP_STATE
    return classify(G, _mask_to_codes(mask), cap=cap)


def _resolve_jobs(jobs) -> int:
    if jobs is None:
        env = os.environ.get("CAYNORM_JOBS", "").strip()
        jobs = int(env) if env else 1
    return max(1, int(jobs))


def sweep(
    G: GroupSpec,
    mode: str = "digraph",
    reduce: bool = False,
    jobs: int | None = None,
    cap: int = ELEMENT_CAP,
    progress: bool = False,
) -> list[Classification]:
    """Classify every connection set of G (one orbit representative each when reduced).

    The output order is the canonical ascending mask order and is identical
    for every worker count; workers share nothing mutable.
    """
    if G.order > 16:
        raise ValueError("exhaustive sweeps are capped at group order 16")
    masks = connection_orbit_reps(G, mode) if reduce else connection_masks(G, mode)
    jobs = _resolve_jobs(jobs)
    results: list[Classification] = []
    if jobs == 1:
        _sweep_init(G.family, G.n, cap)
        for i, mask in enumerate(masks):
            results.append(_sweep_task(mask))
            if progress and (i + 1) % 256 == 0:
                print(f"{G.name} sweep: {i + 1}/{len(masks)}", file=sys.stderr)
    else:
        chunk = max(1, len(masks) // (jobs * 16))
        with Pool(jobs, initializer=_sweep_init, initargs=(G.family, G.n, cap)) as pool:
            for i, rec in enumerate(pool.imap(_sweep_task, masks, chunksize=chunk)):
                results.append(rec)
                if progress and (i + 1) % 256 == 0:
                    print(f"{G.name} sweep: {i + 1}/{len(masks)}", file=sys.stderr)
    return results


def sweep_summary(records: list[Classification]) -> dict:
    return {
        "summary": True,
        "records": len(records),
        "connected": sum(1 for r in records if r.connected),
        "graph": sum(1 for r in records if r.graph),
        "normal": sum(1 for r in records if r.normal),
        "nnn": sum(1 for r in records if r.nnn),
        "ci_true": sum(1 for r in records if r.ci is True),
        "ci_false": sum(1 for r in records if r.ci is False),
        "ci_skipped": sum(1 for r in records if r.ci == CI_SKIPPED),
    }


def write_jsonl(records: list[Classification], fh) -> dict:
    """One classification per line plus a trailing summary record."""
    for r in records:
        fh.write(json.dumps(r.to_record(), separators=(",", ":")) + "\n")
    summary = sweep_summary(records)
    fh.write(json.dumps(summary, separators=(",", ":")) + "\n")
    return summary
