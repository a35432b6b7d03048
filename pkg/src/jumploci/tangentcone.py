"""Exponential tangent cones of Laurent zero sets and the tangent-cone comparator.

``z`` lies in the exponential tangent cone of ``V(f)`` iff ``f(exp(sz))``
vanishes for all ``s``.  Writing ``f = sum c_u t^u`` this is
``sum c_u exp(s<u,z>) = 0``, which happens exactly when the support splits
into blocks with zero coefficient sum on which ``<u,z>`` is constant.  The
cone is therefore the union over such partitions of the linear spaces
``{z : <u - v, z> = 0 for u, v in a common block}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cupdata import CupData
from .errors import InputError, SupportBoundError
from .exact import MultiPoly
from .exact.scalar import Scalar
from .resonance import resonance_contains_subspace
from .subspaces import Subspace, SubspaceArrangement
from .words import Presentation

__all__ = [
    "DEFAULT_SUPPORT_BOUND",
    "zero_sum_partitions",
    "minimal_zero_sum_partitions",
    "tau1_single",
    "tau1_ideal",
    "TangentConeReport",
    "tangent_cone_compare",
]

DEFAULT_SUPPORT_BOUND = 12


def zero_sum_partitions(coeffs: Sequence[Scalar]):
    """Yield set partitions of ``range(len(coeffs))`` whose blocks all have
    coefficient sum zero, as restricted growth strings.

    A block with nonzero running sum needs at least one more element, so a
    branch dies once such blocks outnumber the remaining elements.
    """
    n = len(coeffs)
    if n == 0:
        yield ()
        return
    labels = [0] * n
    sums: list[Scalar] = []

    def rec(pos: int, open_nonzero: int):
        if open_nonzero > n - pos:
            return
        if pos == n:
            yield tuple(labels)
            return
        c = coeffs[pos]
        for b in range(len(sums)):
            before = sums[b]
            after = before + c
            sums[b] = after
            labels[pos] = b
            yield from rec(pos + 1, open_nonzero + (after != 0) - (before != 0))
            sums[b] = before
        sums.append(c)
        labels[pos] = len(sums) - 1
        yield from rec(pos + 1, open_nonzero + (c != 0))
        sums.pop()

    yield from rec(0, 0)


def minimal_zero_sum_partitions(coeffs: Sequence[Scalar]):
    """Yield the zero-sum partitions whose blocks contain no smaller zero-sum block.

    Splitting a block into two zero-sum pieces drops equations, so every
    partition's space sits inside the space of one of these.  They are
    enumerated as exact covers by minimal zero-sum subsets (bitmasks).
    """
    n = len(coeffs)
    full = (1 << n) - 1
    sums: list[Scalar] = [Fraction(0)] * (full + 1)
    has_zero = [False] * (full + 1)  # some nonempty submask sums to zero
    minimal_by_elt: list[list[int]] = [[] for _ in range(n)]
    for mask in range(1, full + 1):
        low = (mask & -mask).bit_length() - 1
        sums[mask] = sums[mask & (mask - 1)] + coeffs[low]
        inner = False
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if has_zero[mask ^ bit]:
                inner = True
                break
        has_zero[mask] = inner or sums[mask] == 0
        if sums[mask] == 0 and not inner:
            for i in range(n):
                if mask >> i & 1:
                    minimal_by_elt[i].append(mask)

    labels = [0] * n

    def rec(uncovered: int, block: int):
        if not uncovered:
            yield tuple(labels)
            return
        low = (uncovered & -uncovered).bit_length() - 1
        for mask in minimal_by_elt[low]:
            if mask & uncovered == mask:
                for i in range(n):
                    if mask >> i & 1:
                        labels[i] = block
                yield from rec(uncovered ^ mask, block + 1)

    yield from rec(full, 0)


def _partition_space(n: int, exps: Sequence[Sequence[int]], labels: Sequence[int]) -> Subspace:
    first: dict[int, Sequence[int]] = {}
    eqs = []
    for e, b in zip(exps, labels):
        if b in first:
            diff = [x - y for x, y in zip(e, first[b])]
            if any(diff):
                eqs.append(diff)
        else:
            first[b] = e
    return Subspace.from_equations(n, eqs)


def tau1_single(f: MultiPoly, support_bound: int = DEFAULT_SUPPORT_BOUND) -> SubspaceArrangement:
    """Exponential tangent cone of the hypersurface ``V(f)`` in the torus."""
    n = f.nvars
    if f.is_zero():
        return SubspaceArrangement(n, [Subspace.full(n)])
    items = f.items()
    if len(items) > support_bound:
        raise SupportBoundError(
            f"polynomial has {len(items)} terms; the partition bound is {support_bound}"
        )
    exps = [e for e, _ in items]
    coeffs = [c for _, c in items]
    if sum(coeffs, Fraction(0)) != 0:
        return SubspaceArrangement(n)  # 1 is not a zero, so nothing passes through it
    spaces = {_partition_space(n, exps, labels) for labels in minimal_zero_sum_partitions(coeffs)}
    return SubspaceArrangement(n, spaces)


def tau1_ideal(fs: Sequence[MultiPoly], n: int | None = None, support_bound: int = DEFAULT_SUPPORT_BOUND) -> SubspaceArrangement:
    """Exponential tangent cone of the common zero set of ``fs``.

    The cone of an intersection is the intersection of the cones; an empty
    list imposes no condition and yields the whole space.
    """
    if n is None:
        if not fs:
            raise InputError("ambient dimension needed for an empty polynomial list")
        n = fs[0].nvars
    current = SubspaceArrangement(n, [Subspace.full(n)])
    for f in fs:
        if f.nvars != n:
            raise InputError("polynomials live in different rings")
        if f.is_zero():
            continue
        current = current.intersect(tau1_single(f, support_bound))
        if current.is_empty():
            break
    return current


@dataclass
class TangentConeReport:
    verdict: str
    k: int
    tau1: SubspaceArrangement
    resonance_components: list[Subspace]
    components_source: str
    tau1_in_resonance: bool
    resonance_in_tau1: bool
    samples_checked: int
    witnesses: list[dict] = field(default_factory=list)


def tangent_cone_compare(
    c: CupData,
    k: int,
    presentation: Presentation | None = None,
    char_minors: Sequence[MultiPoly] | None = None,
    components: Sequence[Subspace] | None = None,
    samples: int = 25,
    seed: int = 0,
    support_bound: int = DEFAULT_SUPPORT_BOUND,
) -> TangentConeReport:
    """Compare ``tau_1(V_k)`` with ``R_k``.

    ``V_k`` is given by the Alexander minors of ``presentation`` or directly
    by ``char_minors``.  ``components`` are claimed components of ``R_k``;
    each is certified by an exact containment check.  Without them the
    candidates are the whole space if it is resonant, else the certified
    members of the tangent cone itself.
    """
    from .charvar import charvar_minors

    n = c.n
    if k < 1:
        raise InputError("depth k must be at least 1")
    if char_minors is None:
        if presentation is None:
            raise InputError("need a presentation or explicit characteristic minors")
        if presentation.n != n:
            raise InputError("presentation and cup data disagree on the first Betti number")
        char_minors = charvar_minors(presentation, k) if k <= n - 1 else None
    if char_minors is None:
        # away from 1 the twisted Betti number is at most n-1, so V_k is {1} or empty
        A = SubspaceArrangement(n, [Subspace.zero(n)] if k <= n else [])
    else:
        A = tau1_ideal(list(char_minors), n, support_bound)

    witnesses: list[dict] = []
    a_in_r = True
    for idx, s in enumerate(A):
        if not resonance_contains_subspace(c, s, k):
            a_in_r = False
            witnesses.append({"kind": "tau1-component-not-resonant", "index": idx})

    if components is not None:
        source = "supplied"
        comps = list(components)
        for idx, s in enumerate(comps):
            if s.n != n:
                raise InputError(f"component {idx} has ambient dimension {s.n}, expected {n}")
            if not resonance_contains_subspace(c, s, k):
                raise InputError(f"component {idx} is not contained in R_{k}")
    else:
        source = "auto"
        full = Subspace.full(n)
        if resonance_contains_subspace(c, full, k):
            comps = [full]
        else:
            comps = [s for s in A if resonance_contains_subspace(c, s, k)]

    rng = random.Random(seed)
    r_in_a = True
    checked = 0
    for idx, s in enumerate(comps):
        inside = A.contains_subspace(s)
        found = None
        for _ in range(samples):
            pt = s.random_point(rng)
            checked += 1
            if found is None and not A.contains_point(pt):
                found = pt
        if not inside:
            r_in_a = False
            w = {"kind": "resonant-component-outside-tau1", "component": idx}
            if found is not None:
                w["point"] = found
            witnesses.append(w)

    if a_in_r and r_in_a:
        verdict = "equal"
    elif a_in_r:
        verdict = "strictly-contained"
    elif r_in_a:
        verdict = "strictly-contains"
    else:
        verdict = "incomparable"
    return TangentConeReport(verdict, k, A, comps, source, a_in_r, r_in_a, checked, witnesses)
