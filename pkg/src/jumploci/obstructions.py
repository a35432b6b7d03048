"""Isotropicity of subspaces and the resonance obstruction battery.

The battery takes the irreducible components of ``R_1`` as input (each is
certified by an exact containment check) and tests the constraints that
fundamental groups of quasi-compact Kähler manifolds impose on them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .cupdata import CupData
from .errors import InputError
from .exact import Matrix, determinant, rank
from .resonance import resonance_contains_subspace, resonance_member
from .subspaces import Subspace

__all__ = [
    "IsotropyResult",
    "TestResult",
    "ObstructionReport",
    "isotropicity_classify",
    "serre_battery",
    "BATTERY_TESTS",
]

PASS, FAIL, NA = "pass", "fail", "not-applicable"
BATTERY_TESTS = ("rational-linearity", "isotropicity", "intersections", "filtration", "free-quotient")


@dataclass(frozen=True)
class IsotropyResult:
    kind: str  # "p0", "p1" or "none"
    image_dim: int
    dim: int

    @property
    def p(self) -> int | None:
        return {"p0": 0, "p1": 1}.get(self.kind)


def _restricted_products(c: CupData, L: Subspace) -> dict[tuple[int, int], list]:
    """``mu(v_a ^ v_b)`` for basis vectors ``v_a, v_b`` of ``L``, ``a < b``."""
    out = {}
    for a, b in combinations(range(L.dim), 2):
        va, vb = L.basis[a], L.basis[b]
        vec = [Fraction(0)] * c.m
        for i, j, prod in c.mu:
            w = va[i] * vb[j] - va[j] * vb[i]
            if w:
                for k, x in enumerate(prod):
                    if x:
                        vec[k] = vec[k] + w * x
        out[(a, b)] = vec
    return out


def isotropicity_classify(c: CupData, L: Subspace) -> IsotropyResult:
    """``p0`` if the cup product vanishes on ``L``; ``p1`` if its image is a
    line and the induced skew form on ``L`` is nondegenerate; else ``none``."""
    if L.n != c.n:
        raise InputError(f"subspace lives in dimension {L.n}, cup data in {c.n}")
    if L.dim == 0:
        raise InputError("isotropicity is defined for nonzero subspaces only")
    prods = _restricted_products(c, L)
    vecs = [v for v in prods.values() if any(v)]
    img = rank(Matrix(vecs, c.m)) if vecs else 0
    if img == 0:
        return IsotropyResult("p0", 0, L.dim)
    if img > 1 or L.dim % 2:
        return IsotropyResult("none", img, L.dim)
    gen = vecs[0]
    k0 = next(k for k, x in enumerate(gen) if x)
    d = L.dim
    omega = [[Fraction(0)] * d for _ in range(d)]
    for (a, b), v in prods.items():
        s = v[k0] / gen[k0]
        omega[a][b] = s
        omega[b][a] = -s
    kind = "p1" if determinant(Matrix(omega, d)) != 0 else "none"
    return IsotropyResult(kind, img, L.dim)


@dataclass
class TestResult:
    status: str
    witnesses: list[dict] = field(default_factory=list)
    note: str = ""


@dataclass
class ObstructionReport:
    tests: dict[str, TestResult]
    classifications: list[IsotropyResult | None]
    free_quotient_expected: bool

    @property
    def passed(self) -> bool:
        return all(t.status != FAIL for t in self.tests.values())

    def failed_tests(self) -> list[str]:
        return [name for name, t in self.tests.items() if t.status == FAIL]


def serre_battery(
    c: CupData,
    components: Sequence[Subspace],
    kmax: int | None = None,
    samples: int = 25,
    seed: int = 0,
) -> ObstructionReport:
    """Run the resonance obstruction tests on the claimed components of ``R_1``.

    The depth rule is checked pointwise: for ``1 <= k <= kmax`` every sampled
    point ``z`` of a component must satisfy ``z in R_k`` iff ``z`` lies in some
    component ``R^a`` with ``dim R^a > k + p(a)``.  Components that are not
    isotropic count with ``p = 0`` there; they already fail the isotropicity
    test.
    """
    comps = list(components)
    for idx, s in enumerate(comps):
        if s.n != c.n:
            raise InputError(f"component {idx} has ambient dimension {s.n}, expected {c.n}")
        if not resonance_contains_subspace(c, s, 1):
            raise InputError(f"component {idx} is not contained in R_1")
    if kmax is None:
        kmax = c.n
    tests: dict[str, TestResult] = {}

    bad = [{"component": i} for i, s in enumerate(comps) if not s.is_rational()]
    tests["rational-linearity"] = TestResult(FAIL if bad else PASS, bad)

    classes: list[IsotropyResult | None] = []
    wit = []
    for idx, s in enumerate(comps):
        if s.dim == 0:
            classes.append(None)
            continue
        cls = isotropicity_classify(c, s)
        classes.append(cls)
        if cls.p is None or s.dim < 2 * cls.p + 2:
            wit.append({"component": idx, "class": cls.kind, "dim": s.dim, "image_dim": cls.image_dim})
    tests["isotropicity"] = TestResult(FAIL if wit else PASS, wit)

    wit = []
    for a, b in combinations(range(len(comps)), 2):
        meet = comps[a].intersect(comps[b])
        if meet.dim:
            wit.append({"pair": [a, b], "dim": meet.dim, "basis": [list(v) for v in meet.basis]})
    tests["intersections"] = TestResult(FAIL if wit else PASS, wit)

    rng = random.Random(seed)
    points = [
        [s.random_point(rng) for _ in range(samples)] if s.dim else [] for s in comps
    ]
    ps = [cl.p if cl is not None and cl.p is not None else 0 for cl in classes]
    wit = []
    for k in range(1, kmax + 1):
        active = [s for s, p in zip(comps, ps) if s.dim > k + p]
        for idx, pts in enumerate(points):
            for z in pts:
                expected = any(s.contains_point(z) for s in active)
                actual = resonance_member(c, z, k)
                if expected != actual:
                    wit.append(
                        {"k": k, "component": idx, "point": z, "expected": expected, "actual": actual}
                    )
                    break
    tests["filtration"] = TestResult(FAIL if wit else PASS, wit)

    expected_free = any(s.dim > 0 for s in comps)
    tests["free-quotient"] = TestResult(
        PASS,
        note="free quotient of rank >= 2 expected" if expected_free else "no free quotient of rank >= 2 expected",
    )
    return ObstructionReport(tests, classes, expected_free)
