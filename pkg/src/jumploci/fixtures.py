"""Built-in corpus of worked examples, as JSON documents.

Each fixture is a dict whose keys are the input documents accepted by the
command line tool (``presentation``, ``cup``, ``components``, ``graph``,
``char_minors``), so any fixture can be fed to any command that understands
its keys.
"""

from __future__ import annotations

import copy
from itertools import combinations

from .artin import Graph, braid_graph
from .cupdata import cup_config_torus, cup_free, cup_surface
from .serialize import cup_to_json, graph_to_json

__all__ = ["FIXTURES", "fixture", "fixture_names"]


def _commutators(gens: list[str]) -> list[str]:
    return [f"({a},{b})" for a, b in combinations(gens, 2)]


def _coord(n: int, idx: list[int]) -> list[list[str]]:
    return [["1" if j == i else "0" for j in range(n)] for i in idx]


def _circle_bundle_minors(g: int) -> dict[str, list[str]]:
    """Characteristic minors encoding ``V_k``: the whole torus for
    ``k <= 2g-2`` and the trivial character for ``2g-1 <= k <= 2g``."""
    n = 2 * g
    out = {}
    for k in range(1, n + 1):
        out[str(k)] = [] if k <= 2 * g - 2 else [f"t{i + 1} - 1" for i in range(n)]
    return out


def _build() -> dict[str, dict]:
    fx: dict[str, dict] = {}
    x4 = ["x1", "x2", "x3", "x4"]
    fx["irrational-resonance"] = {
        "description": "commutator-relator group whose R_1 is the quadric x1^2 = 2 x2^2",
        "presentation": {
            "generators": x4,
            "relators": ["(x1,x2)", "(x1,x4)(x2^-2,x3)", "(x1^-1,x3)(x2,x4)"],
        },
        "components": {"n": 4, "subspaces": [
            [["√2", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
            [["-√2", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        ]},
    }
    fx["A2134"] = {
        "description": "complement of four transverse real planes in R^4; 1-formal, not quasi-projective",
        "presentation": {"generators": x4, "relators": ["(x1,x3^2 x4)", "(x2,x4)", "(x3,x4)"]},
        "components": {"n": 4, "subspaces": [
            _coord(4, [0, 1, 2]),
            [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "-2"]],
        ]},
    }
    fx["heisenberg"] = {
        "description": "Heisenberg group: zero cup product, R_1 = C^2",
        "presentation": {"generators": ["x1", "x2"], "relators": ["((x1,x2),x1)", "((x1,x2),x2)"]},
        "components": {"n": 2, "subspaces": [_coord(2, [0, 1])]},
    }
    fx["trefoil"] = {
        "description": "trefoil knot group; Alexander polynomial t^2 - t + 1",
        "presentation": {"generators": ["x", "y"], "relators": ["x y x y^-1 x^-1 y^-1"]},
    }
    for k in (2, 3):
        gens = [f"x{i + 1}" for i in range(k)]
        fx[f"z{k}"] = {
            "description": f"free abelian group of rank {k}",
            "presentation": {"generators": gens, "relators": _commutators(gens)},
            "components": {"n": k, "subspaces": [[]]},
        }
        fx[f"f{k}"] = {
            "description": f"free group of rank {k}",
            "presentation": {"generators": gens, "relators": []},
            "components": {"n": k, "subspaces": [_coord(k, list(range(k)))]},
        }
    fx["surface-g2"] = {
        "description": "closed orientable surface of genus 2",
        "presentation": {"generators": ["a1", "b1", "a2", "b2"], "relators": ["(a1,b1)(a2,b2)"]},
        "cup": cup_to_json(cup_surface(2)),
        "components": {"n": 4, "subspaces": [_coord(4, [0, 1, 2, 3])]},
    }
    fx["circle-bundle-g2"] = {
        "description": "C^*-bundle over a genus 2 curve: zero cup product, tangent cone formula fails at k = 3",
        "cup": cup_to_json(cup_free(4)),
        "char_minors": _circle_bundle_minors(2),
        "variables": ["t1", "t2", "t3", "t4"],
    }
    for name, g in (
        ("c4", Graph.cycle(4)),
        ("p3", Graph.path(3)),
        ("p4", Graph.path(4)),
        ("k3", Graph.complete(3)),
        ("k4", Graph.complete(4)),
    ):
        fx[name] = {"description": f"graph {name.upper()}", "graph": graph_to_json(g)}
    b = braid_graph(5)
    fx["braid-5"] = {
        "description": "labeled graph of the braid group on 5 strings",
        "graph": graph_to_json(b.graph, b.labels),
    }
    fx["config-torus-2"] = {
        "description": "ordered configurations of 2 points on an elliptic curve",
        "cup": cup_to_json(cup_config_torus(2)),
        "components": {"n": 4, "subspaces": [[["1", "0", "-1", "0"], ["0", "1", "0", "-1"]]]},
    }
    fx["config-torus-3"] = {
        "description": "ordered configurations of 3 points on an elliptic curve; R_1 is a rational normal scroll",
        "cup": cup_to_json(cup_config_torus(3)),
    }
    return fx


FIXTURES: dict[str, dict] = _build()


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


def fixture(name: str) -> dict:
    """A deep copy of the named fixture document."""
    try:
        return copy.deepcopy(FIXTURES[name])
    except KeyError:
        from .errors import InputError

        raise InputError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}") from None
