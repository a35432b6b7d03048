"""Command line interface: one JSON document in, one JSON document out.

Exit codes: 0 computed (or verdict positive), 1 verdict negative, 2 input
error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import fixtures as fixture_corpus
from .artin import (
    artin_malcev_verdict,
    maximal_disconnected_subsets,
    raag_charvar_subtori,
    raag_resonance,
    raag_serre_verdict,
)
from .charvar import alexander_matrix, twisted_b1
from .cupdata import cup_from_presentation
from .errors import InputError, ResourceBoundError
from .obstructions import serre_battery
from .resonance import aomoto_h1_dim, resonance_contains_subspace, resonance_minors
from .subspaces import Subspace
from .serialize import (
    _RADICAL,
    arrangement_from_json,
    arrangement_to_json,
    character_from_json,
    cup_from_json,
    cup_to_json,
    dumps,
    graph_from_json,
    graph_to_json,
    parse_polynomial,
    presentation_from_json,
    scalar_from_json,
    subspace_from_json,
    validate,
    variable_names,
)
from .tangentcone import DEFAULT_SUPPORT_BOUND, tangent_cone_compare, tau1_ideal

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


# input helpers


def _load(args) -> dict:
    if args.fixture:
        doc = fixture_corpus.fixture(args.fixture)
    else:
        if args.infile and args.infile != "-":
            try:
                with open(args.infile, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as err:
                raise InputError(f"cannot read {args.infile}: {err.strerror}") from None
        else:
            text = sys.stdin.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as err:
            raise InputError(f"invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    if args.sqrt is not None:
        _check_radicand(doc, args.sqrt)
    return doc


def _check_radicand(doc, d: int, path: str = "") -> None:
    if isinstance(doc, str):
        for m in _RADICAL.finditer(doc):
            if int(m.group(1)) != d:
                raise InputError(f"{path or '<root>'}: radicand {m.group(1)} differs from --sqrt {d}")
    elif isinstance(doc, dict):
        for k, v in doc.items():
            _check_radicand(v, d, f"{path}/{k}")
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            _check_radicand(v, d, f"{path}/{i}")


def _presentation(doc: dict):
    if "presentation" in doc:
        return presentation_from_json(doc["presentation"])
    if "generators" in doc:
        return presentation_from_json(doc)
    raise InputError("input needs a 'presentation' document")


def _cup(doc: dict):
    if "cup" in doc:
        return cup_from_json(doc["cup"])
    if "mu" in doc:
        return cup_from_json(doc)
    return cup_from_presentation(_presentation(doc))


def _graph(doc: dict):
    return graph_from_json(doc["graph"] if "graph" in doc else doc)


def _components(doc: dict, n: int):
    if "components" not in doc:
        raise InputError("input needs a 'components' arrangement")
    comp = doc["components"]
    if isinstance(comp, list):
        comp = {"n": n, "subspaces": comp}
    arr = arrangement_from_json(comp)
    if arr.n != n:
        raise InputError(f"components live in dimension {arr.n}, expected {n}")
    # keep the user's list as given: the battery must see every claimed component
    return [Subspace(n, [[scalar_from_json(x) for x in v] for v in s]) for s in comp["subspaces"]]


def _polys(texts, names) -> list:
    return [parse_polynomial(t, names) for t in texts]


# commands


def cmd_cup(args, doc):
    c = cup_from_presentation(_presentation(doc))
    return {"cup": cup_to_json(c)}, EXIT_OK


def cmd_res_member(args, doc):
    c = _cup(doc)
    if "z" not in doc:
        raise InputError("input needs a point 'z'")
    z = [scalar_from_json(x) for x in doc["z"]]
    if args.k < 1:
        raise InputError("--k must be at least 1")
    dim = aomoto_h1_dim(c, z)
    member = dim >= args.k
    return {"k": args.k, "h1_dim": dim, "member": member}, EXIT_OK if member else EXIT_NEGATIVE


def cmd_res_contains(args, doc):
    c = _cup(doc)
    if "subspace" not in doc:
        raise InputError("input needs a 'subspace'")
    L = subspace_from_json(doc["subspace"], c.n)
    ok = resonance_contains_subspace(c, L, args.k)
    return {"k": args.k, "contained": ok, "subspace": L}, EXIT_OK if ok else EXIT_NEGATIVE


def cmd_res_minors(args, doc):
    c = _cup(doc)
    names = variable_names("x", c.n)
    ms = resonance_minors(c, args.k)
    return {"k": args.k, "variables": names, "minors": [m.format(names) for m in ms]}, EXIT_OK


def cmd_char_member(args, doc):
    p = _presentation(doc)
    if "character" not in doc:
        raise InputError("input needs a 'character'")
    rho = character_from_json(doc["character"])
    if args.k < 1:
        raise InputError("--k must be at least 1")
    b = twisted_b1(p, rho)
    member = b >= args.k
    return {"k": args.k, "twisted_b1": b, "member": member}, EXIT_OK if member else EXIT_NEGATIVE


def cmd_alex_matrix(args, doc):
    p = _presentation(doc)
    names = variable_names("t", p.n)
    m = alexander_matrix(p)
    return {"variables": names, "rows": [[e.format(names) for e in r] for r in m.rows]}, EXIT_OK


def _variables(doc: dict) -> list[str]:
    if "variables" in doc:
        return list(doc["variables"])
    if "n" in doc:
        return variable_names("t", doc["n"])
    raise InputError("give 'n' or 'variables' for the polynomial ring")


def cmd_tau1(args, doc):
    validate(doc, "polynomials")
    names = _variables(doc)
    fs = _polys(doc["polynomials"], names)
    arr = tau1_ideal(fs, len(names), args.support_bound)
    return {"variables": names, "tau1": arrangement_to_json(arr)}, EXIT_OK


def cmd_tc_compare(args, doc):
    c = _cup(doc)
    presentation = _presentation(doc) if ("presentation" in doc or "generators" in doc) else None
    minors = None
    if "char_minors" in doc:
        raw = doc["char_minors"]
        if isinstance(raw, dict):
            if str(args.k) not in raw:
                raise InputError(f"char_minors has no entry for k={args.k}")
            raw = raw[str(args.k)]
        names = list(doc.get("variables", variable_names("t", c.n)))
        minors = _polys(raw, names)
    components = _components(doc, c.n) if "components" in doc and args.k == 1 else None
    rep = tangent_cone_compare(
        c,
        args.k,
        presentation=presentation,
        char_minors=minors,
        components=components,
        samples=args.samples,
        seed=args.seed,
        support_bound=args.support_bound,
    )
    return rep, EXIT_OK if rep.verdict == "equal" else EXIT_NEGATIVE


def cmd_battery(args, doc):
    c = _cup(doc)
    comps = _components(doc, c.n)
    rep = serre_battery(c, comps, kmax=args.kmax, samples=args.samples, seed=args.seed)
    out = {
        "passed": rep.passed,
        "failed": rep.failed_tests(),
        "tests": rep.tests,
        "classifications": rep.classifications,
        "free_quotient_expected": rep.free_quotient_expected,
    }
    return out, EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_raag(args, doc):
    g = _graph(doc).graph
    if args.action == "resonance":
        return {"resonance": arrangement_to_json(raag_resonance(g, args.vertex_bound)),
                "subsets": maximal_disconnected_subsets(g, args.vertex_bound)}, EXIT_OK
    if args.action == "subtori":
        return {"subtori": raag_charvar_subtori(g, args.vertex_bound)}, EXIT_OK
    return raag_serre_verdict(g), EXIT_OK


def cmd_artin_verdict(args, doc):
    res = artin_malcev_verdict(_graph(doc))
    out = {"verdict": res["verdict"], "contraction": graph_to_json(res["contraction"]), "witness": res["witness"]}
    return out, EXIT_OK if res["verdict"] else EXIT_NEGATIVE


def cmd_fixtures(args, doc):
    if args.name:
        return fixture_corpus.fixture(args.name), EXIT_OK
    return {name: fixture_corpus.fixture(name) for name in fixture_corpus.fixture_names()}, EXIT_OK


COMMANDS: dict[str, tuple[Callable, str]] = {
    "cup": (cmd_cup, "cup-product data of a commutator-relator presentation"),
    "res-member": (cmd_res_member, "is the point z in R_k?"),
    "res-contains": (cmd_res_contains, "is the subspace contained in R_k?"),
    "res-minors": (cmd_res_minors, "defining minors of R_k away from 0"),
    "char-member": (cmd_char_member, "is the character in V_k?"),
    "alex-matrix": (cmd_alex_matrix, "abelianized Fox Jacobian"),
    "tau1": (cmd_tau1, "exponential tangent cone of a set of Laurent polynomials"),
    "tc-compare": (cmd_tc_compare, "compare tau_1(V_k) with R_k"),
    "battery": (cmd_battery, "resonance obstruction battery on claimed components of R_1"),
    "raag": (cmd_raag, "right-angled Artin group jump loci and verdicts"),
    "artin-verdict": (cmd_artin_verdict, "Malcev-level verdict for a labeled Artin graph"),
    "fixtures": (cmd_fixtures, "print the built-in example corpus"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="infile", help="input JSON file (default: stdin)")
    common.add_argument("--out", dest="outfile", help="output file (default: stdout)")
    common.add_argument("--fixture", help="use a built-in fixture as the input document")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled points (battery)")
    common.add_argument("--k", type=int, default=1, help="depth of the jump locus")
    common.add_argument("--kmax", type=int, default=None, help="deepest k checked by the battery")
    common.add_argument("--samples", type=int, default=25, help="points sampled per component")
    common.add_argument("--support-bound", type=int, default=DEFAULT_SUPPORT_BOUND, help="max terms per polynomial")
    common.add_argument("--vertex-bound", type=int, default=16, help="max graph vertices")
    common.add_argument("--sqrt", type=int, default=None, help="radicand d allowed in inputs")

    parser = argparse.ArgumentParser(prog="jumploci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "raag":
            p.add_argument("action", choices=["resonance", "subtori", "verdict"])
        if name == "fixtures":
            p.add_argument("name", nargs="?")
    return parser


def run(argv: list[str] | None = None) -> tuple[str, int]:
    """Execute one job; returns ``(output text, exit code)``."""
    args = build_parser().parse_args(argv)
    fn = COMMANDS[args.command][0]
    try:
        doc = {} if args.command == "fixtures" else _load(args)
        payload, code = fn(args, doc)
        return dumps(payload), code
    except ResourceBoundError as err:
        return dumps({"error": str(err), "kind": "resource-bound"}), EXIT_RESOURCE
    except (InputError, IndexError, ValueError, ZeroDivisionError) as err:
        return dumps({"error": str(err), "kind": "input"}), EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    args_list = sys.argv[1:] if argv is None else argv
    text, code = run(args_list)
    parsed = build_parser().parse_args(args_list)
    if code in (EXIT_INPUT, EXIT_RESOURCE):
        sys.stderr.write(text)
    elif parsed.outfile:
        with open(parsed.outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
