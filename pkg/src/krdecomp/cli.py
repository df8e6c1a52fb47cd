"""Command-line interface.

Exit status: 0 success, 1 a requested check found a failure, 2 usage error,
3 domain error (e.g. tree method on a non-simply-laced algebra, inexact
division), 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from . import render
from .characters import Character, InexactDivision, cn_column_tensor, is_true_character, tensor_irreducibles
from .factors import Factors, normalize_factors, omega_max
from .growth import REFERENCE_G, BudgetExhausted, max_growth
from .kr_formula import kr_character, kr_query
from .lie import AlgebraSpec, InvalidAlgebra, fundamental_weight
from .qsystem import (
    QTable,
    check_relations,
    initial_multiplicities,
    kr_initial_data,
    negative_witness,
    perturbed_initial_data,
    predicted_witnesses,
)
from .rectangles import Rectangle, columns_of, kostka, rect_decompose, reduce_shape, shape_to_weight
from .tree import NotSimplyLaced, build_tree

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _algebra(text: str) -> AlgebraSpec:
    try:
        return AlgebraSpec.parse(text)
    except InvalidAlgebra as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _factor_list(text: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        parts = item.split(":")
        if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
            raise argparse.ArgumentTypeError(f"malformed factor {item!r}; expected ELL:M")
        out.append((int(parts[0]), int(parts[1])))
    return out


def _rect_list(text: str) -> list[Rectangle]:
    if not text.strip():
        return []
    try:
        return Rectangle.parse_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _flip(text: str) -> tuple[int, int]:
    fields = dict(item.split("=", 1) for item in text.split(",") if "=" in item)
    try:
        return int(fields["a"]), int(fields["b"])
    except (KeyError, ValueError):
        raise argparse.ArgumentTypeError(f"malformed flip {text!r}; expected a=INT,b=INT") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="krdecomp", description="Decompositions of Kirillov-Reshetikhin modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def factor_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--algebra", type=_algebra, required=True, help="e.g. E6, D4")
        p.add_argument("--weight", type=int, help="node ell of W_m(ell)")
        p.add_argument("--m", type=int, help="m of W_m(ell)")
        p.add_argument("--factors", type=_factor_list, help="product of KR modules, e.g. 2:1,1:2")

    p = sub.add_parser("decompose", help="decomposition tree (simply-laced types)")
    factor_args(p)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")

    p = sub.add_parser("oracle", help="brute-force multiplicity sum (any type)")
    factor_args(p)
    p.add_argument("--lam", type=_int_list, help="query one weight (omega-coordinates)")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("tensor-rect", help="tensor product of sl_n rectangles")
    p.add_argument("--rects", type=_rect_list, required=True, help="ROWSxCOLS list, e.g. 3x2,2x1,1x1")
    p.add_argument("--n", type=int, help="work in sl_n (default: n large)")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")

    p = sub.add_parser("tensor", help="V(lam) tensor V(mu)")
    p.add_argument("--algebra", type=_algebra, required=True)
    p.add_argument("--left", type=_int_list, required=True)
    p.add_argument("--right", type=_int_list, required=True)
    p.add_argument("--rule", choices=["klimyk", "column"], default="klimyk",
                   help="'column' uses the type C column rule; --right must be fundamental")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("qsystem", help="evaluate Q_m(ell)")
    p.add_argument("--algebra", type=_algebra, required=True)
    p.add_argument("--l", dest="ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--init", default="kr", help="'kr' or a JSON file of initial characters")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("qsystem-check", help="residuals of the Q-system relations")
    p.add_argument("--algebra", type=_algebra, required=True)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--init", default="kr")

    p = sub.add_parser("qsystem-witness", help="perturb one initial multiplicity and find a negative coefficient")
    p.add_argument("--algebra", type=_algebra, required=True)
    p.add_argument("--flip", type=_flip, required=True, help="a=INT,b=INT")
    p.add_argument("--value", type=int, help="new value of M_{a,b} (default: toggle 0 <-> 1)")
    p.add_argument("--max-m", type=int, default=3)

    p = sub.add_parser("growth", help="maximal path-type growth of W_m(ell)")
    p.add_argument("--algebra", type=_algebra, required=True)
    p.add_argument("--l", dest="ell", type=int, required=True)
    p.add_argument("--budget", type=int, help="maximum number of search states")

    p = sub.add_parser("kostka", help="Kostka number via single-column tensoring")
    p.add_argument("--shape", type=_int_list, required=True, help="row lengths of lambda")
    p.add_argument("--columns", type=_int_list, required=True, help="column heights")
    return parser


def _factors(args: argparse.Namespace) -> Factors:
    spec = args.algebra
    if args.factors is not None:
        if args.weight is not None or args.m is not None:
            raise UsageError("give either --factors or --weight/--m, not both")
        raw = args.factors
    elif args.weight is not None and args.m is not None:
        raw = [(args.weight, args.m)]
    else:
        raise UsageError("need --weight and --m, or --factors")
    try:
        return normalize_factors(spec, raw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _weight_arg(spec: AlgebraSpec, w: tuple[int, ...], flag: str) -> tuple[int, ...]:
    if len(w) != spec.rank:
        raise UsageError(f"{flag} needs {spec.rank} coordinates for {spec}")
    return w


def _load_initial(spec: AlgebraSpec, source: str) -> dict[int, Character]:
    if source == "kr":
        return kr_initial_data(spec)
    doc = json.loads(Path(source).read_text())
    if AlgebraSpec.parse(doc["algebra"]) != spec:
        raise UsageError(f"{source} holds data for {doc['algebra']}, not {spec}")
    out = {}
    for key, terms in doc["initial"].items():
        out[int(key)] = Character(spec, {tuple(t["weight"]): t["mult"] for t in terms})
    return out


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _cmd_decompose(args: argparse.Namespace) -> int:
    tree = build_tree(args.algebra, _factors(args))
    _emit({"text": render.tree_text, "json": render.tree_json, "dot": render.tree_dot}[args.format](tree))
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    spec = args.algebra
    factors = _factors(args)
    if args.lam is not None:
        lam = _weight_arg(spec, args.lam, "--lam")
        result = kr_query(spec, factors, lam)
        if args.format == "json":
            _emit(json.dumps({
                "algebra": str(spec),
                "weight": list(lam),
                "status": result.status,
                "mult": result.multiplicity,
                "configs": [[list(row) for row in c.counts] for c in result.configs],
            }) + "\n")
        else:
            _emit(f"status: {result.status}\nmult: {result.multiplicity}\n")
            for c in result.configs:
                _emit(f"config {c}\n")
        return EXIT_OK
    terms = kr_character(spec, factors)
    _emit(render.character_json(spec, terms) if args.format == "json" else render.character_text(terms))
    return EXIT_OK


def _rect_text(result) -> str:
    lines = []
    for node in result.nodes():
        shape = reduce_shape(node.final_shape, result.n_bound)
        lines.append(f"⊕({node.depth}) {node.multiplicity}·({','.join(map(str, shape))})")
    lines.append("")
    for shape, mult in result.aggregate().items():
        suffix = ""
        if result.n_bound is not None:
            suffix = f" V[{','.join(map(str, shape_to_weight(shape, result.n_bound)))}]"
        lines.append(f"{mult}·({','.join(map(str, shape))}){suffix}")
    return "\n".join(lines) + "\n"


def _rect_json(result) -> str:
    def encode(node) -> dict:
        return {
            "shape": list(reduce_shape(node.final_shape, result.n_bound)),
            "dominance_numbers": list(node.state.dominance_numbers or ()),
            "mult": node.multiplicity,
            "children": [encode(c) for c in node.children],
        }

    doc = {
        "n": result.n_bound,
        "rects": [[r.rows, r.cols] for r in result.rects],
        "root": encode(result.root),
        "aggregate": [{"shape": list(s), "mult": m} for s, m in result.aggregate().items()],
    }
    return json.dumps(doc, indent=1) + "\n"


def _rect_dot(result) -> str:
    lines = ["digraph rectangles {", "  node [shape=plaintext];"]
    ids = {}
    for i, node in enumerate(result.nodes()):
        ids[id(node)] = f"n{i}"
        cols = ",".join(map(str, columns_of(reduce_shape(node.final_shape, result.n_bound))))
        coeff = "" if node.multiplicity == 1 else f"{node.multiplicity} "
        lines.append(f'  n{i} [label="{coeff}cols[{cols}]"];')
    for node in result.nodes():
        for child in node.children:
            e = ",".join(map(str, child.state.dominance_numbers))
            lines.append(f'  {ids[id(node)]} -> {ids[id(child)]} [label="[{e}]"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_tensor_rect(args: argparse.Namespace) -> int:
    if args.n is not None and args.n < 2:
        raise UsageError("--n must be at least 2")
    result = rect_decompose(args.n, args.rects)
    _emit({"text": _rect_text, "json": _rect_json, "dot": _rect_dot}[args.format](result))
    return EXIT_OK


def _cmd_tensor(args: argparse.Namespace) -> int:
    spec = args.algebra
    left = _weight_arg(spec, args.left, "--left")
    right = _weight_arg(spec, args.right, "--right")
    if args.rule == "column":
        if sum(right) != 1 and any(right):
            raise UsageError("--rule column needs a fundamental weight on the right")
        k = right.index(1) + 1 if any(right) else 0
        result = cn_column_tensor(spec, Character.irreducible(spec, left), k)
    else:
        result = tensor_irreducibles(spec, left, right)
    terms = result.terms
    _emit(render.character_json(spec, terms) if args.format == "json" else render.character_text(terms))
    return EXIT_OK


def _cmd_qsystem(args: argparse.Namespace) -> int:
    spec = args.algebra
    if not 1 <= args.ell <= spec.rank or args.m < 0:
        raise UsageError("need 1 <= --l <= rank and --m >= 0")
    table = QTable(spec, _load_initial(spec, args.init))
    ch = table.q(args.m, args.ell)
    _emit(render.character_json(spec, ch.terms) if args.format == "json" else render.character_text(ch.terms))
    return EXIT_OK


def _cmd_qsystem_check(args: argparse.Namespace) -> int:
    spec = args.algebra
    table = QTable(spec, _load_initial(spec, args.init))
    failures = 0
    for (m, ell), residual in check_relations(table, args.max_m).items():
        bound = tuple(m * x for x in fundamental_weight(spec, ell))
        positive = is_true_character(table.q(m, ell), bound)
        status = "ok" if not residual and positive else "FAIL"
        failures += status != "ok"
        shown = "0" if not residual else repr(residual)
        _emit(f"m={m} l={ell} residual={shown} true_character={positive} {status}\n")
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def _cmd_qsystem_witness(args: argparse.Namespace) -> int:
    spec = args.algebra
    a, b = args.flip
    free = initial_multiplicities(spec)
    if (a, b) not in free:
        raise UsageError(f"M_{{{a},{b}}} is not a free multiplicity of {spec}; choices: {sorted(free)}")
    value = args.value if args.value is not None else 1 - min(free[(a, b)], 1)
    initial = perturbed_initial_data(spec, {(a, b): value})
    _emit(f"M_{{{a},{b}}}: {free[(a, b)]} -> {value}\n")
    witness = negative_witness(spec, initial, args.max_m)
    if witness is None:
        _emit(f"no negative coefficient up to m={args.max_m}\n")
    else:
        _emit(f"witness: {witness.kind} coefficient {witness.coefficient} of V{list(witness.weight)} "
              f"in Q_{witness.m}({witness.ell})\n")
    table = QTable(spec, initial)
    for p in predicted_witnesses(spec, a, b, value):
        got = table.q(p.m, p.ell)[p.weight]
        _emit(f"predicted [{p.case}] V{list(p.weight)} in Q_{p.m}({p.ell}): {p.coefficient}, computed {got}\n")
    return EXIT_OK


def _cmd_growth(args: argparse.Namespace) -> int:
    spec = args.algebra
    if not 1 <= args.ell <= spec.rank:
        raise UsageError(f"--l must be in 1..{spec.rank}")
    result = max_growth(spec, args.ell, args.budget)
    _emit(f"g: {result.g}\n")
    _emit("witness: " + " > ".join(str(list(d)) for d in result.witness) + "\n")
    _emit(f"degree: {result.degree}\n")
    _emit(f"states: {result.states}\n")
    expected = _expected_g(spec, args.ell)
    if expected is not None:
        _emit(f"reference g: {expected} ({'match' if expected == result.g else 'MISMATCH'})\n")
    return EXIT_OK


def _expected_g(spec: AlgebraSpec, ell: int) -> int | None:
    if spec.family == "A":
        return 0
    if spec.family == "D":
        return ell // 2 if ell <= spec.rank - 2 else 0
    table = REFERENCE_G.get(str(spec))
    return table[ell - 1] if table else None


def _cmd_kostka(args: argparse.Namespace) -> int:
    shape = tuple(sorted(args.shape, reverse=True))
    _emit(f"{kostka(shape, args.columns)}\n")
    return EXIT_OK


_COMMANDS = {
    "decompose": _cmd_decompose,
    "oracle": _cmd_oracle,
    "tensor-rect": _cmd_tensor_rect,
    "tensor": _cmd_tensor,
    "qsystem": _cmd_qsystem,
    "qsystem-check": _cmd_qsystem_check,
    "qsystem-witness": _cmd_qsystem_witness,
    "growth": _cmd_growth,
    "kostka": _cmd_kostka,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"krdecomp: error: {exc}\n")
        return EXIT_USAGE
    except NotSimplyLaced as exc:
        sys.stderr.write(f"krdecomp: {exc}\n")
        return EXIT_DOMAIN
    except BudgetExhausted as exc:
        sys.stderr.write(f"krdecomp: {exc}\n")
        return EXIT_BUDGET
    except (InexactDivision, ValueError) as exc:
        sys.stderr.write(f"krdecomp: {exc}\n")
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
