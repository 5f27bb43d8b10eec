"""Subcommand parsers and handlers; each handler maps parsed arguments to an Outcome."""

import argparse
import asyncio
from fractions import Fraction
from typing import Callable, Optional

from cli.cli import Context, Outcome, format_number, named_graph, read_graph
from coloring.chromatic import chromatic_polynomial, count_colorings
from coloring.coloring import chromatic_number, degeneracy_coloring, is_k_colorable
from coloring.planarity import (
    POLYHEDRA,
    bipartite_planar_bound,
    check_polyhedron,
    euler_characteristic,
    planar_edge_bound,
)
from counting import counting
from counting.divisors import divisor_profile, divisors, mobius, sigma0, sigma1
from counting.poker import PokerHand, poker_count, poker_table
from genfunc.coins import CoinSpec, coin_change_poly, distinct_parts_count, odd_parts_count, partition_count
from genfunc.polynomial import Polynomial
from genfunc.rational_gf import RationalGF, catalan_gf, expand_rational, partial_fractions
from genfunc.series import binomial_series, series_from, series_inverse, series_sqrt
from graph.connectivity import connected_components, two_coloring
from graph.graph import Graph
from graph.storage import adjacency_matrix, format_matrix
from graph.trees import (
    BinaryTree,
    at_most_binary_count,
    binary_tree_count,
    bst_from_keys,
    cayley_count,
    enumerate_labeled_trees,
    increasing_tree_from_permutation,
    is_tree,
    tournament_count,
)
from graph.walks import EulerTag, count_walks, euler_classify, euler_walk, hamiltonian_cycle
from graphopt.matching import bipartition, greedy_maximal_matching, hall_violator, maximum_matching_bipartite
from graphopt.mst import kruskal_mst
from graphopt.ramsey import ramsey_number, ramsey_number_parallel, ramsey_witness
from graphopt.tsp import brute_force_tour, brute_force_tour_parallel, tsp_tree_shortcut
from graphopt.weighted import WeightedGraph
from sequences import sequences
from sequences.recurrence import LinearRecurrence, closed_form_agrees, iterate_recurrence, solve_recurrence
from utils.rational import format_float, format_rational, parse_rational, parse_rational_list

type Handler = Callable[[argparse.Namespace, Context], Outcome]


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    try:
        return parse_rational_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("source", nargs="?", default="-", help="graph file, or - for stdin (default)")
    parser.add_argument("--named", help="use a built-in graph instead, e.g. petersen, complete:5, bipartite:3,3")


def _load_graph(args: argparse.Namespace, ctx: Context) -> tuple[Graph, list[Fraction] | None]:
    if args.named:
        return named_graph(args.named), None
    return read_graph(args.source, ctx.stdin)


def _load_weighted(args: argparse.Namespace, ctx: Context) -> WeightedGraph:
    G, weights = _load_graph(args, ctx)
    if weights is None:
        raise ValueError("this command needs a weighted graph ('u v w' edge lines)")
    return WeightedGraph(G, tuple(weights))


def _single(value) -> Outcome:
    return Outcome([format_number(value)], value)


# count


def _configure_count(parser: argparse.ArgumentParser) -> None:
    verbs = parser.add_subparsers(dest="verb", metavar="verb", required=True)

    def verb(name: str, *arguments: tuple[str, dict]) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name)
        for arg, options in arguments:
            sub.add_argument(arg, **options)
        return sub

    integer = {"type": int}
    verb("choose", ("n", integer), ("k", integer))
    verb("factorial", ("n", integer))
    verb("falling", ("n", integer), ("k", integer))
    verb("select", ("n", integer), ("k", integer), ("--mode", {"default": "unordered/no-repeats"}))
    verb("multinomial", ("parts", {"type": int, "nargs": "+"}))
    verb("anagrams", ("word", {}))
    verb("subsets", ("n", integer), ("--parity", {"choices": ("all", "even", "odd"), "default": "all"}))
    verb("union2", *((name, integer) for name in ("a", "b", "ab")))
    verb("union3", *((name, integer) for name in ("a", "b", "c", "ab", "ac", "bc", "abc")))
    verb("coprime", ("N", integer), ("primes", {"type": int, "nargs": "*"}))
    verb("triangular", ("n", integer))
    verb("lattice", ("a", integer), ("b", integer))
    verb("distribute", ("k", integer), ("n", integer), ("--at-least-one", {"action": "store_true"}))
    verb("generalized", ("alpha", {"type": _rational}), ("k", integer))


def _count(args: argparse.Namespace, ctx: Context) -> Outcome:
    match args.verb:
        case "choose":
            return _single(counting.binomial(args.n, args.k))
        case "factorial":
            return _single(counting.factorial(args.n))
        case "falling":
            return _single(counting.falling_factorial(args.n, args.k))
        case "select":
            return _single(counting.selection_count(args.n, args.k, counting.SelectionMode.parse(args.mode)))
        case "multinomial":
            return _single(counting.multinomial(args.parts))
        case "anagrams":
            return _single(counting.anagram_count(args.word))
        case "subsets":
            counter = {
                "all": counting.subset_count,
                "even": counting.even_subset_count,
                "odd": counting.odd_subset_count,
            }[args.parity]
            return _single(counter(args.n))
        case "union2":
            return _single(counting.union_count_2(args.a, args.b, args.ab))
        case "union3":
            return _single(counting.union_count_3(args.a, args.b, args.c, args.ab, args.ac, args.bc, args.abc))
        case "coprime":
            return _single(counting.coprime_count(args.N, args.primes))
        case "triangular":
            return _single(counting.triangular(args.n))
        case "lattice":
            return _single(counting.lattice_paths(args.a, args.b))
        case "distribute":
            return _single(counting.distribute_identical(args.k, args.n, args.at_least_one))
        case "generalized":
            return _single(counting.generalized_binomial(args.alpha, args.k))
    raise ValueError(f"unknown count verb {args.verb!r}")


def _configure_pascal(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("n", type=int)
    parser.add_argument("--mod", type=int, default=None, help="reduce the row modulo m")
    parser.add_argument("--rows", action="store_true", help="print every row 0..n")


def _pascal(args: argparse.Namespace, ctx: Context) -> Outcome:
    if args.rows:
        rows = counting.pascal_rows(args.n)
        if args.mod is not None:
            rows = [counting.pascal_row_mod(i, args.mod) for i in range(args.n + 1)]
        return Outcome([" ".join(map(str, row)) for row in rows], rows)
    row = counting.pascal_row(args.n) if args.mod is None else counting.pascal_row_mod(args.n, args.mod)
    return Outcome([" ".join(map(str, row))], row)


def _configure_derange(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("n", type=int)
    parser.add_argument(
        "--method", choices=[m.value for m in counting.DerangementMethod], default=counting.DerangementMethod.PRODUCT_RECURRENCE.value
    )


def _derange(args: argparse.Namespace, ctx: Context) -> Outcome:
    return _single(counting.derangement(args.n, args.method))


def _configure_catalan(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("n", type=int)
    parser.add_argument("--method", choices=[m.value for m in counting.CatalanMethod], default=counting.CatalanMethod.CLOSED_FORM.value)
    parser.add_argument("--paths", action="store_true", help="list the Dyck words of semilength n")


def _catalan(args: argparse.Namespace, ctx: Context) -> Outcome:
    if args.paths:
        paths = sequences.dyck_paths(args.n)
        return Outcome(paths, paths)
    return _single(counting.catalan(args.n, args.method))


def _configure_divisors(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("N", type=int)


def _divisors(args: argparse.Namespace, ctx: Context) -> Outcome:
    profile = divisor_profile(args.N)
    factors = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in profile.prime_factorization) or "1"
    result = {
        "factorization": [[p, e] for p, e in profile.prime_factorization],
        "count": sigma0(profile),
        "sum": sigma1(profile),
        "mobius": mobius(profile),
        "divisors": divisors(profile),
    }
    lines = [
        f"factorization: {factors}",
        f"count: {result['count']}",
        f"sum: {result['sum']}",
        f"mobius: {result['mobius']}",
        "divisors: " + " ".join(map(str, result["divisors"])),
    ]
    return Outcome(lines, result)


def _configure_poker(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("hand", nargs="?", choices=[h.value for h in PokerHand], help="omit for the full table")


def _poker(args: argparse.Namespace, ctx: Context) -> Outcome:
    if args.hand:
        return _single(poker_count(args.hand))
    table = poker_table()
    lines = [f"{hand.value} {count}" for hand, count in table.items()]
    lines.append(f"total {sum(table.values())}")
    return Outcome(lines, {hand.value: count for hand, count in table.items()})


# sequences and generating functions


def _configure_seq(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "name", choices=("fibonacci", "lucas", "binet", "stairs", "hanoi", "plane", "circles", "dyck")
    )
    parser.add_argument("n", type=int)
    parser.add_argument("--steps", type=_int_list, default=[1, 2], help="allowed stair steps (stairs)")
    parser.add_argument("--moves", action="store_true", help="list the moves (hanoi)")


def _seq(args: argparse.Namespace, ctx: Context) -> Outcome:
    match args.name:
        case "fibonacci":
            return _single(sequences.fibonacci(args.n))
        case "lucas":
            return _single(sequences.lucas(args.n))
        case "binet":
            return _single(sequences.fibonacci_binet(args.n))
        case "stairs":
            return _single(sequences.stair_ways(args.n, sequences.StairRule(args.steps)))
        case "hanoi":
            if not args.moves:
                return _single(sequences.hanoi_count(args.n))
            moves = sequences.hanoi_moves(args.n)
            return Outcome([f"disk {d}: {a} -> {b}" for d, a, b in moves], [list(m) for m in moves])
        case "plane":
            return _single(sequences.plane_regions(args.n))
        case "circles":
            return _single(sequences.circle_regions(args.n))
        case "dyck":
            return _single(len(sequences.dyck_paths(args.n)))
    raise ValueError(f"unknown sequence {args.name!r}")


def _configure_solve_rec(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--coeffs", type=_rational_list, required=True, help="c_1,...,c_d")
    parser.add_argument("--init", type=_rational_list, required=True, help="a_start,...,a_{start+d-1}")
    parser.add_argument("--start", type=int, default=1, choices=(0, 1))
    parser.add_argument("--n", type=int, default=None, help="also evaluate a_n exactly and from the closed form")


def _solve_rec(args: argparse.Namespace, ctx: Context) -> Outcome:
    rec = LinearRecurrence.of(args.coeffs, args.init, args.start)
    closed = solve_recurrence(rec, ctx.settings.root_tolerance)
    lines = [f"root {format_float(r)} weight {format_float(z)}" for r, z in zip(closed.roots, closed.weights)]
    agrees = closed_form_agrees(rec, closed, tolerance=ctx.settings.match_tolerance)
    lines.append(f"agrees with iteration through n = 40: {'yes' if agrees else 'no'}")
    result: dict = {
        "roots": list(closed.roots),
        "weights": list(closed.weights),
        "residual": closed.residual,
        "agrees": agrees,
    }
    if args.n is not None:
        exact = iterate_recurrence(rec, args.n)
        approx = closed.evaluate(args.n)
        lines.append(f"a_{args.n} = {format_rational(exact)} (closed form {format_float(approx)})")
        result.update(n=args.n, exact=exact, closed_form=approx)
    return Outcome(lines, result)


def _configure_series(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("operation", choices=("expand", "partial", "inverse", "sqrt", "binomial", "catalan"))
    parser.add_argument("--coeffs", type=_rational_list, default=None, help="series coefficients (inverse, sqrt)")
    parser.add_argument("--num", type=_rational_list, default=None, help="numerator coefficients (expand, partial)")
    parser.add_argument("--den", type=_rational_list, default=None, help="denominator coefficients (expand, partial)")
    parser.add_argument("--alpha", type=_rational, default=None, help="exponent (binomial)")
    parser.add_argument("--order", type=int, default=10)


def _require(value, flag: str, operation: str):
    if value is None:
        raise ValueError(f"series {operation} needs {flag}")
    return value


def _series(args: argparse.Namespace, ctx: Context) -> Outcome:
    op = args.operation
    if op in ("expand", "partial"):
        R = RationalGF(Polynomial(_require(args.num, "--num", op)), Polynomial(_require(args.den, "--den", op)))
        if op == "partial":
            terms = partial_fractions(R, ctx.settings.root_tolerance)
            show = format_number if all(t.exact for t in terms) else format_float
            lines = [f"{show(t.weight)} / (1 - {show(t.root)}*x)" for t in terms]
            return Outcome(lines, [{"weight": t.weight, "root": t.root} for t in terms])
        series = expand_rational(R, args.order)
    elif op == "inverse":
        series = series_inverse(series_from(_require(args.coeffs, "--coeffs", op), args.order))
    elif op == "sqrt":
        series = series_sqrt(series_from(_require(args.coeffs, "--coeffs", op), args.order))
    elif op == "binomial":
        series = binomial_series(_require(args.alpha, "--alpha", op), args.order)
    else:
        series = catalan_gf(args.order)
    return Outcome([str(series)], list(series.coefficients))


def _configure_change(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--coins", required=True, help="comma list of valueXcount, e.g. 1x6,5x2 or 1xinf")
    parser.add_argument("--amount", type=int, default=None)
    parser.add_argument("--order", type=int, default=None, help="truncation order, required for unlimited coins")


def _change(args: argparse.Namespace, ctx: Context) -> Outcome:
    coins = [CoinSpec.parse(part) for part in args.coins.split(",") if part.strip()]
    if args.amount is not None:
        order = max(args.amount, args.order or 0)
        if any(coin.unlimited for coin in coins) and args.order is None:
            raise ValueError("unlimited coins need --order")
        return _single(int(coin_change_poly(coins, order)[args.amount]))
    poly = coin_change_poly(coins, args.order)
    coefficients = [int(c) for c in poly.coefficients]
    return Outcome([" ".join(map(str, coefficients))], coefficients)


def _configure_partitions(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("n", type=int)
    parser.add_argument("--kind", choices=("all", "distinct", "odd"), default="all")


def _partitions(args: argparse.Namespace, ctx: Context) -> Outcome:
    if args.n < 0:
        raise ValueError(f"n must be nonnegative, got {args.n}")
    counter = {"all": partition_count, "distinct": distinct_parts_count, "odd": odd_parts_count}[args.kind]
    return _single(counter(args.n))


# graphs


def _configure_graph(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)
    parser.add_argument("--matrix", action="store_true", help="print the adjacency matrix")


def _graph(args: argparse.Namespace, ctx: Context) -> Outcome:
    G, _ = _load_graph(args, ctx)
    if args.matrix:
        matrix = adjacency_matrix(G)
        return Outcome(format_matrix(matrix).splitlines() if G.n else [], matrix)
    components = connected_components(G)
    bipartite = two_coloring(G).bipartite
    result = {
        "vertices": G.n,
        "edges": G.edge_count,
        "multi": G.allow_multi,
        "loops": G.allow_loops,
        "degrees": [G.degree(v) for v in G.vertices()],
        "components": len(components),
        "bipartite": bipartite,
    }
    lines = [
        f"vertices {G.n}",
        f"edges {G.edge_count}",
        "degrees " + " ".join(map(str, result["degrees"])),
        f"components {len(components)}",
        f"bipartite {'yes' if bipartite else 'no'}",
    ]
    return Outcome(lines, result)


def _configure_walks(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", nargs=3, type=int, metavar=("I", "J", "N"), help="walks of length N from I to J")
    mode.add_argument("--euler", action="store_true", help="classify and find an Eulerian walk")
    mode.add_argument("--hamilton", action="store_true", help="find a Hamiltonian cycle")


def _walks(args: argparse.Namespace, ctx: Context) -> Outcome:
    G, _ = _load_graph(args, ctx)
    if args.count:
        i, j, N = args.count
        return _single(count_walks(G, i, j, N))
    if args.euler:
        classification = euler_classify(G)
        lines = [classification.tag.value]
        result: dict = {"tag": classification.tag, "walk": None}
        if classification.endpoints is not None:
            result["endpoints"] = list(classification.endpoints)
        if classification.tag is not EulerTag.NO_EULERIAN_WALK:
            walk = euler_walk(G)
            lines.append(" ".join(map(str, walk.vertices)))
            result["walk"] = list(walk.vertices)
        return Outcome(lines, result)
    route = hamiltonian_cycle(G, ctx.settings.hamiltonian_cap)
    if route is None:
        return Outcome(["none"], None)
    closed = route + [route[0]]
    return Outcome([" ".join(map(str, closed))], closed)


def format_tree(tree: Optional[BinaryTree]) -> str:
    """``label`` for a leaf, ``label(left right)`` otherwise, ``-`` for a missing child."""
    if tree is None:
        return "-"
    if tree.is_leaf:
        return str(tree.label)
    return f"{tree.label}({format_tree(tree.left)} {format_tree(tree.right)})"


def _configure_tree(parser: argparse.ArgumentParser) -> None:
    verbs = parser.add_subparsers(dest="verb", metavar="verb", required=True)
    for name in ("cayley", "labeled", "binary", "at-most-binary", "tournament"):
        verbs.add_parser(name).add_argument("n", type=int)
    verbs.add_parser("increasing").add_argument("permutation", type=_int_list)
    verbs.add_parser("bst").add_argument("keys", type=_int_list)
    _add_graph_source(verbs.add_parser("check"))


def _tree(args: argparse.Namespace, ctx: Context) -> Outcome:
    match args.verb:
        case "cayley":
            return _single(cayley_count(args.n))
        case "labeled":
            trees = enumerate_labeled_trees(args.n)
            lines = [" ".join(f"{u}-{v}" for u, v in tree.edges) for tree in trees]
            return Outcome(lines, [[list(e) for e in tree.edges] for tree in trees])
        case "binary":
            return _single(binary_tree_count(args.n))
        case "at-most-binary":
            return _single(at_most_binary_count(args.n))
        case "tournament":
            return _single(tournament_count(args.n))
        case "increasing":
            text = format_tree(increasing_tree_from_permutation(args.permutation))
            return Outcome([text], text)
        case "bst":
            text = format_tree(bst_from_keys(args.keys))
            return Outcome([text], text)
        case "check":
            G, _ = _load_graph(args, ctx)
            verdict = is_tree(G)
            return Outcome(["yes" if verdict else "no"], verdict)
    raise ValueError(f"unknown tree verb {args.verb!r}")


# optimization


def _configure_mst(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)


def _mst(args: argparse.Namespace, ctx: Context) -> Outcome:
    W = _load_weighted(args, ctx)
    tree = kruskal_mst(W)
    edges = [[u, v, W.weight(u, v)] for u, v in tree.tree.edges]
    lines = [f"{u} {v} {format_rational(w)}" for u, v, w in edges]
    lines.append(f"cost {format_rational(tree.cost)}")
    return Outcome(lines, {"edges": edges, "cost": tree.cost})


def _configure_tsp(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)
    parser.add_argument("--start", type=int, default=0)
    parser.add_argument("--exact", action="store_true", help="exhaustive optimal tour instead of the tree shortcut")


def _tsp(args: argparse.Namespace, ctx: Context) -> Outcome:
    W = _load_weighted(args, ctx)
    if not args.exact:
        tour = tsp_tree_shortcut(W, args.start)
    elif ctx.settings.workers > 1:
        tour = asyncio.run(brute_force_tour_parallel(W, ctx.settings.workers, ctx.settings.tour_cap))
    else:
        tour = brute_force_tour(W, ctx.settings.tour_cap)
    return Outcome([str(tour), f"cost {format_rational(tour.cost)}"], {"tour": list(tour.vertices), "cost": tour.cost})


def _configure_match(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)
    parser.add_argument("--left", type=_int_list, default=None, help="left vertices of the bipartition")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--greedy", action="store_true", help="greedy maximal matching (any graph)")
    mode.add_argument("--hall", action="store_true", help="look for a Hall violator in the left part")


def _match(args: argparse.Namespace, ctx: Context) -> Outcome:
    G, _ = _load_graph(args, ctx)
    if args.hall:
        violator = hall_violator(G, args.left, ctx.settings.hall_cap)
        if violator is None:
            return Outcome(["none"], None)
        reach = sorted(G.neighborhood(violator))
        lines = [" ".join(map(str, violator)), "neighborhood " + " ".join(map(str, reach))]
        return Outcome(lines, {"violator": list(violator), "neighborhood": reach})
    if args.greedy:
        M = greedy_maximal_matching(G)
    else:
        M = maximum_matching_bipartite(G, bipartition(G, args.left))
    edges = [list(e) for e in M.sorted_edges()]
    lines = [f"{u} {v}" for u, v in edges]
    lines.append(f"size {len(M)}")
    return Outcome(lines, {"edges": edges, "size": len(M)})


def _configure_ramsey(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("m1", type=int)
    parser.add_argument("m2", type=int)
    parser.add_argument("--cap", type=int, default=7)
    parser.add_argument("--witness", type=int, default=None, metavar="N", help="print a clique-free coloring of K_N")


def _ramsey(args: argparse.Namespace, ctx: Context) -> Outcome:
    if args.witness is not None:
        coloring = ramsey_witness(args.witness, args.m1, args.m2)
        if coloring is None:
            return Outcome(["none"], None)
        lines = [f"{u} {v} {coloring.color(u, v)}" for u in range(coloring.n) for v in range(u + 1, coloring.n)]
        return Outcome(lines, {"n": coloring.n, "colors": list(coloring.colors)})
    if ctx.settings.workers > 1:
        n = asyncio.run(ramsey_number_parallel(args.m1, args.m2, args.cap, ctx.settings.workers))
    else:
        n = ramsey_number(args.m1, args.m2, args.cap)
    return _single(n)


# coloring


def _configure_color(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--k", type=int, default=None, help="look for a proper k-coloring")
    mode.add_argument("--degeneracy", action="store_true", help="greedy coloring along the degeneracy order")


def _color(args: argparse.Namespace, ctx: Context) -> Outcome:
    G, _ = _load_graph(args, ctx)
    if args.degeneracy:
        coloring = degeneracy_coloring(G)
    else:
        k = chromatic_number(G, ctx.settings.coloring_cap) if args.k is None else args.k
        coloring = is_k_colorable(G, k, ctx.settings.coloring_cap)
        if coloring is None:
            return Outcome(["none"], None)
    colors = list(coloring.colors)
    lines = [f"colors {coloring.color_count}", " ".join(map(str, colors))]
    return Outcome(lines, {"colors": coloring.color_count, "coloring": colors})


def _configure_chrompoly(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)
    parser.add_argument("--at", type=int, default=None, help="evaluate at k and compare with a brute-force count")


def _chrompoly(args: argparse.Namespace, ctx: Context) -> Outcome:
    G, _ = _load_graph(args, ctx)
    poly = chromatic_polynomial(G, ctx.settings.deletion_cap)
    if args.at is None:
        return Outcome([str(poly)], list(poly.coefficients))
    value = poly(args.at)
    brute = count_colorings(G, args.at)
    return Outcome([f"{value} (brute force {brute})"], {"coefficients": list(poly.coefficients), "value": value, "brute_force": brute})


def _configure_planarity(parser: argparse.ArgumentParser) -> None:
    _add_graph_source(parser)


def _planarity(args: argparse.Namespace, ctx: Context) -> Outcome:
    G, _ = _load_graph(args, ctx)
    general = planar_edge_bound(G)
    bipartite = bipartite_planar_bound(G)
    lines = [f"edge bound {general.value}", f"bipartite bound {bipartite.value}"]
    return Outcome(lines, {"edge_bound": general, "bipartite_bound": bipartite})


def _configure_euler(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("counts", nargs="*", type=int, metavar="V E F", help="vertex, edge and face counts")
    parser.add_argument("--polyhedra", action="store_true", help="check the built-in polyhedra table")


def _euler(args: argparse.Namespace, ctx: Context) -> Outcome:
    if args.polyhedra:
        rows = [(p.name, p.v, p.e, p.f, check_polyhedron(p)) for p in POLYHEDRA.values()]
        lines = [f"{name}: {v} - {e} + {f} = {euler_characteristic(v, e, f)}" for name, v, e, f, _ in rows]
        return Outcome(lines, {name: ok for name, _, _, _, ok in rows})
    if len(args.counts) != 3:
        raise ValueError("euler needs exactly three counts V E F, or --polyhedra")
    return _single(euler_characteristic(*args.counts))


COMMANDS: dict[str, tuple[Callable[[argparse.ArgumentParser], None], Handler, str]] = {
    "count": (_configure_count, _count, "binomials, selections, multinomials and inclusion-exclusion"),
    "pascal": (_configure_pascal, _pascal, "rows of Pascal's triangle"),
    "derange": (_configure_derange, _derange, "derangement numbers"),
    "catalan": (_configure_catalan, _catalan, "Catalan numbers and Dyck paths"),
    "divisors": (_configure_divisors, _divisors, "divisor count, sum and Moebius function"),
    "poker": (_configure_poker, _poker, "five-card poker hand counts"),
    "seq": (_configure_seq, _seq, "named sequences and recurrences"),
    "solve-rec": (_configure_solve_rec, _solve_rec, "closed form of a constant-coefficient linear recurrence"),
    "series": (_configure_series, _series, "truncated power series and rational generating functions"),
    "change": (_configure_change, _change, "ways to pay an amount with a purse of coins"),
    "partitions": (_configure_partitions, _partitions, "integer partition counts"),
    "graph": (_configure_graph, _graph, "summary or adjacency matrix of a graph"),
    "walks": (_configure_walks, _walks, "walk counts, Eulerian walks and Hamiltonian cycles"),
    "tree": (_configure_tree, _tree, "tree counts and tree/permutation bijections"),
    "mst": (_configure_mst, _mst, "minimum spanning tree (Kruskal)"),
    "tsp": (_configure_tsp, _tsp, "tree-shortcut or exhaustive travelling salesperson tour"),
    "match": (_configure_match, _match, "matchings and Hall's condition"),
    "ramsey": (_configure_ramsey, _ramsey, "two-color Ramsey numbers by exhaustive search"),
    "color": (_configure_color, _color, "vertex colorings and the chromatic number"),
    "chrompoly": (_configure_chrompoly, _chrompoly, "chromatic polynomial by deletion-contraction"),
    "planarity": (_configure_planarity, _planarity, "edge-count tests for non-planarity"),
    "euler": (_configure_euler, _euler, "Euler characteristic v - e + f"),
}
