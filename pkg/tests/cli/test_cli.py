import io
import json
import random
from fractions import Fraction
from unittest.mock import patch

import pytest

from cli.cli import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE, jsonable, main, named_graph, read_graph, run
from cli.commands import format_tree
from coloring.planarity import PlanarityVerdict
from errors.errors import GraphFormatError
from graph.graph import complete_bipartite, make_graph, petersen, platonic
from graph.storage import format_graph_text
from graph.trees import BinaryTree

DORM_TEXT = "8 7\n0 7\n1 5\n2 4\n2 5\n2 6\n3 5\n3 7\n"
SQUARE_TEXT = "4 6\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n0 2 3/2\n1 3 3/2\n"


def invoke(*argv: str, stdin: str = "") -> tuple[int, str, str]:
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr, stdin=io.StringIO(stdin))
    return code, stdout.getvalue(), stderr.getvalue()


def lines_of(*argv: str, stdin: str = "") -> list[str]:
    code, out, err = invoke(*argv, stdin=stdin)
    assert code == EXIT_OK, err
    return out.splitlines()


class TestHelpers:
    def test_jsonable(self):
        assert jsonable(Fraction(3, 4)) == "3/4"
        assert jsonable(Fraction(4, 2)) == "2"
        assert jsonable(complex(1, -2)) == {"real": 1.0, "imag": -2.0}
        assert jsonable(PlanarityVerdict.INCONCLUSIVE) == "Inconclusive"
        assert jsonable({3, 1, 2}) == [1, 2, 3]
        assert jsonable({"a": (Fraction(1, 2), None, True)}) == {"a": ["1/2", None, True]}

    def test_named_graphs(self):
        assert named_graph("petersen") == petersen()
        assert named_graph("Bipartite:3,3") == complete_bipartite(3, 3)
        assert named_graph("cube") == platonic("cube")
        for bad in ("moebius", "complete:a", "cycle:3,4", "petersen:2"):
            with pytest.raises(ValueError):
                named_graph(bad)

    def test_read_graph_names_the_source(self):
        with pytest.raises(GraphFormatError) as exc:
            read_graph("-", io.StringIO("3 2\n0 1\n"))
        assert str(exc.value) == "line 2: -: header announces 2 edges, found 1"
        with pytest.raises(ValueError):
            read_graph("/nonexistent/graph.txt")

    def test_read_graph_file(self, tmp_path):
        source = tmp_path / "square.txt"
        source.write_text(SQUARE_TEXT, encoding="utf-8")
        G, weights = read_graph(str(source))
        assert G.edge_count == 6
        assert weights[1] == Fraction(3, 2)

    def test_read_graph_round_trips(self, tmp_path):
        rng = random.Random(31)
        for index in range(100):
            n = rng.randint(1, 8)
            pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 10))]
            G = make_graph(n, pairs, allow_multi=True, allow_loops=True)
            weights = [Fraction(rng.randint(1, 30), rng.randint(1, 6)) for _ in G.edges] or None
            text = format_graph_text(G, weights)
            assert read_graph("-", io.StringIO(text)) == (G, weights)
            source = tmp_path / f"graph{index}.txt"
            source.write_text(text, encoding="utf-8")
            assert read_graph(str(source)) == (G, weights)

    def test_format_tree(self):
        tree = BinaryTree(1, BinaryTree(3, BinaryTree(4), None), BinaryTree(2, None, BinaryTree(5)))
        assert format_tree(tree) == "1(3(4 -) 2(- 5))"
        assert format_tree(None) == "-"


class TestCountingCommands:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (("count", "choose", "90", "5"), "43949268"),
            (("count", "choose", "107", "4"), "5160610"),
            (("count", "select", "5", "3", "--mode", "ordered/repeats"), "125"),
            (("count", "multinomial", "2", "1", "1"), "12"),
            (("count", "anagrams", "banana"), "60"),
            (("count", "generalized", "1/2", "2"), "-1/8"),
            (("derange", "4"), "9"),
            (("catalan", "12"), "208012"),
            (("seq", "fibonacci", "17"), "1597"),
            (("seq", "stairs", "9", "--steps", "1,2,3"), "149"),
            (("seq", "hanoi", "5"), "31"),
            (("change", "--coins", "1x6,5x2,10x4,25x3", "--amount", "100"), "5"),
            (("change", "--coins", "1xinf,5xinf", "--amount", "10", "--order", "10"), "3"),
            (("partitions", "5"), "7"),
            (("euler", "8", "12", "6"), "2"),
            (("ramsey", "3", "3", "--cap", "7"), "6"),
        ],
    )
    def test_single_values(self, argv, expected):
        assert lines_of(*argv) == [expected]

    def test_pascal(self):
        assert lines_of("pascal", "4") == ["1 4 6 4 1"]
        assert lines_of("pascal", "4", "--mod", "2") == ["1 0 0 0 1"]
        assert lines_of("pascal", "2", "--rows") == ["1", "1 1", "1 2 1"]

    def test_divisors(self):
        assert lines_of("divisors", "12") == [
            "factorization: 2^2*3",
            "count: 6",
            "sum: 28",
            "mobius: 0",
            "divisors: 1 2 3 4 6 12",
        ]

    def test_poker_table(self):
        out = lines_of("poker")
        assert out[0] == "royal_flush 4"
        assert out[-1] == "total 2598960"

    def test_series(self):
        assert lines_of("series", "catalan", "--order", "4") == ["1 + 1*x + 2*x^2 + 5*x^3 + 14*x^4 + O(x^5)"]
        assert lines_of("series", "partial", "--num", "0,1", "--den", "1,-3,2") == ["-1 / (1 - 1*x)", "1 / (1 - 2*x)"]
        assert lines_of("series", "expand", "--num", "3", "--den", "1,-2", "--order", "2") == ["3 + 6*x + 12*x^2 + O(x^3)"]

    def test_solve_rec(self):
        out = lines_of("solve-rec", "--coeffs", "5,-6", "--init", "0,1", "--start", "0", "--n", "4")
        assert out[-2] == "agrees with iteration through n = 40: yes"
        assert out[-1].startswith("a_4 = 65 (closed form 65")

    def test_ramsey_witness(self):
        out = lines_of("ramsey", "3", "3", "--witness", "5")
        assert len(out) == 10
        assert lines_of("ramsey", "3", "3", "--witness", "6") == ["none"]


class TestGraphCommands:
    def test_summary_from_stdin(self):
        assert lines_of("graph", stdin="3 2\n0 1\n1 2\n") == [
            "vertices 3",
            "edges 2",
            "degrees 1 2 1",
            "components 1",
            "bipartite yes",
        ]

    def test_matrix(self):
        assert lines_of("graph", "--named", "cycle:3", "--matrix") == ["0 1 1", "1 0 1", "1 1 0"]

    def test_walks(self):
        assert lines_of("walks", "--named", "hamster", "--count", "0", "3", "3") == ["2"]
        assert lines_of("walks", "--named", "konigsberg", "--euler") == ["NoEulerianWalk"]
        out = lines_of("walks", "--named", "complete:5", "--euler")
        assert out[0] == "ClosedWalk"
        assert len(out[1].split()) == 11
        assert lines_of("walks", "--named", "petersen", "--hamilton") == ["none"]

    def test_trees(self):
        assert lines_of("tree", "cayley", "5") == ["125"]
        assert lines_of("tree", "tournament", "5") == ["1680"]
        assert lines_of("tree", "increasing", "3,1,2") == ["1(3 2)"]
        assert lines_of("tree", "bst", "5,3,8,4") == ["5(3(- 4) 8)"]
        assert len(lines_of("tree", "labeled", "4")) == 16
        assert lines_of("tree", "check", "--named", "path:4") == ["yes"]

    def test_mst_and_tsp(self):
        assert lines_of("mst", stdin=SQUARE_TEXT) == ["0 1 1", "0 3 1", "1 2 1", "cost 3"]
        assert lines_of("tsp", stdin=SQUARE_TEXT) == ["0 1 2 3 0", "cost 4"]
        assert lines_of("tsp", "--exact", stdin=SQUARE_TEXT) == ["0 1 2 3 0", "cost 4"]

    def test_tsp_needs_weights(self):
        code, _, err = invoke("tsp", "--named", "complete:4")
        assert code == EXIT_DOMAIN_ERROR
        assert "weighted" in err

    def test_matching(self):
        assert lines_of("match", "--named", "bipartite:20,21")[-1] == "size 20"
        assert lines_of("match", "--named", "path:4", "--greedy") == ["0 1", "2 3", "size 2"]
        assert lines_of("match", "--hall", "--left", "0,1,2,3", stdin=DORM_TEXT) == ["0 1 3", "neighborhood 5 7"]

    def test_coloring(self):
        assert lines_of("color", "--named", "petersen")[0] == "colors 3"
        assert lines_of("color", "--named", "complete:4", "--k", "3") == ["none"]
        assert lines_of("chrompoly", "--named", "cycle:4") == ["[0, -3, 6, -4, 1]"]
        assert lines_of("chrompoly", "--named", "cycle:4", "--at", "3") == ["18 (brute force 18)"]

    def test_planarity(self):
        assert lines_of("planarity", "--named", "complete:5") == [
            "edge bound ViolatesBound",
            "bipartite bound Inconclusive",
        ]
        assert lines_of("planarity", "--named", "bipartite:3,3") == [
            "edge bound Inconclusive",
            "bipartite bound ViolatesBound",
        ]

    def test_polyhedra(self):
        out = lines_of("euler", "--polyhedra")
        assert len(out) == 9
        assert "soccer ball: 60 - 90 + 32 = 2" in out


class TestOutputAndExitCodes:
    def test_json(self):
        code, out, _ = invoke("--json", "count", "choose", "90", "5")
        assert code == EXIT_OK
        assert json.loads(out) == {"command": "count", "result": 43949268}

    def test_json_exact_rationals(self):
        _, out, _ = invoke("--json", "series", "partial", "--num", "0,1", "--den", "1,-3,2")
        assert json.loads(out)["result"] == [{"weight": "-1", "root": "1"}, {"weight": "1", "root": "2"}]

    def test_json_graph_summary(self):
        _, out, _ = invoke("--json", "graph", "--named", "konigsberg")
        result = json.loads(out)["result"]
        assert result["degrees"] == [5, 3, 3, 3]
        assert result["multi"] is True
        assert result["bipartite"] is False

    def test_domain_errors(self):
        code, out, err = invoke("divisors", "0")
        assert code == EXIT_DOMAIN_ERROR
        assert out == ""
        assert err.startswith("error: ")
        assert invoke("walks", "--named", "konigsberg", "--hamilton")[0] == EXIT_OK
        assert invoke("graph", stdin="3 2\n0 1\n")[0] == EXIT_DOMAIN_ERROR
        assert invoke("euler", "1", "2")[0] == EXIT_DOMAIN_ERROR
        assert invoke("--workers", "0", "ramsey", "3", "3")[0] == EXIT_DOMAIN_ERROR
        assert invoke("walks", "--named", "complete:3", "--count", "5", "0", "1")[0] == EXIT_DOMAIN_ERROR
        assert invoke("walks", "--named", "complete:3", "--count", "0", "-1", "1")[0] == EXIT_DOMAIN_ERROR

    def test_usage_errors(self):
        assert invoke("frobnicate")[0] == EXIT_USAGE
        assert invoke("count", "choose", "ninety", "5")[0] == EXIT_USAGE
        assert invoke()[0] == EXIT_USAGE

    def test_usage_errors_go_to_the_given_stderr(self, capsys):
        code, out, err = invoke("count", "choose", "ninety", "5")
        assert code == EXIT_USAGE
        assert out == ""
        assert "usage: combi count choose" in err
        assert "invalid int value" in err
        assert capsys.readouterr().err == ""

    def test_help(self, capsys):
        code, out, _ = invoke("--help")
        assert code == EXIT_OK
        assert out.startswith("usage: combi")
        assert capsys.readouterr().out == ""

    def test_repeat_runs_are_identical(self):
        argv = ("--json", "match", "--named", "bipartite:4,5")
        assert invoke(*argv) == invoke(*argv)

    def test_parallel_workers(self):
        assert lines_of("--workers", "2", "ramsey", "3", "3") == ["6"]
        assert lines_of("--workers", "2", "tsp", "--exact", stdin=SQUARE_TEXT) == ["0 1 2 3 0", "cost 4"]

    def test_main_exits_with_run_code(self):
        with patch("cli.cli.sys.argv", ["combi", "count", "factorial", "5"]):
            with pytest.raises(SystemExit) as exc:
                main()
        assert exc.value.code == EXIT_OK
