import random
from fractions import Fraction

import pytest

from errors.errors import GraphFormatError
from graph.graph import Graph, cycle, hamster_cage, konigsberg, make_graph, petersen
from graph.storage import adjacency_matrix, format_graph_text, format_matrix, from_adjacency, parse_graph_text


def _random_graph(rng: random.Random) -> Graph:
    n = rng.randint(0, 8)
    multi, loops = rng.random() < 0.5, rng.random() < 0.5
    edges = set() if not multi else []
    for _ in range(rng.randint(0, 12) if n else 0):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        if multi:
            edges.append((u, v))
        else:
            edges.add((min(u, v), max(u, v)))
    return make_graph(n, edges, allow_multi=multi, allow_loops=loops)


class TestAdjacency:
    def test_konigsberg_multiplicities(self):
        matrix = adjacency_matrix(konigsberg())
        assert matrix == [[0, 2, 2, 1], [2, 0, 0, 1], [2, 0, 0, 1], [1, 1, 1, 0]]
        assert from_adjacency(matrix) == konigsberg()

    def test_loops(self):
        G = make_graph(2, [(0, 0), (0, 1)], allow_loops=True)
        assert adjacency_matrix(G) == [[1, 1], [1, 0]]
        assert from_adjacency(adjacency_matrix(G)) == G

    def test_rejects_bad_matrices(self):
        with pytest.raises(ValueError):
            from_adjacency([[0, 1], [0, 0]])
        with pytest.raises(ValueError):
            from_adjacency([[0, 1]])

    def test_random_round_trips(self):
        rng = random.Random(11)
        for _ in range(100):
            G = _random_graph(rng)
            assert from_adjacency(adjacency_matrix(G)).edges == G.edges

    def test_format(self):
        assert format_matrix(adjacency_matrix(cycle(3))) == "0 1 1\n1 0 1\n1 1 0"


class TestTextFormat:
    @pytest.mark.parametrize("G", [petersen(), konigsberg(), hamster_cage(), make_graph(3, [])])
    def test_round_trip(self, G):
        parsed, weights = parse_graph_text(format_graph_text(G))
        assert parsed == G
        assert weights is None

    def test_random_round_trips(self):
        rng = random.Random(23)
        for _ in range(100):
            G = _random_graph(rng)
            assert parse_graph_text(format_graph_text(G)) == (G, None)
            weights = [Fraction(rng.randint(0, 40), rng.randint(1, 9)) for _ in G.edges]
            parsed, parsed_weights = parse_graph_text(format_graph_text(G, weights))
            assert parsed == G
            assert parsed_weights == (weights or None)

    def test_weights_follow_their_edges(self):
        text = "# a triangle\n3 3\n\n1 2 1/2\n0 1 3\n2 0 0.25\n"
        G, weights = parse_graph_text(text)
        assert G.edges == ((0, 1), (0, 2), (1, 2))
        assert weights == [Fraction(3), Fraction(1, 4), Fraction(1, 2)]
        assert format_graph_text(G, weights) == "3 3\n0 1 3\n0 2 1/4\n1 2 1/2\n"

    def test_header_flags(self):
        G, _ = parse_graph_text("2 2 multi loops\n0 0\n0 0\n")
        assert G.allow_multi and G.allow_loops
        assert G.degree(0) == 4

    @pytest.mark.parametrize(
        "text, line",
        [
            ("", 1),
            ("3\n", 1),
            ("3 x\n", 1),
            ("3 1 weighted\n0 1\n", 1),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 5\n", 2),
            ("3 1\n0\n", 2),
            ("3 1\n0 1 abc\n", 2),
            ("3 2\n0 1 2\n1 2\n", 2),
            ("3 1\n1 1\n", 1),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph_text(text)
        assert exc.value.line == line
        assert str(exc.value).startswith(f"line {line}:")
