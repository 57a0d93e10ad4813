import itertools

import networkx as nx
import pytest

from rainbowconn.graph import Graph

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {name}" + (f" :: {detail}" if detail else "")
    print(line)
    _ACCEPTANCE.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}" + (f" :: {detail}" if detail else ""))


def to_graph(nxg: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(nxg.nodes))}
    return Graph.from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in nxg.edges])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def connected_graphs(max_vertices: int, min_vertices: int = 2) -> list[Graph]:
    """Every connected graph on ``min..max`` vertices up to isomorphism (max 7)."""
    return [
        to_graph(h)
        for h in nx.graph_atlas_g()
        if min_vertices <= h.number_of_nodes() <= max_vertices and nx.is_connected(h)
    ]


class PathOracle:
    """Naive rainbow checks by listing every simple path / geodesic with networkx."""

    def __init__(self, g: Graph):
        self.g = g
        h = to_nx(g)
        self.simple = {}
        self.shortest = {}
        for u, v in itertools.combinations(range(g.vertex_count), 2):
            paths = sorted(nx.all_simple_paths(h, u, v), key=len)
            self.simple[(u, v)] = [self._edges(p) for p in paths]
            self.shortest[(u, v)] = [self._edges(p) for p in nx.all_shortest_paths(h, u, v)]

    def _edges(self, path):
        return tuple(self.g.index_of(x, y) for x, y in zip(path, path[1:]))

    @staticmethod
    def _rainbow(colors, edge_ids):
        seen = {colors[i] for i in edge_ids}
        return len(seen) == len(edge_ids)

    def first_failure(self, colors, strong: bool):
        table = self.shortest if strong else self.simple
        for pair in sorted(table):
            if not any(self._rainbow(colors, p) for p in table[pair]):
                return pair
        return None


@pytest.fixture(scope="session")
def graphs_upto5():
    return connected_graphs(5)
