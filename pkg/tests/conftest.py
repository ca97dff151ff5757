import pytest

from oddramsey.colored_graph import EdgeColoring, SimpleGraph


def mono_coloring(n: int, color: int = 1, r: int = 1) -> EdgeColoring:
    host = SimpleGraph.complete(n)
    return EdgeColoring(host, r, {e: color for e in host.edges()})


def coloring_with(n: int, r: int, overrides: dict, base: int = 1) -> EdgeColoring:
    """Complete-host coloring: ``base`` everywhere except ``overrides``."""
    from oddramsey.colored_graph import edge

    host = SimpleGraph.complete(n)
    assignment = {e: base for e in host.edges()}
    for (u, v), c in overrides.items():
        assignment[edge(u, v)] = c
    return EdgeColoring(host, r, assignment)


@pytest.fixture
def k6_mono():
    return mono_coloring(6)
