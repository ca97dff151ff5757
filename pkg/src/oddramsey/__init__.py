"""Color-parity constructions in edge-colored graphs.

Library surface: core value types (:mod:`oddramsey.colored_graph`),
Hamilton machinery (:mod:`oddramsey.hamilton`), even-chromatic Hamilton
cycles under 2-colorings (:mod:`oddramsey.parity_switch`), unique-color-free
Hamilton cycles (:mod:`oddramsey.unique_finder`), even-chromatic complete
bipartite subgraphs (:mod:`oddramsey.bipartite_even`), and explicit
colorings plus exact oracles (:mod:`oddramsey.constructions`).
"""

from .colored_graph import (
    CycleOrPath,
    Edge,
    EdgeColoring,
    ParityCensus,
    SimpleGraph,
    edge,
    instance_from_json,
    instance_to_json,
    min_degree,
    parity_census,
    symmetric_difference,
)

__all__ = [
    "CycleOrPath",
    "Edge",
    "EdgeColoring",
    "ParityCensus",
    "SimpleGraph",
    "edge",
    "instance_from_json",
    "instance_to_json",
    "min_degree",
    "parity_census",
    "symmetric_difference",
]

__version__ = "0.1.0"
