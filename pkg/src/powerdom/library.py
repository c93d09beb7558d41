"""Small builtin networks used throughout the docs and tests.

Each graph is stored as an explicit edge list with its published node
labels. ``ieee39`` is the 39-bus New England test system topology.
"""

from __future__ import annotations

from .errors import NotFoundError
from .graph import Graph

__all__ = ["builtin_graph", "BUILTIN_NAMES"]

_TADPOLE_EDGES = [
    ("v1", "v2"),
    ("v1", "v3"),
    ("v2", "v6"),
    ("v3", "v6"),
    ("v3", "v4"),
    ("v4", "v5"),
]

_ZIM_EDGES = [
    ("4", "5"),
    ("5", "9"),
    ("9", "10"),
    ("9", "11"),
    ("7", "9"),
    ("6", "9"),
    ("5", "6"),
    ("6", "7"),
    ("7", "8"),
    ("3", "7"),
    ("2", "3"),
    ("2", "6"),
    ("1", "5"),
    ("1", "2"),
    ("10", "11"),
]

_MUTATED_ZIM_EDGES = [
    ("14", "15"),
    ("13", "14"),
    ("4", "13"),
    ("4", "5"),
    ("5", "9"),
    ("9", "10"),
    ("10", "16"),
    ("16", "17"),
    ("17", "18"),
    ("18", "19"),
    ("11", "19"),
    ("9", "11"),
    ("7", "9"),
    ("6", "9"),
    ("5", "6"),
    ("6", "7"),
    ("7", "8"),
    ("8", "12"),
    ("3", "7"),
    ("2", "3"),
    ("2", "6"),
    ("1", "5"),
    ("1", "2"),
]

# A 5-node network whose nodes 1 and 2 both observe the rest on their own.
_FIG3_EDGES = [
    ("2", "3"),
    ("1", "2"),
    ("1", "3"),
    ("2", "5"),
    ("1", "4"),
]

_IEEE39_EDGES = [
    ("1", "2"),
    ("1", "39"),
    ("2", "3"),
    ("2", "25"),
    ("2", "30"),
    ("9", "39"),
    ("3", "4"),
    ("3", "18"),
    ("25", "26"),
    ("25", "37"),
    ("8", "9"),
    ("4", "5"),
    ("4", "14"),
    ("17", "18"),
    ("26", "27"),
    ("26", "28"),
    ("26", "29"),
    ("5", "6"),
    ("5", "8"),
    ("13", "14"),
    ("14", "15"),
    ("16", "17"),
    ("17", "27"),
    ("6", "7"),
    ("6", "11"),
    ("6", "31"),
    ("7", "8"),
    ("10", "13"),
    ("12", "13"),
    ("15", "16"),
    ("10", "11"),
    ("11", "12"),
    ("10", "32"),
    ("16", "19"),
    ("16", "21"),
    ("16", "24"),
    ("19", "20"),
    ("19", "33"),
    ("21", "22"),
    ("23", "24"),
    ("20", "34"),
    ("22", "23"),
    ("22", "35"),
    ("23", "36"),
    ("28", "29"),
    ("29", "38"),
]


def _numeric_labels(count: int) -> list:
    return [str(i) for i in range(1, count + 1)]


_BUILTINS = {
    "tadpole": (["v1", "v2", "v3", "v4", "v5", "v6"], _TADPOLE_EDGES),
    "zim": (_numeric_labels(11), _ZIM_EDGES),
    "mutated_zim": (_numeric_labels(19), _MUTATED_ZIM_EDGES),
    "fig3": (_numeric_labels(5), _FIG3_EDGES),
    "ieee39": (_numeric_labels(39), _IEEE39_EDGES),
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin_graph(name: str) -> Graph:
    """Return a builtin network by name; see BUILTIN_NAMES for choices."""
    try:
        labels, edges = _BUILTINS[name]
    except KeyError:
        raise NotFoundError(
            f"unknown builtin graph {name!r}; choices: {', '.join(BUILTIN_NAMES)}"
        ) from None
    return Graph(labels, edges)
