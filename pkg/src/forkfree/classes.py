"""Named hereditary graph classes, each defined by forbidden induced subgraphs.

Every class here is closed under taking induced subgraphs, which is what
makes prefix pruning during enumeration and size-ordered counterexample
search sound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .patterns import (
    PatternId,
    find_odd_hole,
    is_odd_balloon_free,
    match_induced,
    pattern_graph,
)


@dataclass(frozen=True)
class GraphClass:
    name: str
    forbidden: tuple[PatternId, ...] = ()
    no_odd_balloon: bool = False
    no_odd_hole: bool = False

    def __call__(self, g: Graph) -> bool:
        for pid in self.forbidden:
            if match_induced(g, pattern_graph(pid)) is not None:
                return False
        if self.no_odd_hole and find_odd_hole(g) is not None:
            return False
        if self.no_odd_balloon and not is_odd_balloon_free(g):
            return False
        return True


def _fork_and(*names: str) -> tuple[PatternId, ...]:
    return (PatternId("fork"),) + tuple(PatternId(n) for n in names)


CLASSES: dict[str, GraphClass] = {
    "all": GraphClass("all"),
    "fork": GraphClass("fork", _fork_and()),
    "fork-gem": GraphClass("fork-gem", _fork_and("gem")),
    "fork-butterfly": GraphClass("fork-butterfly", _fork_and("butterfly")),
    "fork-odd-balloon": GraphClass("fork-odd-balloon", _fork_and(), no_odd_balloon=True),
    "fork-P6": GraphClass("fork-P6", _fork_and("P6")),
    "fork-bull": GraphClass("fork-bull", _fork_and("bull")),
    "fork-co-dart": GraphClass("fork-co-dart", _fork_and("co-dart")),
    "fork-hammer": GraphClass("fork-hammer", _fork_and("hammer")),
    "fork-odd-hole": GraphClass("fork-odd-hole", _fork_and(), no_odd_hole=True),
}

# every odd balloon contains each of these, so these classes sit inside fork-odd-balloon
COROLLARY_CLASSES = ("fork-P6", "fork-co-dart", "fork-bull", "fork-hammer", "fork-odd-hole")


def get_class(name: str) -> GraphClass:
    try:
        return CLASSES[name]
    except KeyError:
        raise KeyError(f"unknown class {name!r}; choose from {', '.join(CLASSES)}") from None
