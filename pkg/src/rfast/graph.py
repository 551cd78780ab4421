"""Directed topologies for the pull/push protocol pair.

A single run uses two digraphs: ``gw`` carries decision-variable traffic
(pull side, row-stochastic weights) and ``ga`` carries tracking traffic
(push side, column-stochastic weights).  The protocol is well posed as
long as the set of nodes that reach everyone in ``gw`` intersects the set
of nodes that reach everyone in the transpose of ``ga``.

Edges are ordered pairs ``(j, i)`` meaning node ``i`` receives from node
``j``.  Self-loops are never stored; self-weights live on the matrix
diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import AssumptionViolation, ValidationError

__all__ = [
    "Digraph",
    "TopologyPair",
    "roots",
    "transpose",
    "make_topology",
    "validate_assumption2",
    "RootReport",
]

PRESETS = ("binary_tree", "line", "directed_ring")


@dataclass(frozen=True)
class Digraph:
    """Immutable directed graph on nodes ``0..n-1``.

    ``edges`` holds ordered pairs ``(j, i)``: i receives from j.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"node count must be >= 1, got {self.n}")
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        seen = set()
        for j, i in self.edges:
            if not (0 <= j < self.n and 0 <= i < self.n):
                raise ValidationError(f"edge ({j},{i}) out of range for n={self.n}")
            if j == i:
                raise ValidationError(f"self-loop ({j},{i}) must not be stored")
            if (j, i) in seen:
                raise ValidationError(f"duplicate edge ({j},{i})")
            seen.add((j, i))

    @cached_property
    def _in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for j, i in self.edges:
            adj[i].append(j)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for j, i in self.edges:
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def in_neighbors(self, i: int) -> tuple[int, ...]:
        """Nodes that send to ``i``."""
        return self._in_adj[i]

    def out_neighbors(self, i: int) -> tuple[int, ...]:
        """Nodes that receive from ``i``."""
        return self._out_adj[i]


def transpose(g: Digraph) -> Digraph:
    """The same graph with every edge reversed."""
    return Digraph(g.n, tuple((i, j) for j, i in g.edges))


def roots(g: Digraph) -> frozenset[int]:
    """Nodes from which every node is reachable by directed paths.

    Computed by forward breadth-first search from each vertex; the empty
    set is a valid result.
    """
    out = g._out_adj
    found = []
    for v in range(g.n):
        seen = bytearray(g.n)
        seen[v] = 1
        stack = [v]
        count = 1
        while stack:
            u = stack.pop()
            for w in out[u]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        if count == g.n:
            found.append(v)
    return frozenset(found)


@dataclass(frozen=True)
class TopologyPair:
    """The two directed subgraphs with their root sets.

    ``roots_w`` are the nodes reaching everyone in ``gw``; ``roots_at``
    those reaching everyone in the transpose of ``ga``.  Their
    intersection ``common_roots`` must be nonempty for a valid run.
    """

    gw: Digraph
    ga: Digraph
    roots_w: frozenset[int] = field(default=frozenset())
    roots_at: frozenset[int] = field(default=frozenset())
    common_roots: frozenset[int] = field(default=frozenset())
    r: int = 0

    @staticmethod
    def from_graphs(gw: Digraph, ga: Digraph) -> "TopologyPair":
        if gw.n != ga.n:
            raise ValidationError(f"graph sizes differ: {gw.n} vs {ga.n}")
        rw = roots(gw)
        ra = roots(transpose(ga))
        common = rw & ra
        return TopologyPair(gw, ga, rw, ra, common, len(common))

    @property
    def n(self) -> int:
        return self.gw.n


@dataclass(frozen=True)
class RootReport:
    """Outcome of the common-root check."""

    ok: bool
    roots_w: frozenset[int]
    roots_at: frozenset[int]
    common_roots: frozenset[int]

    def __str__(self) -> str:
        fmt = lambda s: "{" + ",".join(str(v) for v in sorted(s)) + "}"
        return (
            f"roots_w={fmt(self.roots_w)} roots_at={fmt(self.roots_at)} "
            f"common={fmt(self.common_roots)}"
        )


def validate_assumption2(tp: TopologyPair) -> RootReport:
    """Recompute both root sets and require a common root.

    Raises :class:`AssumptionViolation` naming both root sets when the
    intersection is empty.
    """
    rw = roots(tp.gw)
    ra = roots(transpose(tp.ga))
    common = rw & ra
    report = RootReport(bool(common), rw, ra, common)
    if not common:
        raise AssumptionViolation(
            "pull and push subgraphs share no common root: "
            f"roots_w={sorted(rw)}, roots_at={sorted(ra)}"
        )
    return report


def _heap_tree_edges(n: int) -> tuple[tuple[int, int], ...]:
    # children of i sit at 2i+1 and 2i+2, oriented away from the root 0
    edges = []
    for i in range(n):
        for c in (2 * i + 1, 2 * i + 2):
            if c < n:
                edges.append((i, c))
    return tuple(edges)


def make_topology(preset: str, n: int) -> TopologyPair:
    """Build one of the preset topology pairs.

    ``binary_tree`` and ``line`` orient edges away from node 0 in ``gw``
    and reverse them in ``ga``; ``directed_ring`` uses the same ring for
    both sides.  Any ``n >= 1`` is accepted.
    """
    if n < 1:
        raise ValidationError(f"preset topology needs n >= 1, got {n}")
    if preset == "binary_tree":
        fwd = _heap_tree_edges(n)
    elif preset == "line":
        fwd = tuple((i, i + 1) for i in range(n - 1))
    elif preset == "directed_ring":
        fwd = tuple((i, (i + 1) % n) for i in range(n)) if n > 1 else ()
    else:
        raise ValidationError(f"unknown topology preset {preset!r}")

    gw = Digraph(n, fwd)
    if preset == "directed_ring":
        ga = gw
    else:
        ga = transpose(gw)
    tp = TopologyPair.from_graphs(gw, ga)
    validate_assumption2(tp)
    return tp
