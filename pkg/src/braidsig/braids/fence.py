"""Fence diagrams of positive braids and the Bennequin count.

A fence diagram replaces every crossing of a positive braid by a horizontal
bar between two vertical strand lines. The resulting planar graph is a
deformation retract of the fiber surface of the closure, so its cycle rank is
the first Betti number b1 = l - b + c.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

import networkx as nx

from .words import BraidWord, require_positive


class Bar(NamedTuple):
    """A horizontal bar in ``column`` at word position ``time``."""

    column: int
    time: int


@dataclass(frozen=True)
class FenceDiagram:
    strands: int
    bars: tuple[Bar, ...]

    @property
    def length(self) -> int:
        return len(self.bars)

    def occurrences(self, column: int) -> list[int]:
        """Times of the bars in ``column``, increasing."""
        return [bar.time for bar in self.bars if bar.column == column]

    def graph(self) -> nx.Graph:
        """Planar graph of the diagram.

        Vertices are bar endpoints ``(strand, time)``; a strand without bars
        contributes the single vertex ``(strand, -1)``. Edges are the bars and
        the strand pieces between consecutive endpoints.
        """
        g = nx.Graph()
        stops: dict[int, list[int]] = {s: [] for s in range(1, self.strands + 1)}
        for bar in self.bars:
            left, right = (bar.column, bar.time), (bar.column + 1, bar.time)
            g.add_edge(left, right, kind="bar")
            stops[bar.column].append(bar.time)
            stops[bar.column + 1].append(bar.time)

        for strand, times in stops.items():
            if not times:
                g.add_node((strand, -1))
                continue
            times.sort()
            for lower, upper in zip(times, times[1:]):
                g.add_edge((strand, lower), (strand, upper), kind="strand")
        return g

    def graph_components(self) -> int:
        return nx.number_connected_components(self.graph())

    def graph_betti(self) -> int:
        """Cycle rank E - V + C of :meth:`graph`."""
        g = self.graph()
        return (
            g.number_of_edges()
            - g.number_of_nodes()
            + nx.number_connected_components(g)
        )


def fence_diagram(word: BraidWord) -> FenceDiagram:
    """One bar per letter of a positive word, in word order."""
    require_positive(word)
    return FenceDiagram(
        word.strands,
        tuple(Bar(letter.index, t) for t, letter in enumerate(word.letters)),
    )


def betti_and_c(word: BraidWord) -> tuple[int, int]:
    """(b1, c) of the closure of a positive word by Bennequin's formula."""
    require_positive(word)
    unused = sum(1 for count in word.generator_counts().values() if count == 0)
    c = 1 + unused
    return word.length - word.strands + c, c


@dataclass(frozen=True)
class LinkInvariants:
    """First Betti number, split components, signature and nullity."""

    b1: int
    c: int
    sigma: int
    nullity: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "b1": self.b1,
            "c": self.c,
            "sigma": self.sigma,
            "nullity": self.nullity,
        }
