"""Crystal operators on multipartitions via the signature rule, and crystal
graph construction with DOT/JSON export.

The signature rule: list the addable (+) and removable (-) residue-i boxes in
a fixed box order, repeatedly cancel every '+' immediately left of a '-',
then act at the rightmost surviving '-' (lowering) or the leftmost surviving
'+' (raising).  The box order depends only on (component, row), never on the
shape itself, so orders are consistent along strings; both the ascending
default and its descending mirror are supported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .multipartition import (
    BoxCoord,
    Multicharge,
    Multipartition,
    add_box,
    addable_boxes,
    enumerate_multipartitions,
    remove_box,
    removable_boxes,
)
from .weight_lattice import AffineWeight, wt


class BoxOrder(enum.Enum):
    """Reading order of signature boxes: (component, row) ascending or the
    descending mirror."""

    ASC = "asc"
    DESC = "desc"

    def key(self, box: BoxCoord):
        if self is BoxOrder.ASC:
            return (box.comp, box.row, box.col)
        return (-box.comp, -box.row, -box.col)


@dataclass(frozen=True)
class SignatureReport:
    """Raw and reduced i-signature of one multipartition."""

    symbols: tuple[tuple[str, BoxCoord], ...]
    reduced: tuple[tuple[str, BoxCoord], ...]
    epsilon: int
    phi: int
    good_removable: BoxCoord | None
    good_addable: BoxCoord | None

    @property
    def word(self) -> str:
        return "".join(sign for sign, _ in self.symbols)

    @property
    def reduced_word(self) -> str:
        return "".join(sign for sign, _ in self.reduced)


def signature(
    i: int,
    mp: Multipartition,
    charge: Multicharge,
    order: BoxOrder = BoxOrder.ASC,
) -> SignatureReport:
    """Compute the i-signature of mp under the given box order."""
    marked = [("+", box) for box in addable_boxes(mp, charge, i)]
    marked += [("-", box) for box in removable_boxes(mp, charge, i)]
    marked.sort(key=lambda sb: order.key(sb[1]))

    stack: list[tuple[str, BoxCoord]] = []
    for sign, box in marked:
        if sign == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((sign, box))

    epsilon = sum(1 for sign, _ in stack if sign == "-")
    phi = len(stack) - epsilon
    good_removable = stack[epsilon - 1][1] if epsilon > 0 else None
    good_addable = stack[epsilon][1] if phi > 0 else None
    return SignatureReport(
        symbols=tuple(marked),
        reduced=tuple(stack),
        epsilon=epsilon,
        phi=phi,
        good_removable=good_removable,
        good_addable=good_addable,
    )


def crystal_e(
    i: int,
    mp: Multipartition,
    charge: Multicharge,
    order: BoxOrder = BoxOrder.ASC,
) -> Multipartition | None:
    """Remove the good removable box, or None when epsilon_i = 0."""
    sig = signature(i, mp, charge, order)
    if sig.good_removable is None:
        return None
    return remove_box(mp, sig.good_removable)


def crystal_f(
    i: int,
    mp: Multipartition,
    charge: Multicharge,
    order: BoxOrder = BoxOrder.ASC,
) -> Multipartition | None:
    """Add the good addable box, or None when phi_i = 0."""
    sig = signature(i, mp, charge, order)
    if sig.good_addable is None:
        return None
    return add_box(mp, sig.good_addable)


@dataclass(frozen=True)
class CrystalGraph:
    """All multipartitions of rank <= max_rank with their f-edges.

    Edges raise rank by exactly one; at most one incoming and one outgoing
    i-edge exists per node and residue.  An edge whose target would exceed
    max_rank is kept as a boundary mark instead of being dropped.
    """

    charge: Multicharge
    order: BoxOrder
    max_rank: int
    nodes: tuple[Multipartition, ...]
    weights: dict[Multipartition, AffineWeight]
    eps: dict[Multipartition, tuple[int, ...]]
    phi: dict[Multipartition, tuple[int, ...]]
    edges: tuple[tuple[Multipartition, int, Multipartition], ...]
    boundary: tuple[tuple[Multipartition, int, Multipartition], ...]

    def out_edge(self, mp: Multipartition, i: int) -> Multipartition | None:
        for a, j, b in self.edges:
            if a == mp and j == i:
                return b
        return None

    def to_json(self) -> dict:
        return {
            "nodes": [
                {
                    "mp": mp.to_lists(),
                    "wt": self.weights[mp].to_json(),
                    "eps": list(self.eps[mp]),
                    "phi": list(self.phi[mp]),
                }
                for mp in self.nodes
            ],
            "edges": [
                {"from": a.to_lists(), "i": i, "to": b.to_lists()}
                for a, i, b in self.edges
            ],
            "boundary": [
                {"from": a.to_lists(), "i": i, "to": b.to_lists()}
                for a, i, b in self.boundary
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for mp in self.nodes:
            label = f"{mp.serialize()}\\nwt={self.weights[mp]}"
            lines.append(f'  "{mp.serialize()}" [label="{label}"];')
        for a, i, b in self.edges:
            lines.append(f'  "{a.serialize()}" -> "{b.serialize()}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(
    charge: Multicharge, max_rank: int, order: BoxOrder = BoxOrder.ASC
) -> CrystalGraph:
    """Build the crystal on all multipartitions of rank <= max_rank."""
    if max_rank < 0:
        raise ValueError("max_rank must be nonnegative")
    nodes: list[Multipartition] = []
    for n in range(max_rank + 1):
        nodes.extend(enumerate_multipartitions(n, charge.level))

    weights: dict[Multipartition, AffineWeight] = {}
    eps: dict[Multipartition, tuple[int, ...]] = {}
    phi: dict[Multipartition, tuple[int, ...]] = {}
    edges: list[tuple[Multipartition, int, Multipartition]] = []
    boundary: list[tuple[Multipartition, int, Multipartition]] = []

    for mp in nodes:
        weights[mp] = wt(mp, charge)
        e_list = []
        p_list = []
        for i in range(charge.e):
            sig = signature(i, mp, charge, order)
            e_list.append(sig.epsilon)
            p_list.append(sig.phi)
            if sig.good_addable is not None:
                target = add_box(mp, sig.good_addable)
                if target.rank <= max_rank:
                    edges.append((mp, i, target))
                else:
                    boundary.append((mp, i, target))
        eps[mp] = tuple(e_list)
        phi[mp] = tuple(p_list)

    return CrystalGraph(
        charge=charge,
        order=order,
        max_rank=max_rank,
        nodes=tuple(nodes),
        weights=weights,
        eps=eps,
        phi=phi,
        edges=tuple(edges),
        boundary=tuple(boundary),
    )


def hw_elements(
    graph: CrystalGraph,
) -> dict[tuple[int, AffineWeight], list[Multipartition]]:
    """Nodes with no defined raising operator, grouped by (rank, weight)."""
    out: dict[tuple[int, AffineWeight], list[Multipartition]] = {}
    for mp in graph.nodes:
        if all(v == 0 for v in graph.eps[mp]):
            out.setdefault((mp.rank, graph.weights[mp]), []).append(mp)
    for members in out.values():
        members.sort(key=lambda mp: mp.serialize())
    return out
