"""State enumeration and partition functions for lattices and open diagrams.

Two evaluation engines live here. ``enumerate_states`` walks a closed
U-turn lattice row by row, propagating spins from the fixed boundary, and
``partition_function`` sums the state weights (optionally split by the
per-pair charge residues). ``NodeDiagram`` is the open counterpart used by
the braid identities: an arbitrary arrangement of grid, bend, and crossing
vertices joined by named edges, where horizontal edges carry a decoration
in [0, n) next to their spin and any edge left unfixed is summed over.

Decorations on an open diagram are enumerated freely; consistency along a
line is enforced by the vertex weights themselves (a grid vertex weighs
zero unless its two horizontal decorations satisfy the charge propagation
rule, and the bend and crossing tables constrain decorations likewise).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product

from .model import (
    GRID_CONFIGS,
    MINUS,
    PLUS,
    SPINS,
    GridKind,
    IceState,
    LatticeSpec,
    _flip_bend,
    compute_charges,
    left_residues,
)
from .ring import Ring
from .weights import (
    bend_weight,
    grid_weight,
    grid_weight_decorated,
    modified_grid_weight_decorated,
    modified_r_denominator,
    modified_r_weight,
    r_weight,
)

_SPIN_ORD = {PLUS: 0, MINUS: 1}

#: Choices of (right, bottom) spins admitted by (top, left), in canonical
#: order ('+' before '-', right edge first).
_TL_OPTIONS = {
    (PLUS, PLUS): ((PLUS, PLUS),),
    (MINUS, MINUS): ((MINUS, MINUS),),
    (MINUS, PLUS): ((PLUS, MINUS), (MINUS, PLUS)),
    (PLUS, MINUS): ((PLUS, MINUS), (MINUS, PLUS)),
}


def _state_key(state):
    return tuple(
        tuple(_SPIN_ORD[s] for s in row)
        for row in state.v_spins + state.h_spins)


def enumerate_states(spec):
    """All admissible states of the lattice, in a canonical order.

    States are produced by row propagation from the top boundary (each
    vertex's right and bottom spins are determined, up to the six-vertex
    branching, by its top and left spins) and sorted lexicographically by
    their spins with '+' before '-'.
    """
    states = list(_search(spec))
    states.sort(key=_state_key)
    return states


def _search(spec):
    cols = spec.cols

    def fill(vtop, hrow, vbot):
        x = len(vbot)
        if x == cols:
            yield hrow, vbot
            return
        for right, bottom in _TL_OPTIONS[(vtop[x], hrow[x])]:
            yield from fill(vtop, hrow + (right,), vbot + (bottom,))

    def rows(k, vtop, h_acc, v_acc):
        if k == spec.rows:
            if all(s == PLUS for s in vtop):
                yield IceState(spec, tuple(h_acc), tuple(v_acc))
            return
        for hrow, vbot in fill(vtop, (PLUS,), ()):
            # The two edges meeting at a bend carry opposite spins.
            if k % 2 == 1 and h_acc[-1][cols] == hrow[cols]:
                continue
            yield from rows(k + 1, vbot, h_acc + [hrow], v_acc + [vbot])

    top = spec.top_boundary()
    yield from rows(0, top, [], [top])


def state_weight(spec, state, variant="standard", ring=None):
    """Product of all grid and bend weights of one state.

    Under the "g_doubled" variant the grid weights of every interchanged
    ("gd") pair double their charge argument; bends and default pairs are
    unaffected.
    """
    if ring is None:
        ring = Ring(spec.r, spec.n)
    charges = compute_charges(spec, state)
    w = ring.one()
    for k in range(spec.rows):
        kind = spec.row_kind(k)
        doubled = variant == "g_doubled" and spec.row_order[k // 2] == "gd"
        row_variant = "g_doubled" if doubled else "standard"
        row_charges = charges.h_edges[k]
        for x in range(spec.cols):
            config = GRID_CONFIGS[state.vertex_config(k, x)]
            charge = row_charges[x if kind.ice == "delta" else x + 1]
            w = w * grid_weight(ring, kind, config, charge, row_variant)
            if w.is_zero():
                return w
    cols = spec.cols
    for p in range(1, spec.r + 1):
        t, b = spec.pair_rows(p)
        upper = (state.h_spins[t][cols], charges.h_edges[t][cols])
        lower = (state.h_spins[b][cols], charges.h_edges[b][cols])
        w = w * bend_weight(ring, spec.bend_kinds[p - 1], upper, lower,
                            spec.var_index[p - 1], variant)
        if w.is_zero():
            return w
    return w


@dataclass
class PartitionResult:
    """Partition function with its refinement over charge residues.

    ``by_residue`` maps the tuple of per-pair residues (leftmost gamma-row
    charge mod n) to the sum of weights of states with those residues;
    zero sums are dropped. ``state_count`` counts admissible states whether
    or not their weight vanishes.
    """

    total: object
    by_residue: dict
    state_count: int


def partition_function(spec, variant="standard", ring=None):
    """Sum of state weights over all admissible states of the lattice."""
    if ring is None:
        ring = Ring(spec.r, spec.n)
    total = ring.zero()
    by_residue = {}
    count = 0
    for state in enumerate_states(spec):
        count += 1
        w = state_weight(spec, state, variant, ring)
        if w.is_zero():
            continue
        total = total + w
        key = left_residues(spec, state)
        by_residue[key] = by_residue.get(key, ring.zero()) + w
    by_residue = {
        key: val for key, val in sorted(by_residue.items())
        if not val.is_zero()
    }
    return PartitionResult(total, by_residue, count)


def swap_pair(spec, p):
    """Invert the spectral variable of pair p, keeping the row geometry.

    This is the involution appearing in the functional equation in the
    last variable: z_p and z_p^-1 trade places in both rows of the pair
    and the bend flips accordingly.
    """
    if spec.row_order[p - 1] != "dg":
        raise ValueError("swap_pair expects a default 'dg' pair")
    inverted = list(spec.z_inverted)
    inverted[p - 1] = not inverted[p - 1]
    bends = list(spec.bend_kinds)
    bends[p - 1] = _flip_bend(bends[p - 1])
    return replace(spec, z_inverted=tuple(inverted), bend_kinds=tuple(bends))


# ---------------------------------------------------------------------------
# Open diagrams


@dataclass(frozen=True)
class GridNode:
    """A grid vertex; slots are edge names (top, right, bottom, left)."""

    kind: GridKind
    slots: tuple


@dataclass(frozen=True)
class BendNode:
    """A bend vertex; slots are edge names (upper, lower)."""

    kind: str
    i: int
    slots: tuple


@dataclass(frozen=True)
class CrossNode:
    """A crossing vertex; slots are edge names (NW, NE, SE, SW).

    ``z1``/``z2`` are (variable index, exponent sign) pairs naming the two
    spectral parameters, and ``ice`` is one of "dd", "dg", "gd", "gg"
    describing the ice types of the two lines as they enter.
    """

    ice: str
    z1: tuple
    z2: tuple
    slots: tuple


#: Slot axes per node type: horizontal edges carry decorations.
_GRID_AXES = ("v", "h", "v", "h")


def _edge_axes(nodes):
    axes = {}
    for node in nodes:
        if isinstance(node, GridNode):
            slot_axes = _GRID_AXES
        else:
            slot_axes = ("h",) * len(node.slots)
        for name, axis in zip(node.slots, slot_axes):
            if axes.setdefault(name, axis) != axis:
                raise ValueError(f"edge {name!r} used both ways")
    return axes


@dataclass
class NodeDiagram:
    """An open arrangement of vertices with named edges.

    ``boundary`` pins edges: a vertical edge to a spin, a horizontal edge
    to a (spin, decoration) pair, or to (spin, None) to fix the spin while
    summing the decoration. Every edge not in ``boundary`` is free.
    Nodes are evaluated in list order during the backtracking search, so
    builders should order them to fix edges early.
    """

    ring: Ring
    nodes: list
    boundary: dict

    def __post_init__(self):
        self.axes = _edge_axes(self.nodes)
        unknown = set(self.boundary) - set(self.axes)
        if unknown:
            raise ValueError(f"boundary names unknown edges {sorted(unknown)}")

    def edge_values(self, name):
        """Candidate values of one edge under the boundary conditions."""
        n = self.ring.n
        axis = self.axes[name]
        if name in self.boundary:
            value = self.boundary[name]
            if axis == "v":
                return (value,)
            spin, dec = value
            if dec is None:
                return tuple((spin, d) for d in range(n))
            return ((spin, dec % n),)
        if axis == "v":
            return SPINS
        return tuple((s, d) for s in SPINS for d in range(n))

    def states(self, variant="standard"):
        """All edge assignments of nonzero weight, with their weights.

        Returns a list of (assignment, weight) pairs; the assignment maps
        every edge name to its value. Under the "modified" variant the
        weight is the numerator over the diagram's fixed denominator (see
        ``denominator``).
        """
        order = []
        known = set(self.boundary)
        for node in self.nodes:
            fresh = [e for e in node.slots if e not in known]
            order.append((node, fresh))
            known.update(fresh)
        results = []

        def descend(idx, assign, weight):
            if idx == len(order):
                results.append((dict(assign), weight))
                return
            node, fresh = order[idx]
            for values in product(*(self.edge_values(e) for e in fresh)):
                assign.update(zip(fresh, values))
                w = _node_weight(self.ring, node, assign, variant)
                if not w.is_zero():
                    descend(idx + 1, assign, weight * w)
            for e in fresh:
                del assign[e]

        base = {}
        for name in self.boundary:
            vals = self.edge_values(name)
            if len(vals) == 1:
                base[name] = vals[0]
        free_boundary = [n for n in self.boundary if n not in base]
        for values in product(*(self.edge_values(e) for e in free_boundary)):
            assign = dict(base)
            assign.update(zip(free_boundary, values))
            descend(0, assign, self.ring.one())
        return results

    def partition(self, variant="standard"):
        """Sum of the weights of all states."""
        total = self.ring.zero()
        for _, w in self.states(variant):
            total = total + w
        return total

    def denominator(self):
        """Product of the crossing denominators of the modified weights."""
        den = self.ring.one()
        for node in self.nodes:
            if isinstance(node, CrossNode):
                den = den * modified_r_denominator(
                    self.ring, node.ice, node.z1, node.z2)
        return den


def _node_weight(ring, node, assign, variant):
    if isinstance(node, GridNode):
        top, right, bottom, left = (assign[e] for e in node.slots)
        config = GRID_CONFIGS.get((top, right[0], bottom, left[0]))
        if config is None:
            return ring.zero()
        fn = (modified_grid_weight_decorated if variant == "modified"
              else grid_weight_decorated)
        grid_variant = "standard" if variant == "modified" else variant
        return fn(ring, node.kind, config, left[1], right[1], grid_variant)
    if isinstance(node, BendNode):
        upper, lower = (assign[e] for e in node.slots)
        return bend_weight(ring, node.kind, upper, lower, node.i, variant)
    quad = tuple(assign[e] for e in node.slots)
    if variant == "modified":
        num, _ = modified_r_weight(ring, node.ice, quad, node.z1, node.z2)
        return num
    return r_weight(ring, node.ice, quad, node.z1, node.z2, variant)


def lattice_diagram(spec):
    """The closed lattice rebuilt as a NodeDiagram.

    Boundary: '+' with decoration 0 on the left end of every delta-type
    row ('+' with a free decoration on gamma-type rows, whose propagation
    is anchored at the bend instead), the usual spin pattern on top, and
    '+' along the bottom. Summing this diagram reproduces the lattice
    partition function, which makes it a cross-check that the open-diagram
    engine and the row-propagation engine agree.
    """
    cols = spec.cols
    nodes = []
    for k in range(spec.rows):
        kind = spec.row_kind(k)
        for x in range(cols):
            nodes.append(GridNode(kind, (
                f"v{k}.{x}", f"h{k}.{x + 1}", f"v{k + 1}.{x}", f"h{k}.{x}")))
        if k % 2 == 1:
            p = k // 2 + 1
            nodes.append(BendNode(
                spec.bend_kinds[p - 1], spec.var_index[p - 1],
                (f"h{k - 1}.{cols}", f"h{k}.{cols}")))
    boundary = {}
    top = spec.top_boundary()
    for x in range(cols):
        boundary[f"v0.{x}"] = top[x]
        boundary[f"v{spec.rows}.{x}"] = PLUS
    for k in range(spec.rows):
        anchored = spec.row_kind(k).ice == "delta"
        boundary[f"h{k}.0"] = (PLUS, 0 if anchored else None)
    return NodeDiagram(Ring(spec.r, spec.n), nodes, boundary)
