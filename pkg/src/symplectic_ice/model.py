"""Geometry, charge, and admissibility for the six-vertex U-turn lattice.

A lattice has 2r rows, grouped into pairs (one row per spectral index i,
read top to bottom), and lambda_1 + r columns numbered 1, 2, ... from the
*right*. Every vertex at a row/column crossing is a grid vertex; each row
pair is closed off at the right boundary by a bend vertex joining the two
rightmost horizontal edges. Boundary spins are fixed: '+' everywhere on the
left and bottom, and '-' on top exactly in the columns given by the strictly
decreasing vector lambda + rho, rho = (r, r-1, ..., 1).

Charge is a global statistic on horizontal edges:

* along a delta-type row it counts '-' spins at and to the left of an edge,
  so the leftmost edge always has charge 0;
* a bend attached to a delta-type row inherits the charge of that row's
  rightmost edge;
* along a gamma-type row it counts '+' spins at and to the right of an edge
  (the edge itself included) plus the charge of the pair's bend vertex.

The decoration of an edge is its charge reduced mod n.

Row pairs come in several arrangements. The default has the delta-type row
on top with spectral variable z_i and the gamma-type row below with z_i^-1.
Supported variations (used by the functional-equation checks) interchange
the two rows of the last pair, optionally turning the lower row into
gamma-type ice, or invert the spectral variable of a pair while keeping the
default geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

PLUS = "+"
MINUS = "-"
SPINS = (PLUS, MINUS)

#: Admissible grid-vertex configurations keyed by (top, right, bottom, left).
GRID_CONFIGS = {
    (PLUS, PLUS, PLUS, PLUS): "a1",
    (MINUS, MINUS, MINUS, MINUS): "a2",
    (MINUS, PLUS, MINUS, PLUS): "b1",
    (PLUS, MINUS, PLUS, MINUS): "b2",
    (PLUS, PLUS, MINUS, MINUS): "c1",
    (MINUS, MINUS, PLUS, PLUS): "c2",
}

CONFIG_NAMES = ("a1", "a2", "b1", "b2", "c1", "c2")

ROW_ORDERS = ("dg", "gd")
ICE_TYPES = ("delta", "gamma")
BEND_KINDS = ("dg", "dg_flipped", "gd", "gd_flipped", "gg", "gg_flipped")


@dataclass(frozen=True)
class GridKind:
    """Ice type of one row: delta or gamma, pair index, z-inversion flag."""

    ice: str
    i: int
    inv: bool

    def z_exponent(self):
        """Exponent sign carried by z_i in this row's weights."""
        return -1 if self.inv else 1


def _default_bend(row_order, bottom_ice):
    if row_order == "dg":
        return "dg"
    return "gd_flipped" if bottom_ice == "delta" else "gg_flipped"


@dataclass(frozen=True)
class LatticeSpec:
    """Shape and row arrangement of one U-turn lattice.

    ``row_order[p]`` is "dg" when pair p+1 has its delta-type row on top
    (the default) and "gd" when the rows are interchanged. For a "gd" pair,
    ``bottom_row_ice[p]`` chooses the ice type of the lower row; for a "dg"
    pair it must be "gamma". ``z_inverted[p]`` swaps z_i and z_i^-1 inside
    the pair without moving the rows (the involution used by the functional
    equation in the last variable). ``var_index[p]`` is the spectral
    variable assigned to the pair, normally p+1; permuting it evaluates the
    partition function at permuted variables.
    """

    r: int
    n: int
    lam: tuple
    row_order: tuple = None
    bottom_row_ice: tuple = None
    bend_kinds: tuple = None
    z_inverted: tuple = None
    var_index: tuple = None

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.n < 1 or self.n % 2 == 0:
            raise ValueError("n must be a positive odd integer")
        lam = tuple(int(x) for x in self.lam)
        if len(lam) != self.r:
            raise ValueError("lambda must have exactly r parts")
        if any(x < 0 for x in lam):
            raise ValueError("lambda parts must be nonnegative")
        if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
            raise ValueError("lambda must be weakly decreasing")
        object.__setattr__(self, "lam", lam)

        order = self.row_order or ("dg",) * self.r
        if len(order) != self.r or any(o not in ROW_ORDERS for o in order):
            raise ValueError("row_order must list 'dg'/'gd' per pair")
        object.__setattr__(self, "row_order", tuple(order))

        bottom = self.bottom_row_ice
        if bottom is None:
            bottom = tuple(
                "gamma" if o == "dg" else "delta" for o in order)
        if len(bottom) != self.r or any(b not in ICE_TYPES for b in bottom):
            raise ValueError("bottom_row_ice must list 'delta'/'gamma'")
        for o, b in zip(order, bottom):
            if o == "dg" and b != "gamma":
                raise ValueError("a 'dg' pair always has a gamma bottom row")
        object.__setattr__(self, "bottom_row_ice", tuple(bottom))

        inverted = self.z_inverted or (False,) * self.r
        if len(inverted) != self.r:
            raise ValueError("z_inverted must have one flag per pair")
        object.__setattr__(self, "z_inverted", tuple(bool(f) for f in inverted))

        bends = self.bend_kinds
        if bends is None:
            bends = tuple(
                _flip_bend(_default_bend(o, b)) if inv else _default_bend(o, b)
                for o, b, inv in zip(order, bottom, inverted))
        if len(bends) != self.r or any(b not in BEND_KINDS for b in bends):
            raise ValueError(f"bend kinds must come from {BEND_KINDS}")
        object.__setattr__(self, "bend_kinds", tuple(bends))

        var = self.var_index or tuple(range(1, self.r + 1))
        if sorted(var) != list(range(1, self.r + 1)):
            raise ValueError("var_index must be a permutation of 1..r")
        object.__setattr__(self, "var_index", tuple(var))

    @property
    def cols(self):
        return (self.lam[0] if self.lam else 0) + self.r

    @property
    def rows(self):
        return 2 * self.r

    def top_boundary(self):
        """Top boundary spins, positions left to right.

        Position x holds column number cols - x; the '-' spins sit in the
        columns listed in lambda + rho.
        """
        marked = {self.lam[k] + (self.r - k) for k in range(self.r)}
        return tuple(
            MINUS if self.cols - x in marked else PLUS
            for x in range(self.cols))

    def pair_rows(self, p):
        """Row indices (upper, lower) of pair p, 1-indexed pairs."""
        return 2 * p - 2, 2 * p - 1

    def row_kind(self, k):
        """GridKind of row index k (0-indexed from the top)."""
        p = k // 2 + 1
        upper = k % 2 == 0
        order = self.row_order[p - 1]
        inv = self.z_inverted[p - 1]
        i = self.var_index[p - 1]
        if order == "dg":
            if upper:
                return GridKind("delta", i, inv)
            return GridKind("gamma", i, not inv)
        if upper:
            return GridKind("gamma", i, not inv)
        return GridKind(self.bottom_row_ice[p - 1], i, inv)

    def transpose_vars(self, i, j):
        """The same lattice evaluated with z_i and z_j interchanged."""
        var = list(self.var_index)
        a, b = var.index(i), var.index(j)
        var[a], var[b] = var[b], var[a]
        return replace(self, var_index=tuple(var))


def _flip_bend(kind):
    return kind[:-8] if kind.endswith("_flipped") else kind + "_flipped"


@dataclass(frozen=True)
class IceState:
    """One spin assignment on a lattice.

    ``h_spins[k]`` lists row k's horizontal edges left to right; the entry
    at index cols is the edge joining the row to its bend. ``v_spins[k]``
    lists the vertical edges between rows k-1 and k (k = 0 is the top
    boundary, k = 2r the bottom), positions left to right.
    """

    spec: LatticeSpec
    h_spins: tuple
    v_spins: tuple

    def vertex_config(self, k, x):
        """Configuration tuple (top, right, bottom, left) at row k, pos x."""
        return (self.v_spins[k][x], self.h_spins[k][x + 1],
                self.v_spins[k + 1][x], self.h_spins[k][x])

    def bend_spins(self, p):
        """(upper, lower) spins on the bend edges of pair p."""
        t, b = self.spec.pair_rows(p)
        cols = self.spec.cols
        return self.h_spins[t][cols], self.h_spins[b][cols]

    def to_json_obj(self):
        spec = self.spec
        charges = compute_charges(spec, self)
        return {
            "rows": spec.rows,
            "cols": spec.cols,
            "h_spins": [list(row) for row in self.h_spins],
            "v_spins": [list(row) for row in self.v_spins],
            "bend_spins": [list(self.bend_spins(p))
                           for p in range(1, spec.r + 1)],
            "charges": {
                "h_edges": [list(row) for row in charges.h_edges],
                "bends": list(charges.bends),
            },
            "decorations": [
                [c % spec.n for c in row] for row in charges.h_edges],
        }

    def render(self):
        return render_state(self)


@dataclass(frozen=True)
class Charges:
    """Edge charges per row (length cols + 1 each) and per-pair bend charge."""

    h_edges: tuple
    bends: tuple


def is_admissible(state):
    """Every grid vertex uses one of the six configurations, bends differ."""
    spec = state.spec
    for k in range(spec.rows):
        for x in range(spec.cols):
            if state.vertex_config(k, x) not in GRID_CONFIGS:
                return False
    for p in range(1, spec.r + 1):
        up, lo = state.bend_spins(p)
        if up == lo:
            return False
    return True


def _delta_charges(edges):
    out = []
    c = 0
    for s in edges:
        if s == MINUS:
            c += 1
        out.append(c)
    return out


def _gamma_charges(edges, bend_charge):
    out = []
    c = bend_charge
    for s in reversed(edges):
        if s == PLUS:
            c += 1
        out.append(c)
    out.reverse()
    return out


def compute_charges(spec, state):
    """Charges of all horizontal edges and all bend vertices.

    Propagation depends on the pair arrangement: the delta-type row anchors
    charge 0 at its left edge and hands its rightmost charge to the bend,
    which seeds the gamma-type row of the pair. A pair whose rows are both
    gamma-type has no delta row to seed from, and its bend takes charge 0.
    """
    h_edges = [None] * spec.rows
    bends = [0] * spec.r
    for p in range(1, spec.r + 1):
        t, b = spec.pair_rows(p)
        order = spec.row_order[p - 1]
        bottom = spec.bottom_row_ice[p - 1]
        if order == "dg":
            h_edges[t] = _delta_charges(state.h_spins[t])
            q = h_edges[t][-1]
            h_edges[b] = _gamma_charges(state.h_spins[b], q)
        elif bottom == "delta":
            h_edges[b] = _delta_charges(state.h_spins[b])
            q = h_edges[b][-1]
            h_edges[t] = _gamma_charges(state.h_spins[t], q)
        else:
            q = 0
            h_edges[t] = _gamma_charges(state.h_spins[t], q)
            h_edges[b] = _gamma_charges(state.h_spins[b], q)
        bends[p - 1] = q
    return Charges(tuple(tuple(row) for row in h_edges), tuple(bends))


def decorations(spec, state):
    """Horizontal-edge charges reduced mod n, same layout as the charges."""
    charges = compute_charges(spec, state)
    return tuple(
        tuple(c % spec.n for c in row) for row in charges.h_edges)


def gamma_row_index(spec, p):
    """Row index whose leftmost charge labels pair p in residue splits."""
    t, b = spec.pair_rows(p)
    return b if spec.row_order[p - 1] == "dg" else t


def left_residues(spec, state):
    """Per-pair residues: leftmost gamma-row charge mod n.

    The partition function refines over these residues; for the default
    arrangement this reads the bottom row of each pair.
    """
    charges = compute_charges(spec, state)
    return tuple(
        charges.h_edges[gamma_row_index(spec, p)][0] % spec.n
        for p in range(1, spec.r + 1))


def row_label(spec, k):
    """Display label of row k: pair number, barred rows get a trailing '."""
    p = k // 2 + 1
    upper = k % 2 == 0
    barred = upper == (spec.row_order[p - 1] == "gd")
    return f"{p}'" if barred else str(p)


def render_state(state):
    """Plain-text picture: vertical spins between rows of horizontal spins.

    Each grid vertex is drawn as '*'; the last horizontal spin in a row is
    the bend edge, annotated with the bend charge on the upper row.
    """
    spec = state.spec
    charges = compute_charges(spec, state)
    width = 4
    lines = []
    header = " " * 6 + "".join(
        str(spec.cols - x).center(width) for x in range(spec.cols))
    lines.append(header.rstrip())
    for k in range(spec.rows):
        vline = " " * 6 + "".join(
            state.v_spins[k][x].center(width) for x in range(spec.cols))
        lines.append(vline.rstrip())
        label = row_label(spec, k).ljust(3)
        cells = []
        for x in range(spec.cols):
            cells.append(state.h_spins[k][x])
            cells.append("*")
        cells.append(state.h_spins[k][spec.cols])
        body = " ".join(cells)
        p = k // 2 + 1
        if k % 2 == 0:
            tail = f"  ) q={charges.bends[p - 1]}"
        else:
            tail = "  )"
        lines.append(f" {label} {body}{tail}")
        decs = " " * 6 + "".join(
            str(charges.h_edges[k][x] % spec.n).center(width)
            for x in range(spec.cols + 1))
        lines.append(decs.rstrip())
    vline = " " * 6 + "".join(
        state.v_spins[spec.rows][x].center(width) for x in range(spec.cols))
    lines.append(vline.rstrip())
    return "\n".join(lines)
