"""Boltzmann weight tables for grid vertices, bends, and crossing vertices.

Grid weights depend on the vertex configuration and on the charge of one
adjacent horizontal edge: the left edge for delta ice, the right edge for
gamma ice. All charge arguments may be arbitrary integers; every table
entry is periodic mod n.

Bend weights depend on the decorated spins of the two bend edges. Six bend
kinds are supported: "dg" joins a delta-type row above a gamma-type row
(spectral parameter z_i), and "dg_flipped" is the same geometry with z_i
inverted; "gd_flipped" joins a gamma-type row above a delta-type row;
"gd" joins a gamma-type row above a delta-type row after the rows of the
pair have been pulled through a crossing (the weights trade z_i for
z_i^-1 relative to "gd_flipped" and shift the decoration pattern); the
"gg"/"gg_flipped" kinds join two gamma-type rows and admit only the
decoration pattern 1 on the '+' edge and 0 on the '-' edge.

Crossing (R-vertex) weights depend on the ice types of the two lines. The
line entering at SW and leaving at NE carries z1; the line entering at NW
and leaving at SE carries z2. The ice name "dg" means the z1 line is
delta-type and the z2 line gamma-type, and so on. Each slot holds a
decorated spin; configurations not listed in the tables weigh zero.

The "g_doubled" variant replaces every Gauss-symbol argument g(a) by
g(2a) in grid and crossing weights. Bend weights are unaffected: the bend
kinds that occur alongside doubled rows carry no Gauss symbol.

Modified weights rescale each weight by a ratio of monomials determined
by the decorated spins on the line directions (a change of basis in the
underlying module): a delta-type edge contributes z^a when its spin is
'-' with decoration a, a gamma-type edge contributes z^a when its spin is
'+'. Modified gamma grid weights are additionally divided by the row
parameter, and modified crossing weights by a fixed polynomial that
depends only on the ice type; the crossing functions return an exact
(numerator, denominator) pair.
"""

from __future__ import annotations

from .model import GRID_CONFIGS, MINUS, PLUS

R_ICE_TYPES = ("dd", "dg", "gd", "gg")

_SPINS_BY_CONFIG = {name: spins for spins, name in GRID_CONFIGS.items()}

GRID_VARIANTS = ("standard", "g_doubled")


def _one_minus_v(ring):
    return ring.one() - ring.v()


def _zref_pow(ring, zref, k):
    """z^k where z is a variable reference (index, sign)."""
    var, sign = zref
    return ring.z(var, sign * k)


def _rep_1_to_n(dec, n):
    """Representative of dec mod n inside [1, n]: decoration 0 reads as n."""
    d = dec % n
    return d if d else n


def grid_weight(ring, kind, config, charge, variant="standard"):
    """Weight of one grid vertex.

    ``kind`` is a model.GridKind; ``charge`` is the left-edge charge for
    delta ice and the right-edge charge for gamma ice.
    """
    if variant not in GRID_VARIANTS:
        raise ValueError(f"unknown grid variant {variant!r}")
    a = charge % ring.n
    ga = 2 * a if variant == "g_doubled" else a
    zi = ring.z(kind.i, kind.z_exponent())
    if kind.ice == "delta":
        table = {
            "a1": lambda: ring.one(),
            "a2": lambda: ring.g(ga) * zi,
            "b1": lambda: ring.one(),
            "b2": lambda: zi,
            "c1": lambda: _one_minus_v(ring) * ring.delta(a) * zi,
            "c2": lambda: ring.delta(a),
        }
    else:
        table = {
            "a1": lambda: ring.one(),
            "a2": lambda: zi,
            "b1": lambda: ring.g(ga),
            "b2": lambda: zi,
            "c1": lambda: _one_minus_v(ring) * ring.delta(a) * zi,
            "c2": lambda: ring.delta(a),
        }
    try:
        return table[config]()
    except KeyError:
        raise ValueError(f"unknown configuration {config!r}") from None


def bend_weight(ring, kind, upper, lower, i, variant="standard"):
    """Weight of a bend vertex from the decorated spins of its two edges.

    ``upper``/``lower`` are (spin, decoration) pairs; decorations compare
    mod n. A bend with equal spins, or with a decoration pattern not in
    its table, weighs zero.
    """
    n = ring.n
    (us, ud), (ls, ld) = upper, lower
    ud %= n
    ld %= n
    if us == ls:
        return ring.zero()
    if kind in ("dg", "dg_flipped"):
        e = -1 if kind == "dg_flipped" else 1
        if us == MINUS:
            if ld == (ud + 1) % n:
                return ring.g(2 * ud) * ring.z(i, e)
        elif ld == ud:
            return ring.z(i, -e)
        return ring.zero()
    if kind == "gd_flipped":
        if us == MINUS:
            return ring.z(i, -1) if ld == ud else ring.zero()
        b, a = ud, ld
        # Configurations (b+, a-) with a + b = 1 mod n and a nonzero are
        # forbidden outright; without this exclusion the attach-a-crossing
        # argument below the last pair would divide zero by zero.
        if (a + b) % n == 1 % n and a != 0:
            return ring.zero()
        return ring.z(i, 1) if b == (a + 1) % n else ring.zero()
    if kind == "gd":
        if us == MINUS:
            return ring.z(i, 1) if ld == ud else ring.zero()
        return ring.z(i, -1) if ud == (ld + 1) % n else ring.zero()
    if kind in ("gg", "gg_flipped"):
        e = 1 if kind == "gg" else -1
        if us == MINUS:
            if ud == 0 and ld == 1 % n:
                return ring.z(i, e)
        elif ud == 1 % n and ld == 0:
            return ring.z(i, -e)
        return ring.zero()
    raise ValueError(f"unknown bend kind {kind!r}")


def r_weight(ring, ice, quad, z1, z2, variant="standard"):
    """Weight of a crossing vertex.

    ``quad`` lists decorated spins (NW, NE, SE, SW); ``z1``/``z2`` are
    variable references (index, sign) for the SW-NE and NW-SE lines.
    """
    if ice not in R_ICE_TYPES:
        raise ValueError(f"unknown crossing ice {ice!r}")
    if variant not in GRID_VARIANTS:
        raise ValueError(f"unknown crossing variant {variant!r}")
    n = ring.n
    (nws, nwd), (nes, ned), (ses, sed), (sws, swd) = quad
    if (nws, nes, ses, sws).count(MINUS) % 2:
        return ring.zero()
    nwd %= n
    ned %= n
    sed %= n
    swd %= n

    def G(t):
        return ring.g(2 * t if variant == "g_doubled" else t)

    def z1p(k):
        return _zref_pow(ring, z1, k)

    def z2p(k):
        return _zref_pow(ring, z2, k)

    one = ring.one()
    v = ring.v()
    z1n, z2n = z1p(n), z2p(n)
    spins = (nws, nes, ses, sws)
    P, M = PLUS, MINUS

    if ice == "gd":
        if spins == (P, P, P, P):
            if nwd == 0 and sed == 0 and ned == swd:
                return z1n - v * z2n
        elif spins == (M, M, M, M):
            if ned == 0 and swd == 0 and nwd == sed:
                return z1n - v * z2n
        elif spins == (M, P, M, P):
            a, b, c, d = swd, nwd, ned, sed
            if c == a and d == b:
                if (a + b) % n == 1 % n:
                    return ring.v(2) * z2n - z1n
                return G(a + b - 1) * (z1n - v * z2n)
            if (a + b) % n == 1 % n and (c + d) % n == 1 % n and a != c:
                e = (a - c) % n
                mono = z1p(n - e) * z2p(e)
                if a * d == 0 or (a * b * c * d != 0 and a > c):
                    return (v - one) * mono
                return v * (v - one) * mono
        elif spins == (P, M, P, M):
            if nwd == ned == sed == swd == 0:
                return z1n - z2n
        elif spins == (P, P, M, M):
            if nwd == 0 and swd == 0:
                a, b = _rep_1_to_n(ned, n), _rep_1_to_n(sed, n)
                if (a + b) % n == 1 % n:
                    return _one_minus_v(ring) * z1p(a) * z2p(b - 1)
        elif spins == (M, M, P, P):
            if ned == 0 and sed == 0:
                a, b = _rep_1_to_n(nwd, n), _rep_1_to_n(swd, n)
                if (a + b) % n == 1 % n:
                    return _one_minus_v(ring) * z1p(a - 1) * z2p(b)
        return ring.zero()

    if ice == "dd":
        if spins == (P, P, P, P):
            if nwd == ned == sed == swd == 0:
                return z1n - v * z2n
        elif spins == (M, M, M, M):
            if nwd == ned == sed == swd:
                return z2n - v * z1n
            if nwd == sed and ned == swd:
                return G(ned - nwd) * (z1n - z2n)
            if nwd == ned and sed == swd:
                c = (sed - nwd) % n
                return _one_minus_v(ring) * z1p(n - c) * z2p(c)
        elif spins == (M, P, M, P):
            if ned == 0 and swd == 0 and nwd == sed:
                return v * (z1n - z2n)
        elif spins == (P, P, M, M):
            if nwd == 0 and ned == 0 and sed == swd:
                a = _rep_1_to_n(sed, n)
                return _one_minus_v(ring) * z1p(n - a + 1) * z2p(a - 1)
        elif spins == (P, M, P, M):
            if nwd == 0 and sed == 0 and ned == swd:
                return z1n - z2n
        elif spins == (M, M, P, P):
            if sed == 0 and swd == 0 and nwd == ned:
                a = _rep_1_to_n(nwd, n)
                return _one_minus_v(ring) * z1p(a - 1) * z2p(n - a + 1)
        return ring.zero()

    if ice == "dg":
        vn = ring.v(n)
        if spins == (P, P, P, P):
            if ned == 0 and swd == 0 and nwd == sed:
                return z2n - vn * z1n
        elif spins == (M, M, M, M):
            if nwd == 0 and sed == 0 and ned == swd:
                return z2n - vn * z1n
        elif spins == (M, P, M, P):
            if nwd == ned == sed == swd == 0:
                return z2n - ring.v(n + 1) * z1n
        elif spins == (P, M, P, M):
            b, c, d, a = nwd, ned, sed, swd
            if c == a and d == b:
                if (a + b) % n == 1 % n:
                    return ring.v(n - 1) * z1n - z2n
                return G(n + 1 - a - b) * (ring.v(-1) * z2n
                                           - ring.v(n - 1) * z1n)
            if (a + b) % n == 1 % n and (c + d) % n == 1 % n and a != c:
                e = (c - a) % n
                return (_one_minus_v(ring) * ring.v(e - 1)
                        * z1p(e) * z2p(n - e))
        elif spins == (P, P, M, M):
            if ned == 0 and sed == 0:
                a, b = _rep_1_to_n(nwd, n), _rep_1_to_n(swd, n)
                if (a + b) % n == 1 % n:
                    return (_one_minus_v(ring) * ring.v(a - 1)
                            * z1p(a) * z2p(b - 1))
        elif spins == (M, M, P, P):
            if nwd == 0 and swd == 0:
                a, b = _rep_1_to_n(ned, n), _rep_1_to_n(sed, n)
                if (a + b) % n == 1 % n:
                    return (_one_minus_v(ring) * ring.v(a - 1)
                            * z1p(a - 1) * z2p(b))
        return ring.zero()

    # ice == "gg"
    if spins == (P, P, P, P):
        if nwd == ned == sed == swd:
            return z2n - v * z1n
        if nwd == sed and ned == swd:
            return G(nwd - ned) * (z1n - z2n)
        if nwd == ned and sed == swd:
            c = (nwd - sed) % n
            return _one_minus_v(ring) * z1p(c) * z2p(n - c)
    elif spins == (M, M, M, M):
        if nwd == ned == sed == swd == 0:
            return z1n - v * z2n
    elif spins == (M, P, M, P):
        if nwd == 0 and sed == 0 and ned == swd:
            return v * (z1n - z2n)
    elif spins == (P, M, P, M):
        if ned == 0 and swd == 0 and nwd == sed:
            return z1n - z2n
    elif spins == (P, P, M, M):
        if sed == 0 and swd == 0 and nwd == ned:
            a = _rep_1_to_n(nwd, n)
            return _one_minus_v(ring) * z1p(a) * z2p(n - a)
    elif spins == (M, M, P, P):
        if nwd == 0 and ned == 0 and sed == swd:
            a = _rep_1_to_n(sed, n)
            return _one_minus_v(ring) * z1p(n - a) * z2p(a)
    return ring.zero()


def grid_weight_decorated(ring, kind, config, left_dec, right_dec,
                          variant="standard"):
    """Grid weight from both horizontal decorations, zero on inconsistency.

    In a lattice the decorations come from one global charge statistic, so
    the two sides of a vertex always agree with the propagation rule:
    charge grows rightward past a '-' edge in delta ice and leftward past
    a '+' edge in gamma ice. Open diagrams enumerate decorations freely,
    and this wrapper keeps only the consistent ones.
    """
    n = ring.n
    _, right_spin, _, left_spin = config_spins(config)
    if kind.ice == "delta":
        if (left_dec + (right_spin == MINUS)) % n != right_dec % n:
            return ring.zero()
        return grid_weight(ring, kind, config, left_dec, variant)
    if (right_dec + (left_spin == PLUS)) % n != left_dec % n:
        return ring.zero()
    return grid_weight(ring, kind, config, right_dec, variant)


def modified_grid_weight_decorated(ring, kind, config, left_dec, right_dec,
                                   variant="standard"):
    """Modified grid weight with the same consistency filter."""
    n = ring.n
    _, right_spin, _, left_spin = config_spins(config)
    if kind.ice == "delta":
        if (left_dec + (right_spin == MINUS)) % n != right_dec % n:
            return ring.zero()
        return modified_grid_weight(ring, kind, config, left_dec, variant)
    if (right_dec + (left_spin == PLUS)) % n != left_dec % n:
        return ring.zero()
    return modified_grid_weight(ring, kind, config, right_dec, variant)


def _f_exponent(ice_letter, spin, dec, n):
    """Monomial exponent carried by one decorated spin under the rescaling."""
    if ice_letter == "d":
        return dec % n if spin == MINUS else 0
    return dec % n if spin == PLUS else 0


def _edge_decorations(kind, config, charge, n):
    """Decorated spins (left, right) around a grid vertex.

    Charge increments by one across the vertex: rightward past a '-' edge
    in delta ice, leftward past a '+' edge in gamma ice.
    """
    _, right_spin, _, left_spin = config_spins(config)
    a = charge % n
    if kind.ice == "delta":
        left = (left_spin, a)
        right = (right_spin, (a + (right_spin == MINUS)) % n)
    else:
        right = (right_spin, a)
        left = (left_spin, (a + (left_spin == PLUS)) % n)
    return left, right


def config_spins(config):
    """Spins (top, right, bottom, left) of a named configuration."""
    try:
        return _SPINS_BY_CONFIG[config]
    except KeyError:
        raise ValueError(f"unknown configuration {config!r}") from None


def modified_grid_weight(ring, kind, config, charge, variant="standard"):
    """Grid weight after the change-of-basis rescaling.

    Multiplies by the left edge's monomial, divides by the right edge's,
    and divides gamma weights by the row parameter. The result is a
    Laurent monomial times the plain weight, so it stays in the ring.
    """
    wt = grid_weight(ring, kind, config, charge, variant)
    letter = "d" if kind.ice == "delta" else "g"
    (ls, ld), (rs, rd) = _edge_decorations(kind, config, charge, ring.n)
    exp = (_f_exponent(letter, ls, ld, ring.n)
           - _f_exponent(letter, rs, rd, ring.n))
    if kind.ice == "gamma":
        exp -= 1
    return wt * ring.z(kind.i, kind.z_exponent() * exp)


def modified_r_denominator(ring, ice, z1, z2):
    """Declared denominator of the modified crossing weights."""
    n = ring.n
    z1n = _zref_pow(ring, z1, n)
    z2n = _zref_pow(ring, z2, n)
    if ice == "dg":
        return z2n - ring.v(n) * z1n
    return z1n - ring.v() * z2n


def modified_r_weight(ring, ice, quad, z1, z2, variant="standard"):
    """Crossing weight after rescaling, as an exact (numerator, denominator).

    The numerator multiplies the plain weight by the SW and NW edge
    monomials and divides by the NE and SE ones; the denominator is the
    fixed polynomial for the ice type.
    """
    wt = r_weight(ring, ice, quad, z1, z2, variant)
    n = ring.n
    nw, ne, se, sw = quad
    ex = (_f_exponent(ice[0], sw[0], sw[1], n)
          - _f_exponent(ice[0], ne[0], ne[1], n))
    ey = (_f_exponent(ice[1], nw[0], nw[1], n)
          - _f_exponent(ice[1], se[0], se[1], n))
    num = wt * _zref_pow(ring, z1, ex) * _zref_pow(ring, z2, ey)
    return num, modified_r_denominator(ring, ice, z1, z2)
