"""Strict patterns, their statistics, and the Dirichlet-series coefficients.

A pattern is a triangular arrangement of nonnegative integers in rows
a_0, b_1, a_1, b_2, ..., b_r: row a_i has entries a_{i,j} for j in
[i+1, r] (a_0 is the top row, with j in [1, r]), row b_i has entries
b_{i,j} for j in [i, r]. Consecutive rows interleave (each entry lies
between the two entries above it, with absent entries read as 0), every
row is strictly decreasing, and a_{i,r} > 0 for all i. The set of such
patterns with top row lambda + rho is in bijection with the admissible
states of the lattice: a_{i,j} and b_{i,j} are the column numbers of the
'-' vertical spins above rows i+1 and i-bar, with a 0 entry in b_i
standing for a '-' on the upper bend edge of pair i.

Pattern entries carry the local statistics v, w, u (sums of differences
of the rows around an entry, matching edge charges of the corresponding
state), a weight vector, and a vector k used to index the coefficients
H~ of a Dirichlet series: H~(k) is the sum of G~(P) over patterns with
k(P) = k, where G~(P) is a product over entries of ring values driven by
whether each entry equals its upper-left neighbor, its upper-right
neighbor, or sits strictly between them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import MINUS, PLUS, IceState
from .ring import Ring


@dataclass(frozen=True)
class GTPattern:
    """Rows a = (a_0, ..., a_{r-1}) and b = (b_1, ..., b_r).

    Row a_i is stored with its entries a_{i,i+1..r} left to right (so
    lengths shrink by one per row: len(a[i]) = r - i for i >= 1 and
    len(a[0]) = r); row b_i likewise holds b_{i,i..r}. The empty row a_r
    is not stored.
    """

    r: int
    a: tuple
    b: tuple

    def aval(self, i, j):
        """Entry a_{i,j}; absent entries read as 0."""
        if i == 0:
            base = 1
        elif i >= self.r:
            return 0
        else:
            base = i + 1
        if j < base or j > self.r:
            return 0
        return self.a[i][j - base]

    def bval(self, i, j):
        """Entry b_{i,j}; absent entries read as 0."""
        if j < i or j > self.r:
            return 0
        return self.b[i - 1][j - i]

    def rows(self):
        """All rows top to bottom: a_0, b_1, a_1, ..., b_r."""
        out = [self.a[0]]
        for i in range(1, self.r + 1):
            out.append(self.b[i - 1])
            if i < self.r:
                out.append(self.a[i])
        return out

    def v_stat(self, i, j):
        """Charge at the vertex of row i in column b_{i,j}."""
        return sum(self.aval(i - 1, k) - self.bval(i, k)
                   for k in range(i, j + 1))

    def w_stat(self, i, j):
        return sum(self.aval(i, k) - self.bval(i, k)
                   for k in range(j, self.r + 1))

    def u_stat(self, i, j):
        """Charge at the vertex of row i-bar in column a_{i,j}."""
        return self.v_stat(i, self.r) + self.w_stat(i, j)

    def weight_vector(self):
        """Integer vector (wt_1, ..., wt_r) from the row sums."""

        def asum(i):
            if i == 0:
                return sum(self.a[0])
            if i >= self.r:
                return 0
            return sum(self.a[i])

        def bsum(i):
            return sum(self.b[i - 1])

        return tuple(
            asum(self.r - i) - 2 * bsum(self.r - i + 1) + asum(self.r - i + 1)
            for i in range(1, self.r + 1))

    def k_vector(self, lam):
        """Vector (k_1, ..., k_r); k_1 is half of the full sum.

        The shifted partition lambda + rho enters reversed: its smallest
        part pairs with wt_1.
        """
        r = self.r
        ell = [lam[k] + (r - k) for k in range(r)]
        ell.reverse()
        wt = self.weight_vector()
        total = sum(wt[j] + ell[j] for j in range(r))
        if total % 2:
            raise ArithmeticError("weight sum has odd parity")
        out = [total // 2]
        for i in range(2, r + 1):
            out.append(sum(wt[j - 1] + ell[j - 1] for j in range(i, r + 1)))
        return tuple(out)


def _interlacing_rows(prev, shrink, min_last):
    """Strictly decreasing rows interleaving ``prev``.

    Same-length rows (shrink=False) satisfy prev[k] >= row[k] >=
    prev[k+1] (0 past the end); shorter rows satisfy prev[k] >= row[k] >=
    prev[k+1]. The last entry is additionally bounded below by
    ``min_last``.
    """
    length = len(prev) - (1 if shrink else 0)

    def rec(k, acc):
        if k == length:
            yield tuple(acc)
            return
        hi = prev[k]
        lo = prev[k + 1] if k + 1 < len(prev) else 0
        if acc:
            hi = min(hi, acc[-1] - 1)
        if k == length - 1:
            lo = max(lo, min_last)
        for val in range(hi, lo - 1, -1):
            yield from rec(k + 1, acc + [val])

    if length == 0:
        yield ()
        return
    yield from rec(0, [])


def enumerate_patterns(top):
    """All strict patterns with the given strictly decreasing top row."""
    top = tuple(int(x) for x in top)
    r = len(top)
    if any(top[k] <= top[k + 1] for k in range(r - 1)) or top[-1] < 1:
        raise ValueError("top row must be strictly decreasing and positive")
    results = []

    def descend(i, arows, brows):
        if i > r:
            results.append(GTPattern(r, tuple(arows), tuple(brows)))
            return
        for brow in _interlacing_rows(arows[-1], False, 0):
            if i == r:
                descend(i + 1, arows, brows + [brow])
                continue
            for arow in _interlacing_rows(brow, True, 1):
                descend(i + 1, arows + [arow], brows + [brow])

    descend(1, [top], [])
    results.sort(key=lambda p: tuple(p.rows()))
    return results


def is_strict_pattern(pat):
    """Shape, interleaving, and strictness checked from the definitions."""
    r = pat.r
    if len(pat.a) != r or len(pat.b) != r:
        return False
    if any(len(pat.a[i]) != (r if i == 0 else r - i) for i in range(r)):
        return False
    if any(len(pat.b[i - 1]) != r - i + 1 for i in range(1, r + 1)):
        return False
    for row in pat.rows():
        if any(x < 0 for x in row):
            return False
        if any(row[k] <= row[k + 1] for k in range(len(row) - 1)):
            return False
    if any(pat.aval(i, r) == 0 for i in range(r)):
        return False
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            b = pat.bval(i, j)
            if b > pat.aval(i - 1, j) or b < pat.aval(i - 1, j + 1):
                return False
    for i in range(1, r):
        for j in range(i + 1, r + 1):
            a = pat.aval(i, j)
            if a > pat.bval(i, j - 1) or a < pat.bval(i, j):
                return False
    return True


# ---------------------------------------------------------------------------
# State <-> pattern bijection


def state_to_pattern(spec, state):
    """Read the pattern off a state's '-' vertical spins."""
    cols = spec.cols
    r = spec.r

    def minus_columns(v_row):
        return tuple(cols - x for x in range(cols) if v_row[x] == MINUS)

    arows = [minus_columns(state.v_spins[0])]
    brows = []
    for i in range(1, r + 1):
        brow = minus_columns(state.v_spins[2 * i - 1])
        if state.h_spins[2 * i - 2][cols] == MINUS:
            brow = brow + (0,)
        brows.append(brow)
        if i < r:
            arows.append(minus_columns(state.v_spins[2 * i]))
    for i, row in enumerate(arows):
        if len(row) != r - i:
            raise ValueError("state rows do not balance")
    for i, row in enumerate(brows, start=1):
        if len(row) != r - i + 1:
            raise ValueError("state rows do not balance")
    return GTPattern(r, tuple(arows), tuple(brows))


#: Right spin forced by (top, bottom, left); None marks an inadmissible left.
_RIGHT_SPIN = {
    (PLUS, PLUS): {PLUS: PLUS, MINUS: MINUS},
    (MINUS, MINUS): {PLUS: PLUS, MINUS: MINUS},
    (MINUS, PLUS): {PLUS: MINUS},
    (PLUS, MINUS): {MINUS: PLUS},
}


def pattern_to_state(spec, pat):
    """Rebuild the state whose '-' vertical spins sit in the pattern rows."""
    if pat.r != spec.r:
        raise ValueError("pattern rank does not match the lattice")
    cols = spec.cols
    r = spec.r
    v_rows = [None] * (2 * r + 1)

    def spin_row(entries):
        marked = {e for e in entries if e > 0}
        if any(e > cols for e in marked):
            raise ValueError("pattern entry exceeds the column count")
        return tuple(
            MINUS if cols - x in marked else PLUS for x in range(cols))

    v_rows[0] = spin_row(pat.a[0])
    if v_rows[0] != spec.top_boundary():
        raise ValueError("top row differs from lambda + rho")
    for i in range(1, r + 1):
        v_rows[2 * i - 1] = spin_row(pat.b[i - 1])
        if i < r:
            v_rows[2 * i] = spin_row(pat.a[i])
    v_rows[2 * r] = (PLUS,) * cols

    h_rows = []
    for k in range(2 * r):
        row = [PLUS]
        for x in range(cols):
            options = _RIGHT_SPIN[(v_rows[k][x], v_rows[k + 1][x])]
            right = options.get(row[x])
            if right is None:
                raise ValueError("pattern does not describe a state")
            row.append(right)
        h_rows.append(tuple(row))
    state = IceState(spec, tuple(h_rows), tuple(v_rows))
    for p in range(1, r + 1):
        up, lo = state.bend_spins(p)
        if up == lo:
            raise ValueError("pattern does not describe a state")
    return state


# ---------------------------------------------------------------------------
# Entry values and series coefficients


def gamma_tilde_a(ring, pat, i, j):
    """Normalized value of entry a_{i,j} (i >= 1)."""
    a = pat.aval(i, j)
    hi = pat.bval(i, j - 1)
    lo = pat.bval(i, j)
    u = pat.u_stat(i, j)
    if a == hi:
        return ring.g(u)
    if a == lo:
        return ring.one()
    if lo < a < hi and u % ring.n == 0:
        return ring.one() - ring.v()
    return ring.zero()


def gamma_tilde_b(ring, pat, i, j):
    """Normalized value of entry b_{i,j}; the last column doubles v."""
    b = pat.bval(i, j)
    hi = pat.aval(i - 1, j)
    lo = pat.aval(i - 1, j + 1)
    mult = 2 if j == pat.r else 1
    if b == hi:
        return ring.one()
    if b == lo:
        return ring.g(mult * pat.v_stat(i, j))
    if lo < b < hi and (mult * pat.v_stat(i, j)) % ring.n == 0:
        return ring.one() - ring.v()
    return ring.zero()


def g_tilde(ring, pat):
    """Product of the normalized entry values over the whole pattern."""
    out = ring.one()
    for i in range(1, pat.r):
        for j in range(i + 1, pat.r + 1):
            out = out * gamma_tilde_a(ring, pat, i, j)
            if out.is_zero():
                return out
    for i in range(1, pat.r + 1):
        for j in range(i, pat.r + 1):
            out = out * gamma_tilde_b(ring, pat, i, j)
            if out.is_zero():
                return out
    return out


def lam_from_ell(ell):
    """Partition lambda with lambda_{r-m+1} = ell_1 + ... + ell_m."""
    r = len(ell)
    return tuple(sum(ell[:r - k]) for k in range(r))


def ell_from_lam(lam):
    """Inverse of lam_from_ell."""
    r = len(lam)
    out = [lam[-1]]
    for m in range(2, r + 1):
        out.append(lam[r - m] - lam[r - m + 1])
    return tuple(out)


def h_tilde(r, n, lam):
    """Coefficients H~ keyed by the k-vector, as a sorted dict."""
    ring = Ring(r, n)
    lam = tuple(lam)
    top = tuple(lam[k] + (r - k) for k in range(r))
    out = {}
    for pat in enumerate_patterns(top):
        g = g_tilde(ring, pat)
        if g.is_zero():
            continue
        k = pat.k_vector(lam)
        out[k] = out.get(k, ring.zero()) + g
    return {k: val for k, val in sorted(out.items()) if not val.is_zero()}
