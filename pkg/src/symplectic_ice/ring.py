"""Exact ring arithmetic for ice weights and partition functions.

Elements live in Z[v, v^-1, z_1^{+-1}, ..., z_r^{+-1}, g_1, ..., g_{n-1}]
modulo the Gauss-sum symbol relations

    g(0) = -v          and          g(a) * g(n-a) = v   for 0 < a < n,

with n odd. A monomial is kept in normal form: g_0 is rewritten into -v at
construction and a pair g_a, g_{n-a} never appears with both exponents
positive (each pair cancels into one factor of v). Since n is odd, a = n-a
is impossible, so the rewriting is confluent and the normal form unique.

Coefficients are arbitrary-precision integers; specializations map into
exact rationals. No floating point anywhere.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction


def _normalize_monomial(coeff, v_exp, z_exp, g_exp, n):
    """Apply g_0 -> -v and g_a g_{n-a} -> v until exhausted.

    g_exp is indexed by residue a in [0, n-1]; the returned tuple drops the
    a = 0 slot (always rewritten away) and has length n-1.
    """
    g = list(g_exp)
    if len(g) == n:
        e0, g = g[0], g[1:]
        if e0:
            coeff *= (-1) ** e0
            v_exp += e0
    elif len(g) != n - 1:
        raise ValueError(f"g exponent vector must have length {n} or {n - 1}")
    for a in range(1, (n + 1) // 2):
        lo, hi = g[a - 1], g[n - a - 1]
        k = min(lo, hi)
        if k:
            v_exp += k
            g[a - 1] -= k
            g[n - a - 1] -= k
    return coeff, v_exp, tuple(z_exp), tuple(g)


class RingElem:
    """A sum of normal-form monomials with nonzero integer coefficients.

    The coefficient map is keyed on (v_exp, z_exp, g_exp) tuples. Two
    elements are equal iff their maps are equal; all operations are pure.
    """

    __slots__ = ("nvars", "n", "coeffs")

    def __init__(self, nvars, n, coeffs):
        self.nvars = nvars
        self.n = n
        self.coeffs = coeffs

    def _check_compatible(self, other):
        if self.nvars != other.nvars or self.n != other.n:
            raise ValueError(
                f"ring mismatch: ({self.nvars},{self.n}) vs "
                f"({other.nvars},{other.n})")

    def _coerce(self, other):
        if isinstance(other, RingElem):
            self._check_compatible(other)
            return other
        if isinstance(other, int):
            return Ring(self.nvars, self.n).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = coeffs.get(key, 0) + c
            if s:
                coeffs[key] = s
            else:
                coeffs.pop(key, None)
        return RingElem(self.nvars, self.n, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.nvars, self.n,
                        {key: -c for key, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.n
        coeffs = {}
        for (v1, z1, g1), c1 in self.coeffs.items():
            for (v2, z2, g2), c2 in other.coeffs.items():
                ve = v1 + v2
                ze = tuple(a + b for a, b in zip(z1, z2))
                ge = [a + b for a, b in zip(g1, g2)]
                c = c1 * c2
                for a in range(1, (n + 1) // 2):
                    k = min(ge[a - 1], ge[n - a - 1])
                    if k:
                        ve += k
                        ge[a - 1] -= k
                        ge[n - a - 1] -= k
                key = (ve, ze, tuple(ge))
                s = coeffs.get(key, 0) + c
                if s:
                    coeffs[key] = s
                else:
                    coeffs.pop(key, None)
        return RingElem(self.nvars, self.n, coeffs)

    __rmul__ = __mul__

    def inverse(self):
        """Invert a unit monomial (coefficient +-1).

        v and z exponents flip sign; each g_a factor inverts through the
        pair relation, 1/g(a) = g(n-a) * v^-1. The flipped g vector is
        already in normal form because the original was.
        """
        if len(self.coeffs) != 1:
            raise ValueError("only single monomials are invertible")
        (ve, ze, ge), c = next(iter(self.coeffs.items()))
        if abs(c) != 1:
            raise ValueError("monomial coefficient must be a unit")
        key = (-ve - sum(ge), tuple(-e for e in ze), tuple(reversed(ge)))
        return RingElem(self.nvars, self.n, {key: c})

    def __pow__(self, exp):
        if not isinstance(exp, int):
            return NotImplemented
        ring = Ring(self.nvars, self.n)
        if exp < 0:
            return self.inverse() ** (-exp)
        result = ring.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base_sq = base * base if exp > 1 else base
            base, exp = base_sq, exp >> 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Ring(self.nvars, self.n).const(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return (self.nvars, self.n, self.coeffs) == \
               (other.nvars, other.n, other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.n, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def _sorted_items(self):
        return sorted(self.coeffs.items())

    def to_text(self):
        """Canonical text form, e.g. '-1*v^2*z1^-3*g2'.

        Monomials are sorted lexicographically by (v_exp, z_exp, g_exp);
        a coefficient of 1 is omitted when other factors are present.
        """
        if not self.coeffs:
            return "0"
        terms = []
        for (ve, ze, ge), c in self._sorted_items():
            factors = []
            if ve:
                factors.append("v" if ve == 1 else f"v^{ve}")
            for i, e in enumerate(ze, start=1):
                if e:
                    factors.append(f"z{i}" if e == 1 else f"z{i}^{e}")
            for a, e in enumerate(ge, start=1):
                if e:
                    factors.append(f"g{a}" if e == 1 else f"g{a}^{e}")
            if not factors:
                terms.append(str(c))
            elif c == 1:
                terms.append("*".join(factors))
            else:
                terms.append("*".join([str(c)] + factors))
        return " + ".join(terms)

    def to_json_obj(self):
        return [{"c": c, "v": ve, "z": list(ze), "g": list(ge)}
                for (ve, ze, ge), c in self._sorted_items()]

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __repr__(self):
        return f"<RingElem {self.to_text()}>"

    def specialize(self, spec):
        """Evaluate at a Specialization; a ring homomorphism into Q."""
        if spec.n != self.n or len(spec.z_vals) != self.nvars:
            raise ValueError("specialization does not match ring parameters")
        total = Fraction(0)
        for (ve, ze, ge), c in self.coeffs.items():
            term = Fraction(c) * spec.v_val ** ve
            for zv, e in zip(spec.z_vals, ze):
                term *= zv ** e
            for a, e in enumerate(ge, start=1):
                if e:
                    term *= spec.g_vals[a] ** e
            total += term
        return total


_TERM_RE = re.compile(r"^(-?\d+)$|^([vzg])(\d*)(?:\^(-?\d+))?$")


class Ring:
    """Factory bound to fixed parameters (nvars spectral variables, odd n)."""

    def __init__(self, nvars, n):
        if n < 1 or n % 2 == 0:
            raise ValueError("n must be a positive odd integer")
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        self.n = n

    def monomial(self, coeff, v_exp=0, z_exp=None, g_exp=None):
        """Build an element from a raw monomial; g_0 and g-pairs rewritten.

        g_exp may have length n (slot 0 holds g_0 occurrences) or n-1.
        """
        if z_exp is None:
            z_exp = (0,) * self.nvars
        if g_exp is None:
            g_exp = (0,) * (self.n - 1)
        if len(z_exp) != self.nvars:
            raise ValueError("z exponent vector has wrong length")
        coeff, ve, ze, ge = _normalize_monomial(
            coeff, v_exp, z_exp, g_exp, self.n)
        if coeff == 0:
            return self.zero()
        return RingElem(self.nvars, self.n, {(ve, ze, ge): coeff})

    def zero(self):
        return RingElem(self.nvars, self.n, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        if c == 0:
            return self.zero()
        return RingElem(self.nvars, self.n,
                        {(0, (0,) * self.nvars, (0,) * (self.n - 1)): c})

    def v(self, exp=1):
        return self.monomial(1, v_exp=exp)

    def z(self, i, exp=1):
        """The variable z_i, 1-indexed."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"z index {i} out of range")
        ze = [0] * self.nvars
        ze[i - 1] = exp
        return self.monomial(1, z_exp=tuple(ze))

    def g(self, a):
        """The symbol g(a); the argument is reduced mod n, g(0) = -v."""
        a %= self.n
        if a == 0:
            return self.monomial(-1, v_exp=1)
        ge = [0] * (self.n - 1)
        ge[a - 1] = 1
        return self.monomial(1, g_exp=tuple(ge))

    def g_inv(self, a):
        """1/g(a) = g(n-a)/v, defined for a not divisible by n."""
        a %= self.n
        if a == 0:
            raise ValueError("g(0) = -v is not a unit monomial in g")
        return self.g(self.n - a) * self.v(-1)

    def delta(self, a):
        """Indicator of n | a, as a ring constant."""
        return self.one() if a % self.n == 0 else self.zero()

    def from_json_obj(self, obj):
        coeffs = {}
        for t in obj:
            key = (t["v"], tuple(t["z"]), tuple(t["g"]))
            if len(key[1]) != self.nvars or len(key[2]) != self.n - 1:
                raise ValueError("monomial shape does not match ring")
            coeffs[key] = t["c"]
        return RingElem(self.nvars, self.n, coeffs)

    def from_json(self, s):
        return self.from_json_obj(json.loads(s))

    def from_text(self, s):
        """Parse the canonical text form back into an element."""
        s = s.strip()
        if s == "0":
            return self.zero()
        total = self.zero()
        for term in s.split(" + "):
            coeff, ve = 1, 0
            ze = [0] * self.nvars
            ge = [0] * (self.n - 1)
            for factor in term.split("*"):
                m = _TERM_RE.match(factor.strip())
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r}")
                if m.group(1) is not None:
                    coeff *= int(m.group(1))
                    continue
                sym, idx, exp = m.group(2), m.group(3), m.group(4)
                e = int(exp) if exp is not None else 1
                if sym == "v":
                    ve += e
                elif sym == "z":
                    ze[int(idx) - 1] += e
                else:
                    ge[int(idx) - 1] += e
            total = total + self.monomial(coeff, ve, tuple(ze), tuple(ge))
        return total


@dataclass(frozen=True)
class Specialization:
    """An exact-rational evaluation point satisfying the g relations."""

    n: int
    v_val: Fraction
    z_vals: tuple
    g_vals: dict

    def __post_init__(self):
        if self.v_val == 0:
            raise ValueError("v must be nonzero (weights contain v^-1)")
        if any(z == 0 for z in self.z_vals):
            raise ValueError("z values must be nonzero (Laurent variables)")
        for a in range(1, self.n):
            if self.g_vals[a] == 0:
                raise ValueError("g values must be nonzero")
            if self.g_vals[a] * self.g_vals[self.n - a] != self.v_val:
                raise ValueError(f"g({a})*g({self.n - a}) != v")


def random_specialization(seed, n, r):
    """Deterministic random evaluation point for the (r, n) ring.

    g_a is chosen freely for a < n/2 and g_{n-a} = v/g_a, so the defining
    relation holds by construction.
    """
    rng = random.Random(f"specialization:{seed}:{n}:{r}")

    def nonzero():
        num = rng.randint(1, 30) * rng.choice((1, -1))
        den = rng.randint(1, 30)
        return Fraction(num, den)

    v_val = nonzero()
    z_vals = tuple(nonzero() for _ in range(r))
    g_vals = {}
    for a in range(1, (n + 1) // 2):
        g_vals[a] = nonzero()
        g_vals[n - a] = v_val / g_vals[a]
    return Specialization(n=n, v_val=v_val, z_vals=z_vals, g_vals=g_vals)
