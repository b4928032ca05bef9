"""Exact-arithmetic toolkit for metaplectic symplectic ice.

A six-vertex U-turn lattice model with charge decorations, its
Gelfand-Tsetlin pattern bijection, and machine verification of the
solvability identities the model satisfies: the Yang-Baxter equation for
the four crossing types, the caduceus and fish bend relations, the two
functional equations of the partition function, and the matching between
modified crossing weights and intertwining structure constants.

Everything is computed in an exact commutative ring (integer-coefficient
Laurent polynomials in the spectral variables and a deformation parameter,
with formal Gauss-sum symbols), so every identity check is an exact
equality, never a numerical comparison.
"""

from .ring import Ring, RingElem, Specialization, random_specialization

__all__ = ["Ring", "RingElem", "Specialization", "random_specialization"]
