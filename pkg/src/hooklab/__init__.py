"""Exact-arithmetic toolkit for skew hook-length identities.

Subpackages cover partition/tableau combinatorics, sparse rational
polynomials, excited diagrams, factorial Schur polynomials, hook-length
sum identities, the free-fermion five-vertex model, and a beta-deformed
polynomial family.  Everything computes over exact rationals; no floats
appear on any identity path.
"""

__version__ = "0.1.0"
