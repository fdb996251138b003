"""shufflecat: a verification kernel for interleaving coherence.

The package builds the free symmetric strict monoidal category on a finite
category, equips it with its multiplication, unit, and strengths, and then
machine-checks the coherence laws of that structure (interleaving
comparisons, their seven compatibility axioms, braid-style equations, and
the pseudo-symmetry of the induced multicategory of free algebras) by
bounded pointwise evaluation of 2-cell expressions.
"""

__version__ = "0.1.0"
