"""Exact-arithmetic engine for studying links up to 4-move equivalence.

Subpackages cover the planar-diagram data model, the n-move/Reidemeister
rewriting engine with replayable certificates, breadth-first reduction
search, Fox coloring groups, exact Kauffman bracket / Jones evaluations in
cyclotomic integer rings, the 2-algebraic tangle calculus, the order-96
Coxeter quotient of the 3-strand braid group, and the quartic skein module.
"""

__version__ = "0.1.0"
