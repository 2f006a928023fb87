"""Twisted (Morse-Novikov) cohomology of mapping tori over the circle and of
invariant solvmanifold models, plus taming-cone feasibility for the associated
locally conformally Kahler structures."""

__version__ = "0.1.0"
