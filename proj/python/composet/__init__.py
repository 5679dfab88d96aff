"""Exact zeta and Mobius computations for subword, composition and
generalized subword order: posets, word embeddings, incidence-algebra
oracles, noncommutative rational series, weighted pair automata, closed-form
generating functions and the Chebyshev conjecture checker."""

from ._composet import *  # noqa: F401,F403
from ._composet import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
