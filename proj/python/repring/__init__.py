"""Exact representation-ring computations (folds, stable and fusion products,
branching, Brauer algebras, KL decomposition matrices).

Diagrams are tuples of parts; the empty diagram is ().
"""

from ._core import *  # noqa: F401,F403
from ._core import run_cli  # noqa: F401
