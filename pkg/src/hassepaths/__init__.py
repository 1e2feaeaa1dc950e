"""Lattices of lattice paths and Young lattices: exact edge counts of their Hasse diagrams.

Four independent routes compute the same numbers: exhaustive enumeration
(:mod:`hassepaths.order`), exact series expansion (:mod:`hassepaths.series`),
closed-form identities (:mod:`hassepaths.closedforms`) and, for Young
lattices, a corner-cell product (:mod:`hassepaths.young`).
"""

from .paths import *  # noqa: F401,F403
from .series import *  # noqa: F401,F403
from .closedforms import *  # noqa: F401,F403
from .order import *  # noqa: F401,F403
from .young import *  # noqa: F401,F403
from . import paths, series, closedforms, order, young

__version__ = "0.1.0"

__all__ = (
    paths.__all__ + series.__all__ + closedforms.__all__ + order.__all__ + young.__all__
)
