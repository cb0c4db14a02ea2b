"""
essring.ideals
~~~~~~~~~~~~~~

One and two-sided ideals: generation, radicals, socles, complements and idempotents.
"""

from .ideal import *
from .radical import *
from .idempotents import *
from .lattice import *
