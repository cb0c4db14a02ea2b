"""
essring.linalg
~~~~~~~~~~~~~~

Exact linear algebra over the integers, the integers modulo m and the rationals.
"""

from .scalars import *
from .matrix import *
from .submodule import *
