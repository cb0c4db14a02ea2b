"""
essring.verify
~~~~~~~~~~~~~~

Checkers for the structure theory of centrally essential rings, run over a corpus.
"""

from .result import *
from .checks import *
from .corpus import *
from .report import *
