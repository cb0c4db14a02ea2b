"""
essring
~~~~~~~

Exact computations in centrally essential rings of finite rank.
"""

__author__ = "DA344"
__license__ = "MIT"
__copyright__ = "(c) 2024 present, DA344"
__version__ = "1.0.0a"

__path__ = __import__("pkgutil").extend_path(__path__, __name__)


from .enums import *
from .errors import *
from .config import *
from .linalg import *
from .ring import *
from .center import *
from .ideals import *
from .constructions import *
from .verify import *
from . import verify as verify
