"""Brute-force finite group engine on Cayley tables."""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .builtins import *  # noqa: F401,F403
from .builtins import __all__ as _builtins_all
from .autos import *  # noqa: F401,F403
from .autos import __all__ as _autos_all

__all__ = _core_all + _builtins_all + _autos_all
