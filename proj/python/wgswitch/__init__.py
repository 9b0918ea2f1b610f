"""Two- and three-waveguide coupler simulations."""

from ._wgswitch import *  # noqa: F401,F403
from ._wgswitch import Error, ConfigError, NumericalError  # noqa: F401

__version__ = "0.1.0"
