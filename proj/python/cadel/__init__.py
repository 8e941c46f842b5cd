"""Python bindings for the cable-driven elbow device toolkit."""

from ._cadel import *  # noqa: F401,F403
from ._cadel import __doc__  # noqa: F401
