"""Quaternionic slice polyanalytic functions and their reproducing kernels."""

from ._core import *  # noqa: F401,F403
from ._core import SlicePolyError, __doc__  # noqa: F401
