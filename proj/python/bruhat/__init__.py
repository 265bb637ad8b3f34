"""Bruhat intervals of affine Weyl groups, with the A2 alcove model."""

from ._core import *  # noqa: F401,F403
from ._core import svg  # noqa: F401
