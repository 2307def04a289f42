"""Seifert and Tait graphs of knot diagrams, Wicks forms and flat knot synthesis."""

from ._knotforge import *  # noqa: F401,F403
from ._knotforge import __doc__  # noqa: F401
