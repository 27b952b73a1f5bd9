"""Zero forcing propagation and throttling, exact and small."""

from zft._core import *  # noqa: F401,F403
from zft._core import __doc__  # noqa: F401

RULES = ("Z", "Z+", "Zl", "floorZ", "floorZ+", "floorZl")
