"""Certified clique-minor constructions and exact oracles for Cartesian products."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits next to the package, not inside it
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
