"""DP-colouring of planar graphs: plane graphs, covers, pattern scans,
reducibility checks, discharging and random instance generation."""

__version__ = "0.1.0"

from .kernel import BACKEND  # noqa: E402
from .plane import PlaneGraph  # noqa: E402

__all__ = ["BACKEND", "PlaneGraph", "__version__"]
