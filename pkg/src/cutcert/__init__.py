"""cutcert: smallness certification and edge-cut lower-bound verification.

Decides for which c a graph's adjacency matrix M satisfies cJ - M >= 0,
validates pairwise 2-partitions of vertex sets, evaluates the resulting cut
lower bounds, and verifies them exhaustively against real cuts at desk
scale.
"""

from . import bounds, cuts, graphs, linalg, partitions, smallness  # noqa: F401

__all__ = ["bounds", "cuts", "graphs", "linalg", "partitions", "smallness"]
__version__ = "0.1.0"
