"""Local many-worlds toolkit.

Three things live here: exhaustive hidden-variable searches over
perfect-correlation constraint sets (single-world, world-indexed, and
multivalued tables), a deterministic ensemble simulator in which world-line
copies carry fixed wave-field records through a causal event graph, and
post-hoc audits that verify locality, no-signaling and Born proportions on
the serialized run traces.
"""

from . import audit, correlations, hilbert, hv_search, spacetime, worlds

__version__ = "0.1.0"

__all__ = [
    "audit",
    "correlations",
    "hilbert",
    "hv_search",
    "spacetime",
    "worlds",
    "__version__",
]
