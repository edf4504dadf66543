"""Size caps for the exhaustive scans.

Caps are soft limits on enumeration size (runtime, not correctness).  The
environment variable IRRLAB_CAP, when set to an integer, overrides every
cap at once; individual call sites may also pass an explicit cap.
"""

import os

TREE_CAP = 18          # free-tree enumeration order
GRAPH_CAP = 7          # labeled connected-graph enumeration order
PATH_CAP = 12          # exact simple-path search order


def effective_cap(default: int) -> int:
    """Return the cap to use: IRRLAB_CAP if set, else the given default."""
    raw = os.environ.get("IRRLAB_CAP")
    if raw is None:
        return default
    return int(raw)
