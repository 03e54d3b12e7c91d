"""Degenerate vertex cuts: k-cores, vertex connectivity, cut search,
extremal constructions and exhaustive verification."""

import json as _json

from ._degcut import *  # noqa: F401,F403
from ._degcut import verify_enumeration_json as _verify_enumeration_json
from ._degcut import verify_graphs_json as _verify_graphs_json


def verify_enumeration(theorem, k, n, min_degree=None, max_edges=None, connected=False, jobs=1):
    """Verify `theorem` ("thm1", "thm2", "thm3", "mindeg") over all labeled graphs of order n."""
    return _json.loads(_verify_enumeration_json(theorem, k, n, min_degree, max_edges, connected, jobs))


def verify_graphs(theorem, k, graphs):
    """Verify `theorem` over an explicit list of graphs."""
    return _json.loads(_verify_graphs_json(theorem, k, list(graphs)))
