"""Thin wrapper around scipy's integral max-flow solver."""

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow


def max_flow(num_nodes, edges, source, sink):
    """
    Maximum integral flow.

    Parameters
    ----------
    num_nodes : int
    edges : list of (u, v, capacity)
        Integer capacities; (u, v) pairs must be unique.
    source, sink : int

    Returns
    -------
    value : int
    flow : dict mapping (u, v) to the (positive) flow on that edge
    """
    if not edges:
        return 0, {}
    rows, cols, caps = zip(*edges)
    if max(caps) > np.iinfo(np.int32).max:
        raise OverflowError("edge capacity does not fit the int32 flow solver")
    graph = csr_matrix(
        (np.asarray(caps, dtype=np.int32), (np.asarray(rows), np.asarray(cols))),
        shape=(num_nodes, num_nodes),
    )
    result = maximum_flow(graph, source, sink, method="dinic")
    flow = result.flow.tocoo()
    flows = {
        (int(u), int(v)): int(f)
        for u, v, f in zip(flow.row, flow.col, flow.data)
        if f > 0
    }
    return int(result.flow_value), flows
