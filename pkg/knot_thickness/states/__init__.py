from .kauffman import (
    DEFAULT_MAX_STATES,
    KauffmanState,
    MarkedEdge,
    domains,
    eligible_marked_edges,
    enumerate_states,
    iter_states,
    marked_edge,
    state_count_oracle,
)
