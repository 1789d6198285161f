"""Kauffman states, δ-gradings and the δ-spread versus dealternating-number bound for knot diagrams."""
from .diagrams import Diagram, braid_closure, mirror, parse_gauss, parse_pd
from .invariants import dalt, delta_spread, fox_alexander, min_fixable_set, state_sum_euler, verify_theorem
from .states import eligible_marked_edges, enumerate_states


__version__ = "0.1"
