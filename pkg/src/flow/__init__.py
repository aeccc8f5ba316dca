"""Flow algorithms: preflow-push max-flow and Gomory-Hu cut trees."""

from flow.cuttree import CutTree, cut_tree_query, gomory_hu, gomory_hu_network
from flow.maxflow import CapDigraph, cut_capacity, max_flow

__all__ = [
    "CapDigraph",
    "CutTree",
    "cut_capacity",
    "cut_tree_query",
    "gomory_hu",
    "gomory_hu_network",
    "max_flow",
]
