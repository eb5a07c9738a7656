"""Metropolis sampling of decomposable graphs with four interchangeable representations."""
from .almond_tree import AlmondTree
from .graph import Discipline, StructuralError, UndirectedGraph, search, separates
from .ibarra import IbarraGraph
from .junction_tree import JunctionTree
from .potentials import (
    ModelError,
    PotentialModel,
    edge_penalty_model,
    graph_log_prob,
    max_clique_model,
    uniform_model,
)
from .rep_graph import GraphState
from .representation import ContractViolation, MoveKind, MoveReport, Representation, init_trivial
from .sampler import BackendDisagreement, Sampler, SamplerConfig, SamplerTrace, propose_pair, run

__version__ = "0.1.0"

__all__ = [
    "AlmondTree",
    "BackendDisagreement",
    "ContractViolation",
    "Discipline",
    "GraphState",
    "IbarraGraph",
    "JunctionTree",
    "ModelError",
    "MoveKind",
    "MoveReport",
    "PotentialModel",
    "Representation",
    "Sampler",
    "SamplerConfig",
    "SamplerTrace",
    "StructuralError",
    "UndirectedGraph",
    "edge_penalty_model",
    "graph_log_prob",
    "init_trivial",
    "max_clique_model",
    "propose_pair",
    "run",
    "search",
    "separates",
    "uniform_model",
]
