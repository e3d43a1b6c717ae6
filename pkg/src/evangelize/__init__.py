"""Exact solvers for the two-threshold evangelization diffusion model."""

from .clique import solve_mes_clique
from .dense import build_pes_dense, check_dense_preconditions
from .diffusion import DiffusionResult, run_diffusion
from .generate import generate_instance
from .graph import (Graph, GraphFormatError, PreconditionError, SeedSet,
                    ThresholdError, WorkGuardExceeded, parse_graph, read_graph,
                    serialize_graph, write_graph)
from .nd import (TypePartition, compute_type_partition, me_nd_seed, min_vertex_cover,
                 n_i_of, solve_mes_nd, solve_mes_vc)
from .oracle import SolveResult, brute_force_mes, brute_force_pes, pes_via_binary_search
from .reductions import IMInstance, im_to_mes_gadget, verify_gadget_correspondence
from .tree import solve_mes_tree

__version__ = "0.1.0"
