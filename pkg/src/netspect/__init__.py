"""netspect: network reconstruction and hidden-node detection from
evolutionary-game payoff time series via spectral strength-degree scaling."""

from .game import GameParams, PayoffSeries, fermi_probability, round_payoff, simulate
from .graphs import Graph, GraphModelSpec, degree_sequence, generate
from .inference import (DegreeEstimate, ReconstructionResult, SimulationProvider,
                        estimate_degrees, fit_linearity, hidden_bounds,
                        identify_neighbors, reconstruct)
from .spectral import StrengthVector, dft_magnitudes, strength

__version__ = "0.1.0"

__all__ = [
    "GameParams", "PayoffSeries", "fermi_probability", "round_payoff",
    "simulate", "Graph", "GraphModelSpec", "degree_sequence", "generate",
    "DegreeEstimate", "ReconstructionResult", "SimulationProvider",
    "estimate_degrees", "fit_linearity", "hidden_bounds",
    "identify_neighbors", "reconstruct", "StrengthVector", "dft_magnitudes",
    "strength",
]
