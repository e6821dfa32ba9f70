"""Nomination game with an outsider: closed-form solver, grid oracle and comparative statics."""

from .closed_form import CaseLabel, EquilibriumOutcome, Game, classify_insider, classify_outsider, solve
from .model import ElectionResult, InvalidParams, MatchTicket, ModelParams, Party, Platform, PoliticianId

__all__ = [
    "CaseLabel", "ElectionResult", "EquilibriumOutcome", "Game", "InvalidParams", "MatchTicket",
    "ModelParams", "Party", "Platform", "PoliticianId", "classify_insider", "classify_outsider",
    "solve",
]
__version__ = "0.1.0"
