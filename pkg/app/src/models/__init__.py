# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Models Package

This package contains all Pydantic models used throughout the engine for:
- Root-system bookkeeping (intervals, root vectors, long words)
- Crystal elements (marginally large tableaux, reading words, signatures)
- Parametrizations (string triangles, Lusztig data)
- Exact series arithmetic and verification reports
- MV paths, quiver decompositions and run configuration

Modules:
- roots: Interval, SignedRootVector, RootVector, LongWord
- tableau: MLTableau, FullTableau, Box, BoxWord, Signature
- params: StringParam, LusztigDatum
- series: UPoly, TruncatedSeries, MatchReport, VerificationReport
- quiver: MVPathDatum, QuiverDecomposition
- run_config: RunConfig
"""

from .roots import Interval, SignedRootVector, RootVector, LongWord, Rank, rank_size
from .tableau import MLTableau, FullTableau, Box, BoxWord, Signature, pair_index, count_pairs
from .params import StringParam, LusztigDatum
from .series import UPoly, TruncatedSeries, Mismatch, MatchReport, KostantCheck, VerificationReport
from .quiver import PathStep, MVPathDatum, Summand, QuiverDecomposition
from .run_config import RunConfig

__all__ = [
    # Root models
    "Interval",
    "SignedRootVector",
    "RootVector",
    "LongWord",
    "Rank",
    "rank_size",

    # Tableau models
    "MLTableau",
    "FullTableau",
    "Box",
    "BoxWord",
    "Signature",
    "pair_index",
    "count_pairs",

    # Parametrizations
    "StringParam",
    "LusztigDatum",

    # Series
    "UPoly",
    "TruncatedSeries",
    "Mismatch",
    "MatchReport",
    "KostantCheck",
    "VerificationReport",

    # MV paths and quivers
    "PathStep",
    "MVPathDatum",
    "Summand",
    "QuiverDecomposition",

    # Run configuration
    "RunConfig",
]
