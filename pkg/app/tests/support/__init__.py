# Helper utilities shared by the engine and CLI tests.

from .config import TestSettings, get_test_settings  # noqa: F401
from .crystal import counts_of, elements, element  # noqa: F401
from .top_graph import RANK2_TOP_EDGES, RANK2_DEPTH_COUNTS, RANK2_TOP_SEG, RANK2_TOP_TABLEAUX  # noqa: F401
