# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

from typing import Optional

from src.common import load_config
from src import logger

VALID_STRATEGIES = ("bfs", "direct")


class EngineSettings:
    """Resolved engine settings (YAML defaults plus environment overrides)."""
    MAX_RANK: int
    VERIFY_DEPTH: int
    GRAPH_DEPTH: int
    ENUMERATE_DEPTH: int
    STRATEGY: str
    CACHE_SIZE: int
    LOG_LEVEL: str
    AUDIT_PATH: Optional[str]

    def __init__(self, config: Optional[dict] = None):
        config = config if config is not None else load_config()
        engine = config.get('engine', {})
        self.MAX_RANK = int(engine.get('max_rank', 6))
        self.VERIFY_DEPTH = int(engine.get('verify_depth', 6))
        self.GRAPH_DEPTH = int(engine.get('graph_depth', 4))
        self.ENUMERATE_DEPTH = int(engine.get('enumerate_depth', 4))
        self.STRATEGY = str(engine.get('strategy', 'bfs'))
        self.CACHE_SIZE = int(engine.get('cache_size', 65536))
        self.LOG_LEVEL = str(config.get('logging', {}).get('level', 'warning'))
        self.AUDIT_PATH = config.get('audit', {}).get('path')

        if self.STRATEGY not in VALID_STRATEGIES:
            raise ValueError(f"engine.strategy must be one of {VALID_STRATEGIES}, got {self.STRATEGY!r}")
        if self.MAX_RANK < 1:
            raise ValueError("engine.max_rank must be at least 1")
        if self.CACHE_SIZE < 1:
            raise ValueError("engine.cache_size must be positive")
        logger.debug(f"EngineSettings: max_rank={self.MAX_RANK} strategy={self.STRATEGY} cache_size={self.CACHE_SIZE}")


_settings: Optional[EngineSettings] = None


def get_settings() -> EngineSettings:
    """Return the process-wide settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = EngineSettings()
    return _settings


def reset_settings() -> None:
    """Forget cached settings so the next call re-reads config and env."""
    global _settings
    _settings = None
