# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""LRU caches sized from ``engine.cache_size``.

The backing ``LRUCache`` is built on first use and rebuilt whenever the settings
object changes, so a ``reset_settings()`` followed by a new GKCRYSTAL_CACHE_SIZE
takes effect without re-importing the engine modules.
"""

from collections.abc import MutableMapping
from typing import Dict, Iterator, List, Optional

from cachetools import LRUCache

from src.common.config import EngineSettings, get_settings
from src import logger

_REGISTRY: List["SettingsCache"] = []


class SettingsCache(MutableMapping):
    """Mapping handed to ``cachetools.cached``; delegates to a lazily built LRUCache."""

    def __init__(self, name: str):
        self.name = name
        self._cache: Optional[LRUCache] = None
        self._settings: Optional[EngineSettings] = None

    def _target(self) -> LRUCache:
        settings = get_settings()
        if self._cache is None or self._settings is not settings:
            self._cache = LRUCache(maxsize=settings.CACHE_SIZE)
            self._settings = settings
            logger.debug(f"cache {self.name}: maxsize={settings.CACHE_SIZE}")
        return self._cache

    def __getitem__(self, key):
        return self._target()[key]

    def __setitem__(self, key, value):
        self._target()[key] = value

    def __delitem__(self, key):
        del self._target()[key]

    def __iter__(self) -> Iterator:
        return iter(self._cache) if self._cache is not None else iter(())

    def __len__(self) -> int:
        return len(self._cache) if self._cache is not None else 0

    @property
    def maxsize(self) -> Optional[int]:
        return self._cache.maxsize if self._cache is not None else None

    def clear(self) -> None:
        self._cache = None
        self._settings = None


def settings_cache(name: str) -> SettingsCache:
    cache = SettingsCache(name)
    _REGISTRY.append(cache)
    return cache


def clear_caches() -> None:
    """Drop every memoized result."""
    for cache in _REGISTRY:
        cache.clear()


def cache_sizes() -> Dict[str, Optional[int]]:
    """Current maxsize per named cache; None until the cache is first used."""
    return {cache.name: cache.maxsize for cache in _REGISTRY}
