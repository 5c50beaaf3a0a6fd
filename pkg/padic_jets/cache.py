"""
LRU cache for expensive per-curve structures.

Frobenius matrices dominate the cost of every Coleman computation, and the
same curve is usually queried many times (one sequence per differential,
one verdict per λ). Entries are keyed by the curve signature plus the
requested precision; values are immutable, so a hit can be shared freely.
"""

import logging
import threading
from collections import OrderedDict
from typing import Any, Callable, Hashable, Optional

logger = logging.getLogger("padic_jets")

DEFAULT_CACHE_ENTRIES = 64


class StructureCache:
    """LRU in-memory cache.

    Evicts the least-recently-used entry when ``max_entries`` is exceeded.

    Args:
        max_entries: Maximum number of structures to hold in memory.
    """

    def __init__(self, max_entries: int = DEFAULT_CACHE_ENTRIES):
        self.max_entries = max_entries
        self._cache: "OrderedDict[Hashable, Any]" = OrderedDict()
        self._lock = threading.Lock()
        self._hits = 0
        self._misses = 0

    # ── public interface ────────────────────────────────────────────────

    def get(self, key: Hashable) -> Optional[Any]:
        """Return cached value or ``None`` on miss."""
        with self._lock:
            if key not in self._cache:
                self._misses += 1
                return None
            self._cache.move_to_end(key)
            self._hits += 1
            return self._cache[key]

    def put(self, key: Hashable, value: Any) -> None:
        """Store a value, evicting the LRU entry if the cache is full."""
        with self._lock:
            if key in self._cache:
                self._cache.move_to_end(key)
            self._cache[key] = value
            if len(self._cache) > self.max_entries:
                evicted, _ = self._cache.popitem(last=False)
                logger.debug(f"cache evicted {evicted!r}")

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        """Cached value for *key*, computing and storing it on a miss.

        The computation runs outside the lock; two threads racing on the
        same key both compute, and the later result wins.
        """
        value = self.get(key)
        if value is not None:
            logger.debug(f"cache hit {key!r}")
            return value
        value = compute()
        self.put(key, value)
        return value

    def invalidate(self) -> None:
        with self._lock:
            self._cache.clear()

    # ── stats ───────────────────────────────────────────────────────────

    @property
    def hit_rate(self) -> float:
        total = self._hits + self._misses
        return self._hits / total if total > 0 else 0.0

    @property
    def hits(self) -> int:
        return self._hits

    @property
    def misses(self) -> int:
        return self._misses

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)

    def __contains__(self, key: Hashable) -> bool:
        with self._lock:
            return key in self._cache


frobenius_cache = StructureCache()
