"""Tests for the LRU structure cache."""

import threading
import unittest

from padic_jets.cache import StructureCache


class TestStructureCache(unittest.TestCase):
    def test_put_and_get(self):
        cache = StructureCache(max_entries=4)
        cache.put("a", 1)
        self.assertEqual(cache.get("a"), 1)
        self.assertIsNone(cache.get("b"))
        self.assertEqual(cache.hits, 1)
        self.assertEqual(cache.misses, 1)
        self.assertAlmostEqual(cache.hit_rate, 0.5)

    def test_evicts_least_recently_used(self):
        cache = StructureCache(max_entries=2)
        cache.put("a", 1)
        cache.put("b", 2)
        cache.get("a")
        cache.put("c", 3)
        self.assertIn("a", cache)
        self.assertNotIn("b", cache)
        self.assertEqual(len(cache), 2)

    def test_get_or_compute_runs_once(self):
        cache = StructureCache()
        calls = []

        def compute():
            calls.append(1)
            return {"F": [[1]]}

        first = cache.get_or_compute(("curve", 10), compute)
        second = cache.get_or_compute(("curve", 10), compute)
        self.assertIs(first, second)
        self.assertEqual(len(calls), 1)

    def test_failed_compute_is_not_stored(self):
        cache = StructureCache()

        def boom():
            raise ArithmeticError("no")

        with self.assertRaises(ArithmeticError):
            cache.get_or_compute("k", boom)
        self.assertNotIn("k", cache)

    def test_invalidate(self):
        cache = StructureCache()
        cache.put("a", 1)
        cache.invalidate()
        self.assertEqual(len(cache), 0)
        self.assertIsNone(cache.get("a"))

    def test_concurrent_puts(self):
        cache = StructureCache(max_entries=50)

        def worker(offset):
            for i in range(100):
                cache.put((offset, i), i)
                cache.get((offset, i))

        threads = [threading.Thread(target=worker, args=(t,)) for t in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        self.assertEqual(len(cache), 50)

    def test_len_and_contains_wait_for_the_lock(self):
        cache = StructureCache()
        cache.put("a", 1)
        seen = {}

        def reader():
            seen["len"] = len(cache)
            seen["a"] = "a" in cache

        with cache._lock:
            thread = threading.Thread(target=reader)
            thread.start()
            thread.join(timeout=0.2)
            self.assertTrue(thread.is_alive())
            self.assertEqual(seen, {})
        thread.join()
        self.assertEqual(seen, {"len": 1, "a": True})

    def test_size_never_exceeds_bound_under_writers(self):
        cache = StructureCache(max_entries=20)
        sizes = []
        done = threading.Event()

        def writer(offset):
            for i in range(200):
                cache.put((offset, i), i)

        def reader():
            while not done.is_set():
                sizes.append(len(cache))
                _ = (0, 0) in cache

        watcher = threading.Thread(target=reader)
        watcher.start()
        threads = [threading.Thread(target=writer, args=(t,)) for t in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        done.set()
        watcher.join()
        self.assertTrue(all(0 <= n <= 20 for n in sizes))
        self.assertEqual(len(cache), 20)


if __name__ == "__main__":
    unittest.main()
