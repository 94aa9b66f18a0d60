"""
Tests for the Ordered Parallel Map
==================================

These tests verify the one contract every parallel stage relies on:
results come back in input order, whatever the pool type and however the
work items finish.
"""

import threading
import time
import unittest

from src.utils.concurrency import ordered_map


def square(x):
    return x * x


def slow_first(x):
    # Earlier items finish later
    time.sleep(0.01 * (5 - x))
    return x


class TestOrderedMap(unittest.TestCase):
    """Validate ordering and callback semantics of ordered_map."""

    def test_serial(self):
        self.assertEqual(ordered_map(square, range(5)), [0, 1, 4, 9, 16])

    def test_empty(self):
        self.assertEqual(ordered_map(square, [], max_workers=4), [])

    def test_threads_keep_input_order(self):
        self.assertEqual(ordered_map(slow_first, range(5), max_workers=5), [0, 1, 2, 3, 4])

    def test_processes_keep_input_order(self):
        self.assertEqual(ordered_map(square, range(6), max_workers=2, use_processes=True), [0, 1, 4, 9, 16, 25])

    def test_serial_runs_in_calling_thread(self):
        caller = threading.get_ident()
        idents = ordered_map(lambda _: threading.get_ident(), range(3), max_workers=1)
        self.assertEqual(set(idents), {caller})

    def test_callback_sees_every_index_in_order(self):
        seen = []
        ordered_map(slow_first, range(5), max_workers=3, on_result=lambda i, r: seen.append((i, r)))
        self.assertEqual(seen, [(i, i) for i in range(5)])

    def test_errors_propagate(self):
        def boom(x):
            if x == 2:
                raise RuntimeError("bad item")
            return x

        with self.assertRaises(RuntimeError):
            ordered_map(boom, range(4), max_workers=2)


if __name__ == '__main__':
    unittest.main()
